#include <gtest/gtest.h>

#include "fiberlab/cayley/discriminant.hpp"
#include "fiberlab/error.hpp"
#include "fiberlab/findim/analysis.hpp"

using namespace fiberlab;

namespace fiberlab {
void PrintTo(const CPoly& p, std::ostream* os) { *os << p.to_string(); }
void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
}  // namespace fiberlab

namespace {

std::string corpus(const std::string& name) { return std::string(FIBERLAB_CORPUS_DIR) + "/" + name; }

struct Loaded {
  HopfPresentation pres;
  TraceData td;
};

Loaded load(const std::string& file) {
  Loaded l{load_presentation(corpus(file)), {}};
  l.td = regular_trace_over_C(l.pres);
  return l;
}

CPoly sym(const Loaded& l, int power = 1) { return CPoly::symbol(l.pres.central, 0, power); }

// Monic gcd of all k x k minors by direct enumeration (primitive variable only).
Poly brute_force_minor_gcd(const TraceData& td, size_t k) {
  const size_t n = td.gram.rows();
  PMatrix p(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) p(i, j) = td.gram(i, j).to_poly(0);
  Poly g;
  std::vector<size_t> rows(k), cols(k);
  std::vector<bool> rmask(n, false), cmask(n, false);
  std::fill(rmask.begin(), rmask.begin() + static_cast<long>(k), true);
  do {
    rows.clear();
    for (size_t i = 0; i < n; ++i)
      if (rmask[i]) rows.push_back(i);
    std::fill(cmask.begin(), cmask.end(), false);
    std::fill(cmask.begin(), cmask.begin() + static_cast<long>(k), true);
    do {
      cols.clear();
      for (size_t i = 0; i < n; ++i)
        if (cmask[i]) cols.push_back(i);
      const Poly d = det(p.submatrix(rows, cols));
      if (!d.is_zero()) g = g.is_zero() ? d.monic() : poly_gcd_monic(g, d);
    } while (std::prev_permutation(cmask.begin(), cmask.end()));
  } while (std::prev_permutation(rmask.begin(), rmask.end()));
  return g;
}

}  // namespace

TEST(Trace, TaftGram) {
  const auto l = load("taft_inf_2.hopf");
  EXPECT_EQ(l.td.base.kind, BaseKind::Univariate);
  const CPoly t = sym(l);
  const std::vector<CPoly> diag = {CPoly(4), CPoly(4), t * CPoly(4), t * CPoly(-4)};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) EXPECT_EQ(l.td.gram(i, j), i == j ? diag[i] : CPoly(0)) << i << "," << j;
  EXPECT_EQ(discriminant(l.td), t * t * CPoly(-256));
}

TEST(Trace, NonChevalleyGram) {
  const auto l = load("ex3_8.hopf");
  EXPECT_EQ(l.td.base.kind, BaseKind::Finite);
  const CPoly z = sym(l);
  const CPoly w = (CPoly(1) - z) * CPoly(2);
  const std::vector<CPoly> diag = {CPoly(4), z * CPoly(4), w, w};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) EXPECT_EQ(l.td.gram(i, j), i == j ? diag[i] : CPoly(0)) << i << "," << j;
  // det = 64 z (1 - z)^2 = 128 z (1 - z) = -128 (1 - z) using z^2 = 1.
  EXPECT_EQ(discriminant(l.td), (CPoly(1) - z) * CPoly(-128));
}

TEST(Trace, UnitTraceIsRank) {
  for (const auto* f : {"taft_inf_2.hopf", "taft_inf_3.hopf", "ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"}) {
    const auto l = load(f);
    const int unit = l.pres.basis_index(Word{});
    EXPECT_EQ(l.td.trace_on_basis[static_cast<size_t>(unit)], CPoly(static_cast<long>(l.td.algebra.dim))) << f;
  }
}

TEST(Trace, GramSymmetricAndSpecializes) {
  for (const auto* f : {"taft_inf_2.hopf", "taft_inf_3.hopf", "ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"}) {
    const auto l = load(f);
    const auto space = characters_of_C(*l.pres.central);
    EXPECT_EQ(l.td.gram, l.td.gram.transpose()) << f;
    for (const auto& chi : space.characters) {
      const auto fib = specialize(l.td.algebra, chi);
      const auto reg = regular_rep(fib);
      SMatrix direct(fib.dim, fib.dim);
      for (size_t i = 0; i < fib.dim; ++i)
        for (size_t j = 0; j < fib.dim; ++j) direct(i, j) = (reg[i] * reg[j]).trace();
      const SMatrix g = specialize_gram(l.td, chi);
      EXPECT_EQ(g, direct) << f << " " << label(*l.pres.central, chi);
      EXPECT_EQ(rank(g), sd(fib)) << f << " " << label(*l.pres.central, chi);
    }
  }
}

TEST(Newton, Examples) {
  EXPECT_EQ(newton_coefficients(std::vector<Scalar>{3, 5}), (std::vector<Scalar>{3, 2}));
  EXPECT_EQ(newton_coefficients(std::vector<Scalar>{2, 2}), (std::vector<Scalar>{2, 1}));
  EXPECT_EQ(newton_coefficients(std::vector<Scalar>{0, 0}), (std::vector<Scalar>{0, 0}));
}

TEST(Newton, MatchesDeterminantExpansion) {
  // Characteristic polynomial of a 3x3 matrix: c_k equals the sum of principal k-minors.
  const SMatrix m{{1, 2, 0}, {3, -1, 4}, {Scalar::rational(1, 2), 0, 2}};
  std::vector<Scalar> traces;
  SMatrix p = m;
  for (int k = 0; k < 3; ++k) {
    traces.push_back(p.trace());
    p = p * m;
  }
  const auto c = newton_coefficients(traces);
  EXPECT_EQ(c[0], m.trace());
  Scalar e2;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) e2 += m(i, i) * m(j, j) - m(i, j) * m(j, i);
  EXPECT_EQ(c[1], e2);
  EXPECT_EQ(c[2], det(m));
}

TEST(CayleyHamilton, CorpusPasses) {
  for (const auto* f : {"taft_inf_2.hopf", "ex3_8.hopf"}) {
    const auto l = load(f);
    const auto rep = verify_cayley_hamilton(l.pres, l.td, l.td.algebra.dim, 20, 7);
    EXPECT_EQ(rep.elements_checked, 20u);
  }
}

TEST(CayleyHamilton, WrongDegreeFails) {
  const auto l = load("ex3_8.hopf");
  try {
    verify_cayley_hamilton(l.pres, l.td, 3, 1, 1);
    FAIL() << "expected CHViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CHViolation);
    EXPECT_NE(std::string(e.what()).find("tr(1) = 4"), std::string::npos);
  }
}

TEST(Discriminant, TaftIdeals) {
  const auto l = load("taft_inf_2.hopf");
  const auto md4 = modified_discriminant_ideal(l.td, 4);
  ASSERT_EQ(md4.form, IdealForm::Principal);
  EXPECT_EQ(md4.generator, Poly::monomial(Scalar(1), 2));
  EXPECT_EQ(modified_discriminant_ideal(l.td, 2).form, IdealForm::Unit);
  EXPECT_EQ(modified_discriminant_ideal(l.td, 5).form, IdealForm::Zero);
  for (size_t k = 1; k <= 4; ++k) {
    const auto md = modified_discriminant_ideal(l.td, k);
    const Poly oracle = brute_force_minor_gcd(l.td, k);
    if (md.form == IdealForm::Unit) {
      EXPECT_EQ(oracle, Poly(1)) << k;
    } else {
      EXPECT_EQ(md.generator, oracle) << k;
    }
  }
  const auto sub4 = discriminant_ideal_sub(l.td, 4);
  EXPECT_EQ(sub4.generator, Poly::monomial(Scalar(1), 2));
  EXPECT_TRUE(same_zero_locus(sub4, md4));
  EXPECT_EQ(discriminant_ideal_sub(l.td, 1).form, IdealForm::Unit);
}

TEST(Discriminant, Taft3MinorsOracle) {
  const auto l = load("taft_inf_3.hopf");
  for (size_t k : {3u, 4u, 9u}) {
    const auto md = modified_discriminant_ideal(l.td, k);
    const Poly oracle = brute_force_minor_gcd(l.td, k);
    EXPECT_EQ(md.form == IdealForm::Unit ? Poly(1) : md.generator, oracle) << k;
  }
}

TEST(Discriminant, NonChevalleyIdeals) {
  const auto l = load("ex3_8.hopf");
  const CPoly z = sym(l);
  const auto md3 = modified_discriminant_ideal(l.td, 3);
  ASSERT_EQ(md3.form, IdealForm::Subspace);
  ASSERT_EQ(md3.basis.size(), 1u);
  // (1 - z) spans the ideal: the basis vector is a nonzero multiple of it.
  const SVector target = finite_coordinates(*l.pres.central, CPoly(1) - z);
  EXPECT_EQ(span_basis({target}, 2), md3.basis);
  const auto locus = zero_locus(md3);
  ASSERT_EQ(locus.points.size(), 1u);
  EXPECT_EQ(locus.points.front().values, std::vector<Scalar>{Scalar(1)});
  const auto sub4 = discriminant_ideal_sub(l.td, 4);
  EXPECT_TRUE(same_zero_locus(sub4, modified_discriminant_ideal(l.td, 4)));
  EXPECT_EQ(modified_discriminant_ideal(l.td, 2).form, IdealForm::Unit);
}

TEST(Discriminant, SixteenDimIsZero) {
  const auto l = load("ex3_2.hopf");
  EXPECT_TRUE(discriminant(l.td).is_zero());
  for (size_t k = 1; k <= 9; ++k) {
    const auto f = modified_discriminant_ideal(l.td, k).form;
    EXPECT_TRUE(f == IdealForm::Unit || f == IdealForm::Zero) << k;
  }
}

TEST(ZeroLocus, Examples) {
  const auto l = load("taft_inf_2.hopf");
  IdealDescriptor id;
  id.base = l.td.base;
  id.form = IdealForm::Principal;
  id.generator = Poly::monomial(Scalar(1), 2);
  EXPECT_EQ(zero_locus(id).roots, std::vector<Scalar>{Scalar(0)});
  id.generator = Poly(std::vector<Scalar>{Scalar(-1), 0, 1});  // T^2 - 1
  EXPECT_EQ(zero_locus(id).roots, (std::vector<Scalar>{Scalar(-1), Scalar(1)}));
  id.generator = Poly(std::vector<Scalar>{Scalar(-2), 0, 1});  // T^2 - 2
  EXPECT_THROW(zero_locus(id), Error);
  id.form = IdealForm::Unit;
  EXPECT_TRUE(zero_locus(id).roots.empty());
  id.form = IdealForm::Zero;
  EXPECT_TRUE(zero_locus(id).all);
}

TEST(DiscTable, TaftTable) {
  for (int n : {2, 3}) {
    const auto l = load(n == 2 ? "taft_inf_2.hopf" : "taft_inf_3.hopf");
    const auto profile = sd_profile(l.pres, l.td.algebra);
    const size_t nn = static_cast<size_t>(n * n);
    const auto t = discriminant_table(l.td, profile, 1, nn + 1);
    EXPECT_TRUE(t.chain_ok);
    EXPECT_EQ(t.lowest_level, static_cast<size_t>(n + 1));
    for (const auto& row : t.rows) {
      const LocusClass want = row.k <= static_cast<size_t>(n) ? LocusClass::Empty
                              : row.k <= nn                   ? LocusClass::Identity
                                                              : LocusClass::All;
      EXPECT_EQ(row.symbolic_class, want) << n << " k=" << row.k;
      EXPECT_EQ(row.sd_class, want) << n << " k=" << row.k;
      EXPECT_TRUE(row.sandwich) << n << " k=" << row.k;
    }
  }
}

TEST(DiscTable, ChainAndSandwichOnCorpus) {
  for (const auto* f : {"ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"}) {
    const auto l = load(f);
    const auto profile = sd_profile(l.pres, l.td.algebra);
    const auto t = discriminant_table(l.td, profile, 1, l.td.algebra.dim + 1);
    EXPECT_TRUE(t.chain_ok) << f;
    for (const auto& row : t.rows) EXPECT_TRUE(row.sandwich) << f << " k=" << row.k;
  }
}

TEST(DiscTable, LowestLevels) {
  const std::vector<std::pair<const char*, size_t>> want = {{"ex3_8.hopf", 3}, {"ex3_2.hopf", 5}, {"q8_central.hopf", 5}};
  for (const auto& [f, ell] : want) {
    const auto l = load(f);
    EXPECT_EQ(lowest_level(sd_profile(l.pres, l.td.algebra)), ell) << f;
  }
}
