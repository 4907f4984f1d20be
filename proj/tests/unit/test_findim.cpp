#include <gtest/gtest.h>

#include <random>

#include "fiberlab/error.hpp"
#include "fiberlab/findim/analysis.hpp"
#include "fiberlab/presentation/fiber.hpp"
#include "fiberlab/presentation/representation.hpp"

using namespace fiberlab;

namespace {

std::string corpus(const std::string& name) { return std::string(FIBERLAB_CORPUS_DIR) + "/" + name; }

StructureConstAlgebra fiber_of(const std::string& file, const Scalar& value) {
  const auto p = load_presentation(corpus(file));
  return build_fiber(p, CentralCharacter{{value}});
}

StructureConstAlgebra taft(int n) { return fiber_of(n == 2 ? "taft_inf_2.hopf" : "taft_inf_3.hopf", Scalar(0)); }

NumericModule block_sum(const std::vector<const NumericModule*>& parts) {
  Eigen::Index total = 0;
  for (const auto* p : parts) total += p->front().rows();
  NumericModule out(parts.front()->size(), CMatrix::Zero(total, total));
  Eigen::Index off = 0;
  for (const auto* p : parts) {
    const Eigen::Index d = p->front().rows();
    for (size_t k = 0; k < out.size(); ++k) out[k].block(off, off, d, d) = (*p)[k];
    off += d;
  }
  return out;
}

// Span dimension of a set of exact vectors.
size_t span_dim(const std::vector<SVector>& v, size_t dim) { return v.empty() ? 0 : span_basis(v, dim).size(); }

}  // namespace

TEST(RegularRep, Examples) {
  const auto one = truncated_polynomial_algebra(1);
  EXPECT_EQ(regular_rep(one).front(), SMatrix{{1}});
  const auto m2 = matrix_algebra(2);
  EXPECT_EQ(regular_rep(m2)[0].trace(), Scalar(2));
  const auto t = taft(2);
  EXPECT_EQ(regular_rep(t)[1].trace(), Scalar(0));  // basis 1, g, x, g x
}

TEST(RegularRep, IsHomomorphism) {
  for (const auto& a : {matrix_algebra(2), taft(2), fiber_of("ex3_8.hopf", Scalar(-1))}) {
    const auto l = regular_rep(a);
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j) {
        SMatrix rhs(a.dim, a.dim);
        for (size_t k = 0; k < a.dim; ++k) rhs += l[k].scaled(a.sc[i][j][k]);
        EXPECT_EQ(l[i] * l[j], rhs);
      }
  }
}

TEST(Radical, Examples) {
  EXPECT_TRUE(jacobson_radical(matrix_algebra(2)).radical_basis.empty());
  const auto t2 = jacobson_radical(truncated_polynomial_algebra(2));
  ASSERT_EQ(t2.radical_basis.size(), 1u);
  EXPECT_EQ(t2.radical_basis[0], (SVector{0, 1}));
  EXPECT_EQ(t2.ss_dim, 1u);
  const auto r = jacobson_radical(taft(2));
  EXPECT_EQ(r.ss_dim, 2u);
  // Oracle: span{x, g x} in the basis (1, g, x, g x).
  const std::vector<SVector> expected = {{0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(span_basis(r.radical_basis, 4), span_basis(expected, 4));
}

TEST(Sd, Examples) {
  const auto e0 = fiber_of("ex3_8.hopf", Scalar(1));
  EXPECT_EQ(sd(e0), 2u);
  EXPECT_EQ(irr_count(e0), 2u);
  const auto e1 = fiber_of("ex3_8.hopf", Scalar(-1));
  EXPECT_EQ(sd(e1), 4u);
  EXPECT_EQ(irr_count(e1), 1u);
  EXPECT_EQ(sd(taft(2)), 2u);
  EXPECT_EQ(sd(fiber_of("taft_inf_2.hopf", Scalar(1))), 4u);
  EXPECT_EQ(sd(taft(3)), 3u);
  EXPECT_EQ(sd(fiber_of("taft_inf_3.hopf", Scalar(2))), 9u);
}

TEST(Blocks, Examples) {
  const auto m = direct_product(matrix_algebra(2), truncated_polynomial_algebra(1));
  EXPECT_EQ(block_dims(m, jacobson_radical(m), 0).block_dims, (std::vector<size_t>{1, 2}));
  const auto h0 = fiber_of("ex3_2.hopf", Scalar(1));
  EXPECT_EQ(block_dims(h0, jacobson_radical(h0), 0).block_dims, (std::vector<size_t>{1, 1, 1, 1}));
  const auto h1 = fiber_of("ex3_2.hopf", Scalar(-1));
  EXPECT_EQ(block_dims(h1, jacobson_radical(h1), 0).block_dims, (std::vector<size_t>{2}));
}

TEST(Irreducibles, Examples) {
  const auto m2 = matrix_algebra(2);
  const auto am = analyze_algebra(m2, 3);
  ASSERT_EQ(am.irreducibles.size(), 1u);
  EXPECT_EQ(am.irreducibles[0][0].rows(), 2);
  EXPECT_LT(module_residual(m2, am.irreducibles[0]), 1e-8);

  const auto t = taft(2);
  const auto at = analyze_algebra(t, 3);
  ASSERT_EQ(at.irreducibles.size(), 2u);
  std::vector<double> g_values;
  for (const auto& v : at.irreducibles) {
    ASSERT_EQ(v[0].rows(), 1);
    EXPECT_LT(std::abs(v[2](0, 0)), 1e-9);  // x acts by zero
    g_values.push_back(v[1](0, 0).real());
  }
  std::sort(g_values.begin(), g_values.end());
  EXPECT_NEAR(g_values[0], -1.0, 1e-9);
  EXPECT_NEAR(g_values[1], 1.0, 1e-9);

  const auto e1 = fiber_of("ex3_8.hopf", Scalar(-1));
  const auto ae = analyze_algebra(e1, 3);
  ASSERT_EQ(ae.irreducibles.size(), 1u);
  EXPECT_EQ(ae.irreducibles[0][0].rows(), 2);
  EXPECT_LT(module_residual(e1, ae.irreducibles[0]), 1e-8);
}

TEST(Irreducibles, SeedIndependentOrdering) {
  const auto t = taft(3);
  const auto a = analyze_algebra(t, 1), b = analyze_algebra(t, 99);
  ASSERT_EQ(a.irreducibles.size(), b.irreducibles.size());
  for (size_t i = 0; i < a.irreducibles.size(); ++i)
    EXPECT_LT((a.irreducibles[i][1] - b.irreducibles[i][1]).norm(), 1e-8);
}

TEST(Multiplicities, Examples) {
  const auto t = taft(2);
  const auto at = analyze_algebra(t, 0);
  EXPECT_EQ(composition_multiplicities(t, at.blocks, to_numeric(regular_rep(t))), (std::vector<long>{2, 2}));
  const auto m2 = matrix_algebra(2);
  const auto am = analyze_algebra(m2, 0);
  EXPECT_EQ(composition_multiplicities(m2, am.blocks, to_numeric(regular_rep(m2))), (std::vector<long>{2}));
}

TEST(Multiplicities, NonChevalleyTensorWithDual) {
  const auto p = load_presentation(corpus("ex3_8.hopf"));
  const CentralCharacter minus{{Scalar(-1)}};
  const auto f1 = build_fiber(p, minus);
  const auto a1 = analyze_algebra(f1, 0);
  const NumericRep w = from_basis_action(p, minus, a1.irreducibles[0]);
  ASSERT_TRUE(verify_rep(p, w).ok);
  const NumericRep ww = tensor_rep(p, w, dual_rep(p, w));
  const auto f0 = build_fiber(p, identity_character(*p.central));
  const auto a0 = analyze_algebra(f0, 0);
  const auto mod = basis_action(p, ww);
  EXPECT_EQ(composition_multiplicities(f0, a0.blocks, mod), (std::vector<long>{2, 2}));
  EXPECT_FALSE(is_semisimple_module(a0.radical, mod));
}

TEST(SemisimpleModule, Examples) {
  const auto t = taft(2);
  const auto r = jacobson_radical(t);
  const auto p = load_presentation(corpus("taft_inf_2.hopf"));
  EXPECT_TRUE(is_semisimple_module(r, basis_action(p, trivial_rep(p))));
  EXPECT_FALSE(is_semisimple_module(r, regular_rep(t)));
  const auto m2 = matrix_algebra(2);
  EXPECT_TRUE(is_semisimple_module(jacobson_radical(m2), regular_rep(m2)));
}

TEST(Abelianization, Examples) {
  const auto m2 = matrix_algebra(2);
  EXPECT_EQ(abelianization(m2).algebra.dim, 0u);
  EXPECT_EQ(one_dim_rep_count(m2), 0u);
  EXPECT_EQ(one_dim_rep_count(taft(2)), 2u);
  EXPECT_EQ(one_dim_rep_count(fiber_of("ex3_2.hopf", Scalar(1))), 4u);
}

TEST(Chevalley, Examples) {
  const auto h32 = build_total_algebra(load_presentation(corpus("ex3_2.hopf")));
  const auto r32 = jacobson_radical(h32);
  EXPECT_TRUE(chevalley_property(h32, r32).holds);
  EXPECT_EQ(r32.radical_basis.size(), 8u);
  // J = (y): the ideal generated by y has dimension 8 as well and equals J.
  const auto p32 = load_presentation(corpus("ex3_2.hopf"));
  const size_t y = static_cast<size_t>(p32.basis_index({3}));
  const auto ideal_y = two_sided_ideal(h32, {h32.basis_vector(y)});
  EXPECT_EQ(span_basis(ideal_y, 16), span_basis(r32.radical_basis, 16));

  const auto h38 = build_total_algebra(load_presentation(corpus("ex3_8.hopf")));
  const auto c38 = chevalley_property(h38, jacobson_radical(h38));
  EXPECT_FALSE(c38.holds);
  ASSERT_TRUE(c38.witness.has_value());

  const auto q8 = build_total_algebra(load_presentation(corpus("q8_central.hopf")));
  const auto rq = jacobson_radical(q8);
  EXPECT_TRUE(rq.radical_basis.empty());
  EXPECT_TRUE(chevalley_property(q8, rq).holds);
  EXPECT_THROW(chevalley_property(matrix_algebra(2), jacobson_radical(matrix_algebra(2))), Error);
}

// Property suites.

std::vector<StructureConstAlgebra> property_algebras() {
  std::vector<StructureConstAlgebra> out = {matrix_algebra(2), truncated_polynomial_algebra(3),
                                            direct_product(matrix_algebra(2), truncated_polynomial_algebra(2))};
  for (const char* f : {"taft_inf_2.hopf", "taft_inf_3.hopf", "ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"}) {
    const auto p = load_presentation(corpus(f));
    for (const auto& chi : characters_of_C(*p.central).characters) out.push_back(build_fiber(p, chi));
  }
  for (const char* f : {"ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"})
    out.push_back(build_total_algebra(load_presentation(corpus(f))));
  return out;
}

TEST(Properties, RadicalIsNilpotentIdeal) {
  for (const auto& a : property_algebras()) {
    const auto r = jacobson_radical(a);
    const auto basis = r.radical_basis;
    for (const auto& v : basis)
      for (size_t i = 0; i < a.dim; ++i) {
        EXPECT_TRUE(in_span(basis, a.multiply(a.basis_vector(i), v)));
        EXPECT_TRUE(in_span(basis, a.multiply(v, a.basis_vector(i))));
      }
    // J^k = 0 for some k <= dim.
    std::vector<SVector> power = basis;
    size_t k = 1;
    while (span_dim(power, a.dim) > 0 && k <= a.dim) {
      std::vector<SVector> next;
      for (const auto& u : power)
        for (const auto& v : basis) next.push_back(a.multiply(u, v));
      power.clear();
      for (auto& v : next)
        if (!std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) power.push_back(v);
      ++k;
    }
    EXPECT_EQ(span_dim(power, a.dim), 0u);
  }
}

TEST(Properties, DimensionCounts) {
  for (const auto& a : property_algebras()) {
    const auto an = analyze_algebra(a, 5);
    EXPECT_EQ(an.sd + an.radical.radical_basis.size(), a.dim);
    EXPECT_LE(an.irr_count, an.sd);
    size_t sq = 0;
    for (size_t n : an.blocks.block_dims) sq += n * n;
    EXPECT_EQ(sq, an.sd);
    EXPECT_EQ(an.blocks.block_dims.size(), an.irr_count);
    for (const auto& v : an.irreducibles) EXPECT_LT(module_residual(a, v), 1e-6);
  }
}

TEST(Properties, MultiplicityAdditivity) {
  std::mt19937_64 rng(11);
  for (const auto& a : property_algebras()) {
    const auto an = analyze_algebra(a, 2);
    const NumericModule reg = to_numeric(regular_rep(a));
    const auto mreg = composition_multiplicities(a, an.blocks, reg);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<const NumericModule*> parts;
      std::vector<long> expected(an.irreducibles.size(), 0);
      std::uniform_int_distribution<size_t> pick(0, an.irreducibles.size());
      for (int k = 0; k < 3; ++k) {
        const size_t i = pick(rng);
        if (i == an.irreducibles.size()) {
          parts.push_back(&reg);
          for (size_t j = 0; j < expected.size(); ++j) expected[j] += mreg[j];
        } else {
          parts.push_back(&an.irreducibles[i]);
          expected[i] += 1;
        }
      }
      const auto sum = block_sum(parts);
      EXPECT_EQ(composition_multiplicities(a, an.blocks, sum), expected);
      if (is_semisimple_module(an.radical, sum)) {
        long total = 0;
        for (size_t j = 0; j < expected.size(); ++j) total += expected[j] * static_cast<long>(an.blocks.block_dims[j]);
        EXPECT_EQ(total, sum.front().rows());
      }
    }
  }
}

TEST(Properties, ChevalleyImpliesSemisimpleTensors) {
  for (const auto& a : property_algebras()) {
    if (!a.coalgebra) continue;
    const auto an = analyze_algebra(a, 4);
    const bool chev = chevalley_property(a, an.radical).holds;
    bool all_semisimple = true;
    for (const auto& v : an.irreducibles)
      for (const auto& w : an.irreducibles)
        all_semisimple = all_semisimple && is_semisimple_module(an.radical, tensor_modules(a, v, w));
    if (chev) EXPECT_TRUE(all_semisimple);
  }
}
