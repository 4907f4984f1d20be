#include "fiberlab/findim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "fiberlab/error.hpp"

namespace fiberlab {

namespace {

bool is_zero_vector(const SVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

size_t leading_index(const SVector& v) {
  size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  return p;
}

// Reduces v modulo an rref basis so that every pivot coordinate becomes zero.
SVector reduce(const std::vector<SVector>& rref_basis, SVector v) {
  for (const auto& b : rref_basis) {
    const size_t p = leading_index(b);
    if (p == b.size() || v[p].is_zero()) continue;
    const Scalar f = v[p];
    for (size_t k = p; k < v.size(); ++k)
      if (!b[k].is_zero()) v[k] -= f * b[k];
  }
  return v;
}

CVector to_cvector(const SVector& v) {
  CVector c(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) c(static_cast<Eigen::Index>(i)) = v[i].to_complex();
  return c;
}

std::vector<CMatrix> numeric_left_mults(const StructureConstAlgebra& a) {
  std::vector<CMatrix> out;
  for (size_t i = 0; i < a.dim; ++i) out.push_back(to_numeric(a.left_mult(a.basis_vector(i))));
  return out;
}

CMatrix combine(const std::vector<CMatrix>& mats, const CVector& coeffs, Eigen::Index n) {
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (std::abs(coeffs(i)) > 0) m += coeffs(i) * mats[static_cast<size_t>(i)];
  return m;
}

[[noreturn]] void certification_failed(const std::string& what) { throw Error(ErrorKind::CertificationFailed, what); }

long round_checked(double x, const std::string& what) {
  const double r = std::round(x);
  if (std::abs(x - r) > kRoundingTolerance)
    certification_failed(what + ": value " + std::to_string(x) + " is not within tolerance of an integer");
  return static_cast<long>(r);
}

}  // namespace

CMatrix to_numeric(const SMatrix& m) {
  CMatrix c(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return c;
}

NumericModule to_numeric(const ExactModule& m) {
  NumericModule out;
  out.reserve(m.size());
  for (const auto& x : m) out.push_back(to_numeric(x));
  return out;
}

std::vector<SVector> two_sided_ideal(const StructureConstAlgebra& a, const std::vector<SVector>& generators) {
  std::vector<SVector> basis = span_basis(generators, a.dim);
  if (generators.empty()) basis.clear();
  for (;;) {
    std::vector<SVector> candidates = basis;
    for (const auto& v : basis)
      for (size_t i = 0; i < a.dim; ++i) {
        candidates.push_back(a.multiply(a.basis_vector(i), v));
        candidates.push_back(a.multiply(v, a.basis_vector(i)));
      }
    std::vector<SVector> next = candidates.empty() ? std::vector<SVector>{} : span_basis(candidates, a.dim);
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
}

QuotientData quotient_algebra(const StructureConstAlgebra& a, const std::vector<SVector>& ideal_basis) {
  const std::vector<SVector> basis = ideal_basis.empty() ? ideal_basis : span_basis(ideal_basis, a.dim);
  std::vector<bool> pivot(a.dim, false);
  for (const auto& b : basis) pivot[leading_index(b)] = true;
  QuotientData q;
  for (size_t j = 0; j < a.dim; ++j)
    if (!pivot[j]) q.lift.push_back(j);
  const size_t qd = q.lift.size();

  q.projection = SMatrix(qd, a.dim);
  for (size_t j = 0; j < a.dim; ++j) {
    const SVector r = reduce(basis, a.basis_vector(j));
    for (size_t t = 0; t < qd; ++t) q.projection(t, j) = r[q.lift[t]];
  }

  StructureConstAlgebra& b = q.algebra;
  b.dim = qd;
  for (size_t t = 0; t < qd; ++t) b.basis_labels.push_back(a.basis_labels.at(q.lift[t]));
  b.sc.assign(qd, std::vector<SVector>(qd));
  for (size_t s = 0; s < qd; ++s)
    for (size_t t = 0; t < qd; ++t) b.sc[s][t] = q.projection.apply(a.sc[q.lift[s]][q.lift[t]]);
  b.unit = q.projection.apply(a.unit);
  return q;
}

RadicalData jacobson_radical(const StructureConstAlgebra& a) {
  SVector tr(a.dim);
  for (size_t k = 0; k < a.dim; ++k) tr[k] = a.trace(a.basis_vector(k));
  SMatrix gram(a.dim, a.dim);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      Scalar s;
      for (size_t k = 0; k < a.dim; ++k)
        if (!a.sc[i][j][k].is_zero()) s += a.sc[i][j][k] * tr[k];
      gram(i, j) = s;
    }
  RadicalData r;
  r.radical_basis = kernel(gram);
  if (!r.radical_basis.empty()) r.radical_basis = span_basis(r.radical_basis, a.dim);
  r.ss_dim = a.dim - r.radical_basis.size();
  r.quotient = quotient_algebra(a, r.radical_basis);
  r.quotient_projection = r.quotient.projection;
  return r;
}

std::vector<SVector> center(const StructureConstAlgebra& a) {
  SMatrix stacked(a.dim * a.dim, a.dim);
  for (size_t b = 0; b < a.dim; ++b) {
    const SVector e = a.basis_vector(b);
    const SMatrix d = a.right_mult(e) - a.left_mult(e);
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j) stacked(b * a.dim + i, j) = d(i, j);
  }
  return kernel(stacked);
}

size_t sd(const StructureConstAlgebra& a) { return jacobson_radical(a).ss_dim; }

size_t irr_count(const StructureConstAlgebra& a) { return center(jacobson_radical(a).quotient.algebra).size(); }

BlockData block_dims(const StructureConstAlgebra& a, const RadicalData& rad, uint64_t seed) {
  const StructureConstAlgebra& q = rad.quotient.algebra;
  const auto z = center(q);
  const size_t r = z.size();
  BlockData bd;
  bd.irr_count = r;
  if (q.dim == 0) return bd;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-20, 20);
  const CMatrix zbasis = [&] {
    CMatrix m(static_cast<Eigen::Index>(q.dim), static_cast<Eigen::Index>(r));
    for (size_t j = 0; j < r; ++j) m.col(static_cast<Eigen::Index>(j)) = to_cvector(z[j]);
    return m;
  }();

  std::vector<CVector> idempotents;
  for (int attempt = 0; attempt < 32 && idempotents.empty(); ++attempt) {
    // Exact random central element and its multiplication operator on Z(Q).
    SVector c(q.dim);
    for (size_t j = 0; j < r; ++j) {
      const Scalar f(coef(rng));
      for (size_t k = 0; k < q.dim; ++k) c[k] += f * z[j][k];
    }
    SMatrix op(r, r);
    {
      std::vector<SVector> cols;
      for (size_t j = 0; j < r; ++j) cols.push_back(q.multiply(c, z[j]));
      // Coordinates in the center basis: solve zbasis * x = col exactly.
      SMatrix zb(q.dim, r);
      for (size_t i = 0; i < q.dim; ++i)
        for (size_t j = 0; j < r; ++j) zb(i, j) = z[j][i];
      for (size_t j = 0; j < r; ++j) {
        const auto x = solve(zb, cols[j]);
        if (!x) certification_failed("center is not closed under multiplication");
        for (size_t i = 0; i < r; ++i) op(i, j) = (*x)[i];
      }
    }
    Eigen::ComplexEigenSolver<CMatrix> es(to_numeric(op));
    const CVector ev = es.eigenvalues();
    bool separated = true;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      for (Eigen::Index j = i + 1; j < ev.size(); ++j)
        if (std::abs(ev(i) - ev(j)) < 1e-4) separated = false;
    if (!separated) continue;

    // Lagrange interpolation in the commutative algebra Z(Q), in Q coordinates.
    const CMatrix lc = to_numeric(q.left_mult(c));
    const CVector unit = to_cvector(q.unit);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      CVector e = unit;
      for (Eigen::Index j = 0; j < ev.size(); ++j) {
        if (j == i) continue;
        e = (lc * e - ev(j) * e) / (ev(i) - ev(j));
      }
      idempotents.push_back(e);
    }
  }
  if (idempotents.size() != r) certification_failed("no central element with separated eigenvalues was found");

  const auto lq = numeric_left_mults(q);
  const Eigen::Index qn = static_cast<Eigen::Index>(q.dim);
  // Idempotency residual.
  for (const auto& e : idempotents) {
    const CVector e2 = combine(lq, e, qn) * e;
    if ((e2 - e).norm() > kRoundingTolerance * std::max(1.0, e.norm()))
      certification_failed("numeric central idempotent is not idempotent");
  }

  // Lift to A coordinates.
  const CMatrix lift_map = [&] {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(a.dim), qn);
    for (size_t t = 0; t < q.dim; ++t) m(static_cast<Eigen::Index>(rad.quotient.lift[t]), static_cast<Eigen::Index>(t)) = 1.0;
    return m;
  }();
  const CMatrix proj = to_numeric(rad.quotient.projection);

  struct Block {
    size_t n;
    std::vector<std::pair<long, long>> signature;
    CVector e;
  };
  std::vector<Block> blocks;
  size_t total = 0;
  for (const auto& e : idempotents) {
    const CMatrix le = combine(lq, e, qn);
    const std::complex<double> t = le.trace();
    if (std::abs(t.imag()) > kRoundingTolerance) certification_failed("block trace is not real");
    const long t_int = round_checked(t.real(), "block dimension");
    const long n = std::lround(std::sqrt(static_cast<double>(t_int)));
    if (n <= 0 || n * n != t_int) certification_failed("block of dimension " + std::to_string(t_int) + " is not a square");
    Block b{static_cast<size_t>(n), {}, e};
    // Character values chi_i(b_k) = tr_Q(e_i P b_k) / n.
    for (size_t k = 0; k < a.dim; ++k) {
      const CVector pk = proj.col(static_cast<Eigen::Index>(k));
      const std::complex<double> v = (le * combine(lq, pk, qn)).trace() / static_cast<double>(n);
      b.signature.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
    }
    total += static_cast<size_t>(n * n);
    blocks.push_back(std::move(b));
  }
  if (total != rad.ss_dim)
    certification_failed("block dimensions do not account for the semisimple quotient (" + std::to_string(total) +
                         " vs " + std::to_string(rad.ss_dim) + ")");
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return std::tie(x.n, x.signature) < std::tie(y.n, y.signature); });
  for (auto& b : blocks) {
    bd.block_dims.push_back(b.n);
    bd.central_idempotents.push_back(b.e);
    bd.lifted_idempotents.push_back(lift_map * b.e);
  }
  return bd;
}

std::vector<NumericModule> irreducible_reps(const StructureConstAlgebra& a, const RadicalData& rad,
                                            const BlockData& blocks, uint64_t seed) {
  const StructureConstAlgebra& q = rad.quotient.algebra;
  const Eigen::Index qn = static_cast<Eigen::Index>(q.dim);
  const auto lq = numeric_left_mults(q);
  std::vector<CMatrix> rq;
  for (size_t i = 0; i < q.dim; ++i) rq.push_back(to_numeric(q.right_mult(q.basis_vector(i))));
  const CMatrix proj = to_numeric(rad.quotient.projection);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  std::vector<NumericModule> out;
  for (size_t bi = 0; bi < blocks.block_dims.size(); ++bi) {
    const size_t n = blocks.block_dims[bi];
    const CMatrix le = combine(lq, blocks.central_idempotents[bi], qn);
    // Orthonormal basis of the block Q e_i.
    Eigen::JacobiSVD<CMatrix> svd(le, Eigen::ComputeThinU);
    const Eigen::Index bdim = static_cast<Eigen::Index>(n * n);
    const CMatrix u = svd.matrixU().leftCols(bdim);

    CMatrix w;
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      CVector r(qn);
      for (Eigen::Index i = 0; i < qn; ++i) r(i) = std::complex<double>(unif(rng), unif(rng));
      const CMatrix m = u.adjoint() * combine(rq, r, qn) * u;
      Eigen::ComplexEigenSolver<CMatrix> es(m);
      const CVector ev = es.eigenvalues();
      // Cluster around the eigenvalue with the smallest real part.
      Eigen::Index i0 = 0;
      for (Eigen::Index i = 1; i < ev.size(); ++i)
        if (ev(i).real() < ev(i0).real()) i0 = i;
      std::complex<double> mean = 0;
      size_t members = 0;
      double nearest_outside = 1e300;
      for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double d = std::abs(ev(i) - ev(i0));
        if (d < 1e-5) {
          mean += ev(i);
          ++members;
        } else {
          nearest_outside = std::min(nearest_outside, d);
        }
      }
      if (members != n || nearest_outside < 1e-3) continue;
      mean /= static_cast<double>(members);
      const CMatrix shifted = m - mean * CMatrix::Identity(bdim, bdim);
      Eigen::JacobiSVD<CMatrix> ns(shifted, Eigen::ComputeFullV);
      const auto sv = ns.singularValues();
      bool ok = true;
      for (Eigen::Index k = bdim - static_cast<Eigen::Index>(n); k < bdim; ++k) ok = ok && sv(k) < 1e-6;
      if (bdim > static_cast<Eigen::Index>(n)) ok = ok && sv(bdim - static_cast<Eigen::Index>(n) - 1) > 1e-4;
      if (!ok) continue;
      const CMatrix sub = u * ns.matrixV().rightCols(static_cast<Eigen::Index>(n));
      w = Eigen::HouseholderQR<CMatrix>(sub).householderQ() * CMatrix::Identity(qn, static_cast<Eigen::Index>(n));
      found = true;
    }
    if (!found) certification_failed("could not isolate a minimal left ideal in block " + std::to_string(bi));

    // Action of the quotient basis on the left ideal, then of the basis of A.
    std::vector<CMatrix> qact;
    for (size_t t = 0; t < q.dim; ++t) {
      const CMatrix img = lq[t] * w;
      const CMatrix act = w.adjoint() * img;
      if ((img - w * act).norm() > kRoundingTolerance) certification_failed("left ideal is not invariant");
      qact.push_back(act);
    }
    NumericModule mod;
    for (size_t k = 0; k < a.dim; ++k) {
      CMatrix mk = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (Eigen::Index t = 0; t < qn; ++t) mk += proj(t, static_cast<Eigen::Index>(k)) * qact[static_cast<size_t>(t)];
      mod.push_back(mk);
    }
    if (module_residual(a, mod) > kClusterTolerance * 100)
      certification_failed("irreducible module violates the structure constants");
    out.push_back(std::move(mod));
  }
  return out;
}

double module_residual(const StructureConstAlgebra& a, const NumericModule& m) {
  if (m.size() != a.dim) return 1e300;
  const Eigen::Index n = m.empty() ? 0 : m.front().rows();
  double worst = 0;
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      CMatrix rhs = CMatrix::Zero(n, n);
      for (size_t k = 0; k < a.dim; ++k)
        if (!a.sc[i][j][k].is_zero()) rhs += a.sc[i][j][k].to_complex() * m[k];
      worst = std::max(worst, (m[i] * m[j] - rhs).cwiseAbs().maxCoeff());
    }
  CMatrix unit = CMatrix::Zero(n, n);
  for (size_t k = 0; k < a.dim; ++k)
    if (!a.unit[k].is_zero()) unit += a.unit[k].to_complex() * m[k];
  if (n > 0) worst = std::max(worst, (unit - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff());
  return worst;
}

std::vector<long> composition_multiplicities(const StructureConstAlgebra& a, const BlockData& blocks,
                                             const NumericModule& m) {
  if (m.size() != a.dim) throw Error(ErrorKind::InvalidArgument, "module does not match the algebra basis");
  std::vector<std::complex<double>> traces;
  for (const auto& x : m) traces.push_back(x.trace());
  const long dim = m.empty() ? 0 : static_cast<long>(m.front().rows());
  std::vector<long> out;
  long total = 0;
  for (size_t i = 0; i < blocks.block_dims.size(); ++i) {
    std::complex<double> t = 0;
    for (size_t k = 0; k < a.dim; ++k) t += blocks.lifted_idempotents[i](static_cast<Eigen::Index>(k)) * traces[k];
    const double ni = static_cast<double>(blocks.block_dims[i]);
    if (std::abs(t.imag()) > kRoundingTolerance) certification_failed("multiplicity trace is not real");
    const long mi = round_checked(t.real() / ni, "composition multiplicity");
    if (mi < 0) certification_failed("negative composition multiplicity");
    out.push_back(mi);
    total += mi * static_cast<long>(blocks.block_dims[i]);
  }
  if (total != dim)
    certification_failed("composition multiplicities account for " + std::to_string(total) + " of " +
                         std::to_string(dim) + " dimensions");
  return out;
}

bool is_semisimple_module(const RadicalData& rad, const ExactModule& m) {
  for (const auto& v : rad.radical_basis) {
    if (m.empty()) return true;
    SMatrix acc(m.front().rows(), m.front().cols());
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) acc += m[k].scaled(v[k]);
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool is_semisimple_module(const RadicalData& rad, const NumericModule& m) {
  for (const auto& v : rad.radical_basis) {
    if (m.empty()) return true;
    CMatrix acc = CMatrix::Zero(m.front().rows(), m.front().cols());
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) acc += v[k].to_complex() * m[k];
    if (acc.cwiseAbs().maxCoeff() > kRoundingTolerance) return false;
  }
  return true;
}

QuotientData abelianization(const StructureConstAlgebra& a) {
  std::vector<SVector> comms;
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = i + 1; j < a.dim; ++j) {
      SVector c = a.sc[i][j];
      for (size_t k = 0; k < a.dim; ++k) c[k] -= a.sc[j][i][k];
      if (!is_zero_vector(c)) comms.push_back(std::move(c));
    }
  return quotient_algebra(a, two_sided_ideal(a, comms));
}

size_t one_dim_rep_count(const StructureConstAlgebra& a) { return sd(abelianization(a).algebra); }

ChevalleyResult chevalley_property(const StructureConstAlgebra& a, const RadicalData& rad) {
  if (!a.coalgebra) throw Error(ErrorKind::MissingCoalgebraData, "Chevalley test needs coalgebra data");
  const auto& cd = *a.coalgebra;
  const SMatrix& p = rad.quotient_projection;
  const size_t n = a.dim;
  for (const auto& v : rad.radical_basis) {
    Scalar e;
    for (size_t k = 0; k < n; ++k) e += v[k] * cd.epsilon[k];
    if (!e.is_zero()) return {false, v, "counit does not vanish on the radical"};
    if (!is_zero_vector(p.apply(cd.antipode.apply(v)))) return {false, v, "antipode does not preserve the radical"};
    const SVector d = cd.delta.apply(v);
    SMatrix dm(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) dm(i, j) = d[i * n + j];
    if (!(p * dm * p.transpose()).is_zero())
      return {false, v, "coproduct of a radical element leaves J (x) A + A (x) J"};
  }
  return {};
}

NumericModule tensor_modules(const StructureConstAlgebra& a, const NumericModule& m, const NumericModule& n) {
  if (!a.coalgebra) throw Error(ErrorKind::MissingCoalgebraData, "tensor product needs coalgebra data");
  const auto& delta = a.coalgebra->delta;
  const Eigen::Index dm = m.front().rows(), dn = n.front().rows();
  NumericModule out;
  for (size_t i = 0; i < a.dim; ++i) {
    CMatrix acc = CMatrix::Zero(dm * dn, dm * dn);
    for (size_t p = 0; p < a.dim; ++p)
      for (size_t q = 0; q < a.dim; ++q) {
        const Scalar& c = delta(p * a.dim + q, i);
        if (c.is_zero()) continue;
        const std::complex<double> cc = c.to_complex();
        for (Eigen::Index r = 0; r < dm; ++r)
          for (Eigen::Index s = 0; s < dm; ++s)
            if (m[p](r, s) != 0.0) acc.block(r * dn, s * dn, dn, dn) += cc * m[p](r, s) * n[q];
      }
    out.push_back(std::move(acc));
  }
  return out;
}

AlgebraAnalysis analyze_algebra(const StructureConstAlgebra& a, uint64_t seed) {
  AlgebraAnalysis r;
  r.radical = jacobson_radical(a);
  r.sd = r.radical.ss_dim;
  r.irr_count = center(r.radical.quotient.algebra).size();
  r.blocks = block_dims(a, r.radical, seed);
  if (r.blocks.block_dims.size() != r.irr_count)
    certification_failed("block count differs from the dimension of the center of the semisimple quotient");
  r.irreducibles = irreducible_reps(a, r.radical, r.blocks, seed);
  r.one_dim_count = one_dim_rep_count(a);
  return r;
}

}  // namespace fiberlab
