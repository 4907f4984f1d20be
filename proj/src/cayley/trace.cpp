#include "fiberlab/cayley/trace.hpp"

#include <random>

#include "fiberlab/error.hpp"

namespace fiberlab {

std::string to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::Field:
      return "field";
    case BaseKind::Univariate:
      return "univariate";
    case BaseKind::Finite:
      return "finite";
  }
  return "?";
}

CentralBase central_base(const CentralShape& shape, const ShapePtr& ptr) {
  CentralBase b;
  b.shape = ptr;
  if (shape.size() == 0) {
    b.kind = BaseKind::Field;
    return b;
  }
  if (shape.all_torsion()) {
    b.kind = BaseKind::Finite;
    b.points = characters_of_C(shape).characters;
    return b;
  }
  if (shape.size() == 1) {
    const auto& s = shape.symbols[0];
    b.kind = BaseKind::Univariate;
    b.variable = 0;
    b.laurent = s.kind == CentralKind::GroupLikeFree;
    return b;
  }
  throw Error(ErrorKind::UnsupportedCentralShape,
              "symbolic ideals need C to be a field, a one-parameter ring or a finite group algebra");
}

std::vector<CPoly> symbolic_multiply(const SymbolicAlgebra& a, const std::vector<CPoly>& u, const std::vector<CPoly>& v) {
  std::vector<CPoly> out(a.dim, CPoly(a.shape, Scalar()));
  for (size_t i = 0; i < a.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < a.dim; ++j) {
      if (v[j].is_zero()) continue;
      const CPoly f = u[i] * v[j];
      for (size_t k = 0; k < a.dim; ++k)
        if (!a.sc[i][j][k].is_zero()) out[k] += f * a.sc[i][j][k];
    }
  }
  return out;
}

CPoly symbolic_trace(const TraceData& td, const std::vector<CPoly>& u) {
  CPoly t(td.algebra.shape, Scalar());
  for (size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) t += u[i] * td.trace_on_basis[i];
  return t;
}

TraceData regular_trace_over_C(const HopfPresentation& pres, const SymbolicAlgebra& algebra) {
  TraceData td;
  td.base = central_base(*pres.central, pres.central);
  td.algebra = algebra;
  const size_t n = algebra.dim;
  for (size_t i = 0; i < n; ++i) {
    CPoly t(algebra.shape, Scalar());
    for (size_t j = 0; j < n; ++j) t += algebra.sc[i][j][j];
    td.trace_on_basis.push_back(t);
  }
  td.gram = CMatrixC(n, n, CPoly(algebra.shape, Scalar()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      CPoly g(algebra.shape, Scalar());
      for (size_t k = 0; k < n; ++k)
        if (!algebra.sc[i][j][k].is_zero()) g += algebra.sc[i][j][k] * td.trace_on_basis[k];
      td.gram(i, j) = g;
    }
  return td;
}

TraceData regular_trace_over_C(const HopfPresentation& pres) {
  return regular_trace_over_C(pres, symbolic_structure(pres));
}

SMatrix specialize_gram(const TraceData& td, const CentralCharacter& chi) {
  SMatrix g(td.gram.rows(), td.gram.cols());
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j) g(i, j) = td.gram(i, j).evaluate(chi.values);
  return g;
}

namespace {

template <class T>
std::vector<T> newton_impl(const std::vector<T>& p, const T& zero) {
  std::vector<T> c = {T(zero) + Scalar(1)};
  for (size_t k = 1; k <= p.size(); ++k) {
    T acc = zero;
    for (size_t i = 1; i <= k; ++i) {
      T term = c[k - i] * p[i - 1];
      if (i % 2 == 0) term = -term;
      acc = acc + term;
    }
    acc *= Scalar::rational(1, static_cast<long>(k));
    c.push_back(acc);
  }
  c.erase(c.begin());
  return c;
}

}  // namespace

std::vector<Scalar> newton_coefficients(const std::vector<Scalar>& power_traces) {
  return newton_impl<Scalar>(power_traces, Scalar());
}

std::vector<CPoly> newton_coefficients(const std::vector<CPoly>& power_traces) {
  const ShapePtr shape = power_traces.empty() ? nullptr : power_traces.front().shape();
  return newton_impl<CPoly>(power_traces, CPoly(shape, Scalar()));
}

CayleyHamiltonReport verify_cayley_hamilton(const HopfPresentation& pres, const TraceData& td, size_t degree,
                                            size_t samples, uint64_t seed) {
  const SymbolicAlgebra& a = td.algebra;
  const int unit = pres.basis_index(Word{});
  const CPoly tr1 = td.trace_on_basis.at(static_cast<size_t>(unit));
  if (tr1 != CPoly(Scalar(static_cast<long>(degree))))
    throw Error(ErrorKind::CHViolation, "tr(1) = " + tr1.to_string() + " differs from the degree " + std::to_string(degree));

  CayleyHamiltonReport rep;
  rep.degree = degree;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const CPoly zero(a.shape, Scalar());
  for (size_t s = 0; s < samples; ++s) {
    std::vector<CPoly> x(a.dim, zero);
    for (auto& c : x) c = CPoly(a.shape, Scalar(coef(rng)));

    // Powers a^1..a^n and their traces.
    std::vector<std::vector<CPoly>> powers = {x};
    std::vector<CPoly> traces = {symbolic_trace(td, x)};
    for (size_t k = 2; k <= degree; ++k) {
      powers.push_back(symbolic_multiply(a, powers.back(), x));
      traces.push_back(symbolic_trace(td, powers.back()));
    }
    const auto c = newton_coefficients(traces);

    // p(a) = a^n - c1 a^{n-1} + ... + (-1)^n c_n.
    std::vector<CPoly> value = powers[degree - 1];
    for (size_t k = 1; k <= degree; ++k) {
      const CPoly coeff = (k % 2 == 1) ? -c[k - 1] : c[k - 1];
      if (k == degree) {
        value[static_cast<size_t>(unit)] += coeff;
      } else {
        for (size_t i = 0; i < a.dim; ++i) value[i] += coeff * powers[degree - k - 1][i];
      }
    }
    for (const auto& v : c) rep.max_intermediate_degree = std::max(rep.max_intermediate_degree, v.max_degree());
    for (size_t i = 0; i < a.dim; ++i) {
      if (!value[i].is_zero()) {
        std::string elem;
        for (size_t j = 0; j < a.dim; ++j) elem += (j ? ", " : "") + x[j].to_string();
        throw Error(ErrorKind::CHViolation, "p(a)(a) != 0 for a = (" + elem + ")");
      }
    }
    ++rep.elements_checked;
  }
  return rep;
}

}  // namespace fiberlab
