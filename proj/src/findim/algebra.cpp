#include "fiberlab/findim/algebra.hpp"

#include "fiberlab/error.hpp"

namespace fiberlab {

SVector StructureConstAlgebra::basis_vector(size_t i) const {
  SVector v(dim);
  v.at(i) = Scalar(1);
  return v;
}

SVector StructureConstAlgebra::multiply(const SVector& a, const SVector& b) const {
  SVector out(dim);
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar f = a[i] * b[j];
      const SVector& p = sc[i][j];
      for (size_t k = 0; k < dim; ++k)
        if (!p[k].is_zero()) out[k] += f * p[k];
    }
  }
  return out;
}

SMatrix StructureConstAlgebra::left_mult(const SVector& a) const {
  SMatrix m(dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      const SVector& p = sc[i][j];
      for (size_t k = 0; k < dim; ++k)
        if (!p[k].is_zero()) m(k, j) += a[i] * p[k];
    }
  }
  return m;
}

SMatrix StructureConstAlgebra::right_mult(const SVector& a) const {
  SMatrix m(dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      const SVector& p = sc[j][i];
      for (size_t k = 0; k < dim; ++k)
        if (!p[k].is_zero()) m(k, j) += a[i] * p[k];
    }
  }
  return m;
}

Scalar StructureConstAlgebra::trace(const SVector& a) const {
  Scalar t;
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    Scalar s;
    for (size_t j = 0; j < dim; ++j) s += sc[i][j][j];
    t += a[i] * s;
  }
  return t;
}

void StructureConstAlgebra::check_algebra() const {
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      for (size_t k = 0; k < dim; ++k) {
        if (multiply(sc[i][j], basis_vector(k)) != multiply(basis_vector(i), sc[j][k])) {
          throw Error(ErrorKind::ConsistencyViolation, "associativity fails on (" + basis_labels[i] + ", " +
                                                           basis_labels[j] + ", " + basis_labels[k] + ")");
        }
      }
    }
  }
  for (size_t i = 0; i < dim; ++i) {
    const SVector b = basis_vector(i);
    if (multiply(unit, b) != b || multiply(b, unit) != b)
      throw Error(ErrorKind::ConsistencyViolation, "unit fails on " + basis_labels[i]);
  }
}

SVector StructureConstAlgebra::coproduct(const SVector& a) const {
  if (!coalgebra) throw Error(ErrorKind::MissingCoalgebraData, "algebra has no coalgebra data");
  return coalgebra->delta.apply(a);
}

namespace {

// Product in A (x) A of two dim^2 coordinate vectors.
SVector tensor_multiply(const StructureConstAlgebra& a, const SVector& x, const SVector& y) {
  const size_t n = a.dim;
  SVector out(n * n);
  for (size_t p = 0; p < n * n; ++p) {
    if (x[p].is_zero()) continue;
    for (size_t q = 0; q < n * n; ++q) {
      if (y[q].is_zero()) continue;
      const Scalar f = x[p] * y[q];
      const SVector& l = a.sc[p / n][q / n];
      const SVector& r = a.sc[p % n][q % n];
      for (size_t u = 0; u < n; ++u) {
        if (l[u].is_zero()) continue;
        for (size_t v = 0; v < n; ++v)
          if (!r[v].is_zero()) out[u * n + v] += f * l[u] * r[v];
      }
    }
  }
  return out;
}

}  // namespace

void StructureConstAlgebra::check_hopf() const {
  if (!coalgebra) throw Error(ErrorKind::MissingCoalgebraData, "algebra has no coalgebra data");
  const size_t n = dim;
  const auto& D = coalgebra->delta;
  const auto& eps = coalgebra->epsilon;
  const auto& S = coalgebra->antipode;
  auto fail = [&](const std::string& what, size_t i) {
    throw Error(ErrorKind::ConsistencyViolation, what + " fails on " + basis_labels[i]);
  };
  for (size_t i = 0; i < n; ++i) {
    const SVector d = D.col(i);
    // Counit and antipode axioms.
    SVector left(n), right(n), sl(n), sr(n);
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        const Scalar& c = d[p * n + q];
        if (c.is_zero()) continue;
        for (size_t k = 0; k < n; ++k) {
          if (k == q) left[k] += c * eps[p];
          if (k == p) right[k] += c * eps[q];
        }
        const SVector a = multiply(S.col(p), basis_vector(q));
        const SVector b = multiply(basis_vector(p), S.col(q));
        for (size_t k = 0; k < n; ++k) {
          sl[k] += c * a[k];
          sr[k] += c * b[k];
        }
      }
    const SVector b = basis_vector(i);
    if (left != b || right != b) fail("counit axiom", i);
    SVector eu = unit;
    for (auto& x : eu) x *= eps[i];
    if (sl != eu || sr != eu) fail("antipode axiom", i);
    // Coassociativity.
    SVector l3(n * n * n), r3(n * n * n);
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        const Scalar& c = d[p * n + q];
        if (c.is_zero()) continue;
        const SVector dp = D.col(p), dq = D.col(q);
        for (size_t u = 0; u < n * n; ++u) {
          if (!dp[u].is_zero()) l3[u * n + q] += c * dp[u];
          if (!dq[u].is_zero()) r3[p * n * n + u] += c * dq[u];
        }
      }
    if (l3 != r3) fail("coassociativity", i);
  }
  // Delta and epsilon are algebra maps.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (D.apply(sc[i][j]) != tensor_multiply(*this, D.col(i), D.col(j)))
        throw Error(ErrorKind::ConsistencyViolation,
                    "coproduct not multiplicative on (" + basis_labels[i] + ", " + basis_labels[j] + ")");
      Scalar e;
      for (size_t k = 0; k < n; ++k) e += sc[i][j][k] * eps[k];
      if (e != eps[i] * eps[j])
        throw Error(ErrorKind::ConsistencyViolation,
                    "counit not multiplicative on (" + basis_labels[i] + ", " + basis_labels[j] + ")");
    }
}

std::vector<SMatrix> regular_rep(const StructureConstAlgebra& a) {
  std::vector<SMatrix> out;
  out.reserve(a.dim);
  for (size_t i = 0; i < a.dim; ++i) out.push_back(a.left_mult(a.basis_vector(i)));
  return out;
}

StructureConstAlgebra matrix_algebra(size_t n) {
  StructureConstAlgebra a;
  a.dim = n * n;
  a.sc.assign(a.dim, std::vector<SVector>(a.dim, SVector(a.dim)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a.basis_labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (size_t k = 0; k < n; ++k) a.sc[i * n + j][j * n + k][i * n + k] = Scalar(1);
    }
  a.unit = SVector(a.dim);
  for (size_t i = 0; i < n; ++i) a.unit[i * n + i] = Scalar(1);
  return a;
}

StructureConstAlgebra truncated_polynomial_algebra(size_t n) {
  StructureConstAlgebra a;
  a.dim = n;
  a.sc.assign(n, std::vector<SVector>(n, SVector(n)));
  for (size_t i = 0; i < n; ++i) {
    a.basis_labels.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
    for (size_t j = 0; i + j < n; ++j) a.sc[i][j][i + j] = Scalar(1);
  }
  a.unit = a.basis_vector(0);
  return a;
}

StructureConstAlgebra direct_product(const StructureConstAlgebra& a, const StructureConstAlgebra& b) {
  StructureConstAlgebra p;
  p.dim = a.dim + b.dim;
  p.sc.assign(p.dim, std::vector<SVector>(p.dim, SVector(p.dim)));
  for (const auto& l : a.basis_labels) p.basis_labels.push_back("(" + l + ",0)");
  for (const auto& l : b.basis_labels) p.basis_labels.push_back("(0," + l + ")");
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k) p.sc[i][j][k] = a.sc[i][j][k];
  for (size_t i = 0; i < b.dim; ++i)
    for (size_t j = 0; j < b.dim; ++j)
      for (size_t k = 0; k < b.dim; ++k) p.sc[a.dim + i][a.dim + j][a.dim + k] = b.sc[i][j][k];
  p.unit = SVector(p.dim);
  for (size_t i = 0; i < a.dim; ++i) p.unit[i] = a.unit[i];
  for (size_t i = 0; i < b.dim; ++i) p.unit[a.dim + i] = b.unit[i];
  return p;
}

}  // namespace fiberlab
