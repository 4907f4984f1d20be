#include "fiberlab/exactmath/linalg.hpp"

#include <algorithm>

namespace fiberlab {

RrefResult rref(const SMatrix& m) {
  RrefResult res{m, 0, {}};
  SMatrix& a = res.reduced;
  const size_t rows = a.rows();
  const size_t cols = a.cols();
  size_t row = 0;
  for (size_t c = 0; c < cols && row < rows; ++c) {
    size_t p = row;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(row, k));
    }
    const Scalar inv = a(row, c).inverse();
    for (size_t k = c; k < cols; ++k) {
      if (!a(row, k).is_zero()) a(row, k) *= inv;
    }
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (size_t k = c; k < cols; ++k) {
        if (!a(row, k).is_zero()) a(r, k) -= f * a(row, k);
      }
    }
    res.pivots.push_back(c);
    ++row;
  }
  res.rank = row;
  return res;
}

size_t rank(const SMatrix& m) { return rref(m).rank; }

std::vector<SVector> kernel(const SMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<SVector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SVector v(m.cols());
    v[f] = Scalar(1);
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<SVector> solve(const SMatrix& m, const SVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side length mismatch");
  SMatrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  SVector x(m.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

SMatrix inverse(const SMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const size_t n = m.rows();
  SMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw Error(ErrorKind::DivisionByZero, "singular matrix");
  SMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

namespace {

Scalar exact_quotient(const Scalar& a, const Scalar& b) { return a / b; }
Poly exact_quotient(const Poly& a, const Poly& b) { return exact_div(a, b); }

// Bareiss elimination; every division is exact in an integral domain.
template <class T>
T bareiss(Matrix<T> a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return T();
      for (size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = T();
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

Scalar det(const SMatrix& m) { return bareiss(m); }
Poly det(const PMatrix& m) { return bareiss(m); }

std::vector<SVector> span_basis(const std::vector<SVector>& vectors, size_t dim) {
  const RrefResult r = rref(rows_matrix(vectors, dim));
  std::vector<SVector> basis;
  for (size_t i = 0; i < r.rank; ++i) basis.push_back(r.reduced.row(i));
  return basis;
}

bool in_span(const std::vector<SVector>& rref_basis, const SVector& v) {
  SVector w = v;
  for (const auto& b : rref_basis) {
    size_t p = 0;
    while (p < b.size() && b[p].is_zero()) ++p;
    if (p == b.size() || w[p].is_zero()) continue;
    const Scalar f = w[p];
    for (size_t k = p; k < w.size(); ++k) {
      if (!b[k].is_zero()) w[k] -= f * b[k];
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

SMatrix rows_matrix(const std::vector<SVector>& rows, size_t cols) {
  SMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Poly> invariant_factors(const PMatrix& m) {
  PMatrix a = m;
  const size_t rows = a.rows();
  const size_t cols = a.cols();
  std::vector<Poly> diag;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: nonzero entry of least degree in the trailing block.
      int best = -1;
      size_t bi = 0, bj = 0;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (!a(i, j).is_zero() && (best < 0 || a(i, j).degree() < best)) {
            best = a(i, j).degree();
            bi = i;
            bj = j;
          }
      if (best < 0) {
        for (auto& d : diag) d = d.monic();
        return diag;
      }
      for (size_t c = 0; c < cols; ++c) std::swap(a(t, c), a(bi, c));
      for (size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, bj));

      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        const Poly q = divmod(a(i, t), a(t, t)).first;
        for (size_t c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        const Poly q = divmod(a(t, j), a(t, t)).first;
        for (size_t r = t; r < rows; ++r) a(r, j) -= q * a(r, t);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (!divmod(a(i, j), a(t, t)).second.is_zero()) {
            for (size_t c = t; c < cols; ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(a(t, t));
  }
  for (auto& d : diag) d = d.monic();
  return diag;
}

Poly determinantal_divisor(const PMatrix& m, size_t k) {
  if (k == 0) return Poly(1);
  const auto f = invariant_factors(m);
  if (k > f.size()) return Poly();
  Poly d(1);
  for (size_t i = 0; i < k; ++i) d *= f[i];
  return d;
}

}  // namespace fiberlab
