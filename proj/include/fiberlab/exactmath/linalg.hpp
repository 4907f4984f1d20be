#pragma once

#include <optional>
#include <vector>

#include "fiberlab/exactmath/matrix.hpp"
#include "fiberlab/exactmath/poly.hpp"
#include "fiberlab/exactmath/scalar.hpp"

namespace fiberlab {

using SMatrix = Matrix<Scalar>;
using PMatrix = Matrix<Poly>;
using SVector = std::vector<Scalar>;

struct RrefResult {
  SMatrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

RrefResult rref(const SMatrix& m);
size_t rank(const SMatrix& m);

/// Basis of the right null space, one vector per free column, each with a 1 in
/// its free column.
std::vector<SVector> kernel(const SMatrix& m);

/// Some x with m x = b, or nullopt.
std::optional<SVector> solve(const SMatrix& m, const SVector& b);

/// Throws NonSquare or DivisionByZero (singular).
SMatrix inverse(const SMatrix& m);

/// Fraction-free determinant. Throws NonSquare.
Scalar det(const SMatrix& m);
Poly det(const PMatrix& m);

/// Echelon basis of the span of the given vectors (rows of the reduced form).
std::vector<SVector> span_basis(const std::vector<SVector>& vectors, size_t dim);

/// Whether v lies in the span of the rows of an rref basis from span_basis.
bool in_span(const std::vector<SVector>& rref_basis, const SVector& v);

/// Matrix with the given vectors as rows.
SMatrix rows_matrix(const std::vector<SVector>& rows, size_t cols);

/// Smith normal form diagonal over K[T]: monic invariant factors d_1 | d_2 | ...
/// of the nonzero part.
std::vector<Poly> invariant_factors(const PMatrix& m);

/// k-th determinantal divisor: monic gcd of all k x k minors, or zero when
/// every such minor vanishes (including k above min(rows, cols)).
Poly determinantal_divisor(const PMatrix& m, size_t k);

}  // namespace fiberlab
