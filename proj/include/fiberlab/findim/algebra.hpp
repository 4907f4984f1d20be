#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiberlab/exactmath/linalg.hpp"

namespace fiberlab {

/// Coalgebra maps of a finite-dimensional Hopf algebra on its basis.
struct CoalgebraData {
  /// dim^2 x dim; column i holds Delta(b_i) with row index p * dim + q for b_p (x) b_q.
  SMatrix delta;
  SVector epsilon;
  /// dim x dim; column i holds S(b_i).
  SMatrix antipode;
};

/// Finite-dimensional algebra given by structure constants.
struct StructureConstAlgebra {
  size_t dim = 0;
  std::vector<std::string> basis_labels;
  /// sc[i][j] = coordinates of b_i b_j.
  std::vector<std::vector<SVector>> sc;
  SVector unit;
  std::optional<CoalgebraData> coalgebra;

  SVector basis_vector(size_t i) const;
  SVector multiply(const SVector& a, const SVector& b) const;
  /// Matrix of x -> a x.
  SMatrix left_mult(const SVector& a) const;
  /// Matrix of x -> x a.
  SMatrix right_mult(const SVector& a) const;
  /// Regular trace of left multiplication.
  Scalar trace(const SVector& a) const;

  /// Throws ConsistencyViolation on the first failing identity: associativity
  /// (exhaustive on the basis) and the two-sided unit.
  void check_algebra() const;
  /// Coassociativity, counit, antipode and multiplicativity of Delta and
  /// epsilon on the basis. Throws MissingCoalgebraData or ConsistencyViolation.
  void check_hopf() const;

  /// Delta of an arbitrary element, as a dim^2 coordinate vector.
  SVector coproduct(const SVector& a) const;
};

/// Left regular representation L_{b_i} for every basis element.
std::vector<SMatrix> regular_rep(const StructureConstAlgebra& a);

/// Matrix algebra M_n with the matrix-unit basis e_{ij} (index i * n + j).
StructureConstAlgebra matrix_algebra(size_t n);
/// k[t]/(t^n) with basis 1, t, ..., t^{n-1}.
StructureConstAlgebra truncated_polynomial_algebra(size_t n);
/// Direct product of algebras.
StructureConstAlgebra direct_product(const StructureConstAlgebra& a, const StructureConstAlgebra& b);

}  // namespace fiberlab
