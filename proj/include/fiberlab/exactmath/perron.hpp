#pragma once

#include <vector>

#include "fiberlab/exactmath/matrix.hpp"

namespace fiberlab {

using IntMatrix = Matrix<long>;

struct PerronEstimate {
  double value = 0.0;
  /// Width of the final Collatz-Wielandt bracket.
  double bracket = 0.0;
  long iterations = 0;
  bool converged = false;
};

/// Spectral radius of a nonnegative integer matrix by power iteration on
/// M + I, bracketed by Collatz-Wielandt bounds. Throws NonConvergence when
/// the bracket is still wider than tol after max_iterations.
PerronEstimate perron_eigenvalue(const IntMatrix& m, double tol = 1e-9, long max_iterations = 100000);

}  // namespace fiberlab
