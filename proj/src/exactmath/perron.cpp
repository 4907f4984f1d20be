#include "fiberlab/exactmath/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fiberlab {

PerronEstimate perron_eigenvalue(const IntMatrix& m, double tol, long max_iterations) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "Perron estimate of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  for (long x : m.data())
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "matrix has a negative entry");

  std::vector<double> v(n, 1.0), w(n);
  PerronEstimate est;
  for (long it = 1; it <= max_iterations; ++it) {
    for (size_t i = 0; i < n; ++i) {
      double s = v[i];
      for (size_t j = 0; j < n; ++j) s += double(m(i, j)) * v[j];
      w[i] = s;
    }
    // Bounds for rho(M + I) from the ratios w_i / v_i.
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (size_t i = 0; i < n; ++i) {
      if (v[i] <= 0.0) continue;
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const double norm = *std::max_element(w.begin(), w.end());
    for (size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    est.iterations = it;
    est.bracket = hi - lo;
    est.value = 0.5 * (hi + lo) - 1.0;
    if (hi - lo < tol) {
      est.converged = true;
      return est;
    }
  }
  throw Error(ErrorKind::NonConvergence,
              "Perron bracket " + std::to_string(est.bracket) + " after " + std::to_string(max_iterations) +
                  " iterations");
}

}  // namespace fiberlab
