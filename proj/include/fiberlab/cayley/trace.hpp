#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiberlab/exactmath/linalg.hpp"
#include "fiberlab/presentation/characters.hpp"
#include "fiberlab/presentation/fiber.hpp"

namespace fiberlab {

enum class BaseKind { Field, Univariate, Finite };

std::string to_string(BaseKind kind);

/// The central ring C in one of the supported shapes.
struct CentralBase {
  BaseKind kind = BaseKind::Field;
  ShapePtr shape;
  int variable = -1;     ///< univariate: symbol index
  bool laurent = false;  ///< univariate: the symbol is an invertible group-like
  std::vector<CentralCharacter> points;  ///< finite: every character, identity first
};

/// Throws UnsupportedCentralShape for mixed or multi-parameter central rings.
CentralBase central_base(const CentralShape& shape, const ShapePtr& ptr);

using CMatrixC = Matrix<CPoly>;

struct TraceData {
  CentralBase base;
  SymbolicAlgebra algebra;
  std::vector<CPoly> trace_on_basis;
  CMatrixC gram;
};

/// Regular trace of H over C on the fiber basis, with the Gram matrix of the trace form.
TraceData regular_trace_over_C(const HopfPresentation& pres);
TraceData regular_trace_over_C(const HopfPresentation& pres, const SymbolicAlgebra& algebra);

SMatrix specialize_gram(const TraceData& td, const CentralCharacter& chi);

/// Product of C-coordinate vectors through the symbolic structure constants.
std::vector<CPoly> symbolic_multiply(const SymbolicAlgebra& a, const std::vector<CPoly>& u, const std::vector<CPoly>& v);
CPoly symbolic_trace(const TraceData& td, const std::vector<CPoly>& u);

/// c_1..c_n from tr(a), ..., tr(a^n) through k c_k = sum_{i=1..k} (-1)^{i-1} c_{k-i} tr(a^i).
std::vector<Scalar> newton_coefficients(const std::vector<Scalar>& power_traces);
std::vector<CPoly> newton_coefficients(const std::vector<CPoly>& power_traces);

struct CayleyHamiltonReport {
  size_t degree = 0;
  size_t elements_checked = 0;
  int max_intermediate_degree = 0;
};

/// tr(1) = n and p_{n,a}(a) = 0 over C for `samples` random elements with
/// coefficients in {-3, ..., 3}. Throws CHViolation naming the element.
CayleyHamiltonReport verify_cayley_hamilton(const HopfPresentation& pres, const TraceData& td, size_t degree,
                                            size_t samples, uint64_t seed);

}  // namespace fiberlab
