#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiberlab/findim/algebra.hpp"

namespace fiberlab {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// A module given by the action of every basis element.
using ExactModule = std::vector<SMatrix>;
using NumericModule = std::vector<CMatrix>;

inline constexpr double kClusterTolerance = 1e-8;
inline constexpr double kRoundingTolerance = 1e-6;

struct QuotientData {
  StructureConstAlgebra algebra;
  SMatrix projection;        ///< quotient_dim x dim
  std::vector<size_t> lift;  ///< coordinate b_{lift[a]} of A represents quotient basis element a
};

/// Smallest two-sided ideal containing the generators, as a reduced basis.
std::vector<SVector> two_sided_ideal(const StructureConstAlgebra& a, const std::vector<SVector>& generators);
/// A / I for a two-sided ideal I given by a basis.
QuotientData quotient_algebra(const StructureConstAlgebra& a, const std::vector<SVector>& ideal_basis);

struct RadicalData {
  std::vector<SVector> radical_basis;
  size_t ss_dim = 0;
  SMatrix quotient_projection;
  QuotientData quotient;
};

/// Kernel of the trace form (a, b) -> tr(L_a L_b); characteristic zero.
RadicalData jacobson_radical(const StructureConstAlgebra& a);

/// Exact basis of {z : zb = bz for all b}.
std::vector<SVector> center(const StructureConstAlgebra& a);

size_t sd(const StructureConstAlgebra& a);
size_t irr_count(const StructureConstAlgebra& a);

struct BlockData {
  std::vector<size_t> block_dims;
  std::vector<CVector> central_idempotents;  ///< in quotient coordinates
  std::vector<CVector> lifted_idempotents;   ///< in coordinates of A
  size_t irr_count = 0;
};

/// Wedderburn blocks of the semisimple quotient, ordered by dimension and then
/// by the rounded character values on the basis of A (seed independent).
/// Throws CertificationFailed.
BlockData block_dims(const StructureConstAlgebra& a, const RadicalData& rad, uint64_t seed);

/// One numeric irreducible module per block, as basis-element matrices of A.
/// Throws CertificationFailed.
std::vector<NumericModule> irreducible_reps(const StructureConstAlgebra& a, const RadicalData& rad,
                                            const BlockData& blocks, uint64_t seed);

/// [M : V_i] per block. Throws CertificationFailed.
std::vector<long> composition_multiplicities(const StructureConstAlgebra& a, const BlockData& blocks,
                                             const NumericModule& m);

bool is_semisimple_module(const RadicalData& rad, const ExactModule& m);
bool is_semisimple_module(const RadicalData& rad, const NumericModule& m);

/// Quotient by the ideal generated by all commutators of basis elements.
QuotientData abelianization(const StructureConstAlgebra& a);
size_t one_dim_rep_count(const StructureConstAlgebra& a);

struct ChevalleyResult {
  bool holds = true;
  std::optional<SVector> witness;  ///< radical vector violating an inclusion
  std::string reason;
};

/// Delta(J) in J (x) A + A (x) J, epsilon(J) = 0 and S(J) in J. Throws MissingCoalgebraData.
ChevalleyResult chevalley_property(const StructureConstAlgebra& a, const RadicalData& rad);

/// M (x) N through the coalgebra data. Throws MissingCoalgebraData.
NumericModule tensor_modules(const StructureConstAlgebra& a, const NumericModule& m, const NumericModule& n);

/// Largest violation of L_i L_j = sum_k sc[i][j][k] L_k and of the unit.
double module_residual(const StructureConstAlgebra& a, const NumericModule& m);

NumericModule to_numeric(const ExactModule& m);
CMatrix to_numeric(const SMatrix& m);

/// Numeric and exact outputs of the standard analysis of one algebra.
struct AlgebraAnalysis {
  RadicalData radical;
  size_t sd = 0;
  size_t irr_count = 0;
  BlockData blocks;
  std::vector<NumericModule> irreducibles;
  size_t one_dim_count = 0;
};

AlgebraAnalysis analyze_algebra(const StructureConstAlgebra& a, uint64_t seed);

}  // namespace fiberlab
