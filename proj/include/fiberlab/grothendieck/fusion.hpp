#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiberlab/exactmath/perron.hpp"
#include "fiberlab/findim/analysis.hpp"
#include "fiberlab/presentation/fiber.hpp"
#include "fiberlab/presentation/representation.hpp"

namespace fiberlab {

/// A fiber with its certified analysis and its irreducibles as H-modules.
struct FiberData {
  CentralCharacter chi;
  StructureConstAlgebra algebra;
  AlgebraAnalysis analysis;
  std::vector<NumericRep> irreps;  ///< block order
  std::vector<size_t> irrep_dims;
};

FiberData analyze_fiber(const HopfPresentation& pres, const SymbolicAlgebra& algebra, const CentralCharacter& chi,
                        uint64_t seed);

/// Irreducibles V_i of a source fiber acting on Irr of a target fiber.
struct FusionData {
  std::vector<size_t> source_dims;
  std::vector<size_t> target_dims;
  std::vector<IntMatrix> action;  ///< action[i](k, j) = [V_i (x) W_j : W_k]
  IntMatrix regular;              ///< sum_i dim(V_i) action[i]
};

/// Composition multiplicities of V_i (x) W_j. Throws CertificationFailed,
/// including when a column violates the dimension count.
FusionData action_matrices(const HopfPresentation& pres, const FiberData& source, const FiberData& target);

struct RegularIdentity {
  long sd_identity = 0;
  long trace = 0;
  bool square_ok = false;
  bool trace_ok = false;
  bool positive = false;
  bool ok() const { return square_ok && trace_ok && positive; }
};

/// T_R^2 = Sd(identity) T_R, trace(T_R) = Sd(identity) and T_R > 0 entrywise.
RegularIdentity regular_identities(const FusionData& fusion, long sd_identity);
/// Throws IdentityViolation naming the failed identity.
void require_regular_identities(const FusionData& fusion, long sd_identity);

struct FPdimResult {
  std::string method;           ///< "fusion" (exact) or "perron"
  std::optional<long> exact;
  double value = 0.0;
  double tolerance = 0.0;
};

/// FPdim of Gr(identity fiber) from its action on itself.
FPdimResult fpdim(const FusionData& self_fusion, bool identity_chevalley);

/// V (x) W completely reducible for every identity irreducible V and every
/// irreducible W of the target fiber.
bool chevalley_locus_membership(const HopfPresentation& pres, const FiberData& identity, const FiberData& target);

/// Sampled characters whose fiber has a 1-dimensional module; identity first.
std::vector<CentralCharacter> subgroup_I(const std::vector<FiberData>& fibers);

/// Restriction to C of every 1-dimensional H-module found in the fibers,
/// rounded to exact values. Throws CertificationFailed.
std::vector<CentralCharacter> one_dim_restrictions(const HopfPresentation& pres, const std::vector<FiberData>& fibers);

struct CosetOrbitReport {
  bool applicable = false;
  std::string reason;
  std::vector<CentralCharacter> torsion;  ///< torsion characters among the samples
  std::vector<CentralCharacter> subgroup;  ///< I restricted to the torsion part
  std::vector<std::vector<CentralCharacter>> cosets;
  std::vector<std::vector<CentralCharacter>> orbits;
  bool subgroup_ok = false;
  bool equal = false;
};

/// Left cosets of I against right-winding orbits on the torsion characters.
/// Throws PartitionMismatch when the partitions differ.
CosetOrbitReport coset_orbit_check(const HopfPresentation& pres, const std::vector<FiberData>& fibers);

}  // namespace fiberlab
