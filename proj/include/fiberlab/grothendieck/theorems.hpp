#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fiberlab/cayley/discriminant.hpp"
#include "fiberlab/grothendieck/fusion.hpp"

namespace fiberlab {

/// Every analysis of one presentation that the checkers and reports consume.
struct Study {
  HopfPresentation pres;
  SymbolicAlgebra algebra;
  CharacterSpace space;
  std::vector<FiberData> fibers;  ///< aligned with space.characters, identity first
  ChevalleyResult identity_chevalley;
  std::optional<ChevalleyResult> total_chevalley;  ///< H itself, when C is finite
  std::vector<FusionData> fusion;                  ///< identity irreducibles acting on each fiber
  FPdimResult fpdim;
  std::vector<CentralCharacter> subgroup;
  std::optional<TraceData> trace;                  ///< absent for unsupported central shapes
  std::string trace_unsupported;
  SdProfile profile;

  const FiberData& identity() const { return fibers.front(); }
  long sd_identity() const { return static_cast<long>(fibers.front().analysis.sd); }
};

Study run_study(HopfPresentation pres, uint64_t seed, const std::optional<std::vector<Scalar>>& samples = std::nullopt);

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::vector<std::pair<std::string, std::string>> data;
  std::string anchor;
};

/// Every theorem-shaped check at the sampled characters. Names listed in
/// `expected_negative` pass when the underlying property fails and vice versa.
std::vector<CheckRecord> theorem_checks(const Study& study, const std::set<std::string>& expected_negative = {});

}  // namespace fiberlab
