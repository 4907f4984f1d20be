#pragma once

#include <string>
#include <vector>

#include "fiberlab/presentation/ncpoly.hpp"

namespace fiberlab {

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

/// Word rewriting with central coefficients: leftmost match, longest
/// left-hand side among those matching there, with a per-call step cap.
class RewriteSystem {
 public:
  static constexpr long kDefaultStepCap = 1'000'000;

  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<RewriteRule> rules, long step_cap = kDefaultStepCap);

  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Throws StepCapExceeded.
  NCPoly normal_form(const NCPoly& p) const;
  NCPoly normal_form(const Word& w) const { return normal_form(word_poly(w)); }
  bool is_normal(const Word& w) const { return find_match(w).rule < 0; }

  /// Applies exactly one rule at a position (for critical pairs).
  NCPoly rewrite_at(const Word& w, size_t rule, size_t pos) const;

  struct Match {
    int rule = -1;
    size_t pos = 0;
  };
  Match find_match(const Word& w) const;

 private:
  std::vector<RewriteRule> rules_;
  long step_cap_ = kDefaultStepCap;
};

struct CriticalPair {
  Word overlap;
  size_t rule_a = 0;
  size_t rule_b = 0;
  NCPoly left;
  NCPoly right;
};

/// Overlaps and inclusions of left-hand sides up to the length bound whose
/// two one-step rewrites have different normal forms.
std::vector<CriticalPair> critical_pairs_check(const RewriteSystem& rs, size_t max_overlap_len);

}  // namespace fiberlab
