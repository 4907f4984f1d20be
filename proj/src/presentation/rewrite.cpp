#include "fiberlab/presentation/rewrite.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "fiberlab/error.hpp"

namespace fiberlab {

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += " ";
    s += names.at(w[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

std::string coef_prefix(const CPoly& c, bool& negative) {
  negative = false;
  if (c.is_constant()) {
    Scalar s = c.constant_term();
    if (s.is_rational() && s.as_rational() < 0) {
      negative = true;
      s = -s;
    }
    if (s.is_one()) return "";
    std::string t = s.to_string();
    if (!s.is_rational() && t.find_first_of("+-", 1) != std::string::npos) t = "(" + t + ")";
    return t + " * ";
  }
  return "(" + c.to_string() + ") * ";
}

template <class Key, class Fmt>
std::string format_lincomb(const LinComb<Key>& p, Fmt fmt) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    bool neg = false;
    const std::string pre = coef_prefix(c, neg);
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += pre + fmt(k);
  }
  return out;
}

}  // namespace

std::string to_string(const NCPoly& p, const std::vector<std::string>& names) {
  return format_lincomb(p, [&](const Word& w) { return word_to_string(w, names); });
}

std::string to_string(const TensorPoly& p, const std::vector<std::string>& names) {
  return format_lincomb(p, [&](const WordPair& w) {
    return word_to_string(w.first, names) + " (x) " + word_to_string(w.second, names);
  });
}

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules, long step_cap)
    : rules_(std::move(rules)), step_cap_(step_cap) {
  for (const auto& r : rules_)
    if (r.lhs.empty()) throw Error(ErrorKind::InvalidArgument, "rewrite rule with empty left-hand side");
}

RewriteSystem::Match RewriteSystem::find_match(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    int best = -1;
    size_t best_len = 0;
    for (size_t r = 0; r < rules_.size(); ++r) {
      const Word& l = rules_[r].lhs;
      if (l.size() <= best_len || pos + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + pos)) {
        best = static_cast<int>(r);
        best_len = l.size();
      }
    }
    if (best >= 0) return {best, pos};
  }
  return {};
}

NCPoly RewriteSystem::rewrite_at(const Word& w, size_t rule, size_t pos) const {
  const RewriteRule& r = rules_.at(rule);
  const Word prefix(w.begin(), w.begin() + pos);
  const Word suffix(w.begin() + pos + r.lhs.size(), w.end());
  NCPoly out;
  for (const auto& [mid, c] : r.rhs.terms()) out.add(concat(concat(prefix, mid), suffix), c);
  return out;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
  std::map<Word, CPoly> pending(p.terms().begin(), p.terms().end());
  NCPoly result;
  long steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const CPoly& c = node.mapped();
    const Match m = find_match(w);
    if (m.rule < 0) {
      result.add(w, c);
      continue;
    }
    if (++steps > step_cap_) {
      throw Error(ErrorKind::StepCapExceeded,
                  "normal form needed more than " + std::to_string(step_cap_) + " rewrite steps");
    }
    const RewriteRule& r = rules_[m.rule];
    const Word prefix(w.begin(), w.begin() + m.pos);
    const Word suffix(w.begin() + m.pos + r.lhs.size(), w.end());
    for (const auto& [mid, d] : r.rhs.terms()) {
      Word nw = concat(concat(prefix, mid), suffix);
      CPoly nc = c * d;
      auto [it, inserted] = pending.emplace(std::move(nw), nc);
      if (!inserted) {
        it->second += nc;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

std::vector<CriticalPair> critical_pairs_check(const RewriteSystem& rs, size_t max_overlap_len) {
  std::vector<CriticalPair> bad;
  const auto& rules = rs.rules();
  std::set<std::tuple<Word, size_t, size_t>> seen;
  auto check = [&](const Word& w, size_t ra, size_t pa, size_t rb, size_t pb) {
    if (w.size() > max_overlap_len) return;
    if (!seen.insert({w, ra, rb}).second) return;
    const NCPoly left = rs.normal_form(rs.rewrite_at(w, ra, pa));
    const NCPoly right = rs.normal_form(rs.rewrite_at(w, rb, pb));
    if (left != right) bad.push_back({w, ra, rb, left, right});
  };
  for (size_t a = 0; a < rules.size(); ++a) {
    for (size_t b = 0; b < rules.size(); ++b) {
      const Word& la = rules[a].lhs;
      const Word& lb = rules[b].lhs;
      // Proper overlaps: a suffix of la equals a prefix of lb.
      for (size_t k = 1; k < std::min(la.size(), lb.size()); ++k) {
        if (std::equal(la.end() - k, la.end(), lb.begin())) {
          Word w = la;
          w.insert(w.end(), lb.begin() + k, lb.end());
          check(w, a, 0, b, la.size() - k);
        }
      }
      // Inclusions: lb occurs inside la.
      if (a != b && lb.size() <= la.size()) {
        for (size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
          if (std::equal(lb.begin(), lb.end(), la.begin() + pos)) check(la, a, 0, b, pos);
        }
      }
    }
  }
  return bad;
}

}  // namespace fiberlab
