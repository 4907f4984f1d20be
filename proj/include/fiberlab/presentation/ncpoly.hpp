#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fiberlab/presentation/central.hpp"

namespace fiberlab {

/// Word in the generators, by index. The empty word is the unit.
using Word = std::vector<int>;
using WordPair = std::pair<Word, Word>;

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

/// Finite linear combination of keys with central coefficients; zero
/// coefficients are never stored.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, CPoly>;

  LinComb() = default;
  LinComb(const Key& k, const CPoly& c) { add(k, c); }

  void add(const Key& k, const CPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  CPoly coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? CPoly() : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb scaled(const CPoly& c) const {
    LinComb r;
    for (const auto& [k, x] : terms_) r.add(k, x * c);
    return r;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) { return (a - b).is_zero(); }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

 private:
  Map terms_;
};

using NCPoly = LinComb<Word>;
using TensorPoly = LinComb<WordPair>;

inline NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) r.add(concat(u, v), c * d);
  return r;
}

inline TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r;
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) r.add({concat(u.first, v.first), concat(u.second, v.second)}, c * d);
  return r;
}

inline NCPoly word_poly(const Word& w) { return NCPoly(w, CPoly(1)); }

std::string word_to_string(const Word& w, const std::vector<std::string>& names);
std::string to_string(const NCPoly& p, const std::vector<std::string>& names);
std::string to_string(const TensorPoly& p, const std::vector<std::string>& names);

}  // namespace fiberlab
