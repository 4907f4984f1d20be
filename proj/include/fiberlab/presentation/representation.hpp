#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "fiberlab/exactmath/linalg.hpp"
#include "fiberlab/findim/analysis.hpp"
#include "fiberlab/presentation/characters.hpp"
#include "fiberlab/presentation/hopf.hpp"

namespace fiberlab {

/// Action of every generator on a module over the fiber at `character`.
template <class M>
struct Representation {
  CentralCharacter character;
  size_t dim = 0;
  std::vector<M> action;
};

using ExactRep = Representation<SMatrix>;
using NumericRep = Representation<CMatrix>;

inline constexpr double kRepTolerance = 1e-8;

namespace rep_ops {

inline SMatrix zero(const SMatrix*, size_t n) { return SMatrix(n, n); }
inline CMatrix zero(const CMatrix*, size_t n) { return CMatrix::Zero(n, n); }
inline SMatrix identity(const SMatrix*, size_t n) { return SMatrix::identity(n); }
inline CMatrix identity(const CMatrix*, size_t n) { return CMatrix::Identity(n, n); }
inline SMatrix scaled(const SMatrix& m, const Scalar& s) { return m.scaled(s); }
inline CMatrix scaled(const CMatrix& m, const Scalar& s) { return m * s.to_complex(); }
inline SMatrix transposed(const SMatrix& m) { return m.transpose(); }
inline CMatrix transposed(const CMatrix& m) { return m.transpose(); }
inline SMatrix kron(const SMatrix& a, const SMatrix& b) { return fiberlab::kron(a, b); }
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}
inline bool equal(const SMatrix& a, const SMatrix& b) { return a == b; }
inline bool equal(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() < kRepTolerance;
}

}  // namespace rep_ops

/// Matrix of an element of H; coefficients are evaluated at the character.
template <class M>
M evaluate(const Representation<M>& rep, const NCPoly& element) {
  M total = rep_ops::zero(static_cast<const M*>(nullptr), rep.dim);
  for (const auto& [w, c] : element.terms()) {
    M prod = rep_ops::identity(static_cast<const M*>(nullptr), rep.dim);
    for (int g : w) prod = prod * rep.action.at(g);
    total = total + rep_ops::scaled(prod, c.evaluate(rep.character.values));
  }
  return total;
}

struct RepCheck {
  bool ok = true;
  std::string failure;  ///< first violated identity
};

/// Rules as matrix identities and central symbols acting by their value.
template <class M>
RepCheck verify_rep(const HopfPresentation& pres, const Representation<M>& rep) {
  if (rep.action.size() != pres.generators.size()) return {false, "wrong number of generator matrices"};
  const auto& rules = pres.rewriting.rules();
  for (const auto& r : rules) {
    if (!rep_ops::equal(evaluate(rep, word_poly(r.lhs)), evaluate(rep, r.rhs)))
      return {false, "relation " + pres.format(r.lhs) + " = " + pres.format(r.rhs)};
  }
  const auto& syms = pres.central->symbols;
  for (size_t i = 0; i < syms.size(); ++i) {
    const M expected = rep_ops::scaled(rep_ops::identity(static_cast<const M*>(nullptr), rep.dim), rep.character.values.at(i));
    if (!rep_ops::equal(evaluate(rep, word_poly(syms[i].defining_word)), expected))
      return {false, "central symbol " + syms[i].name + " does not act by its character value"};
  }
  return {};
}

/// Generator g acts by Delta(g) evaluated on V (x) W.
template <class M>
Representation<M> tensor_rep(const HopfPresentation& pres, const Representation<M>& v, const Representation<M>& w) {
  Representation<M> out;
  out.character = convolve(*pres.central, v.character, w.character);
  out.dim = v.dim * w.dim;
  const std::vector<Scalar> vals = pair_values(v.character, w.character);
  for (size_t g = 0; g < pres.generators.size(); ++g) {
    M total = rep_ops::zero(static_cast<const M*>(nullptr), out.dim);
    for (const auto& [wp, c] : pres.coproduct[g].terms()) {
      const Scalar s = c.evaluate(vals);
      if (s.is_zero()) continue;
      total = total + rep_ops::scaled(rep_ops::kron(evaluate(v, word_poly(wp.first)), evaluate(w, word_poly(wp.second))), s);
    }
    out.action.push_back(std::move(total));
  }
  return out;
}

/// Left dual: g acts by the transpose of S(g) on W.
template <class M>
Representation<M> dual_rep(const HopfPresentation& pres, const Representation<M>& w) {
  Representation<M> out;
  out.character = inverse_char(*pres.central, w.character);
  out.dim = w.dim;
  for (size_t g = 0; g < pres.generators.size(); ++g) out.action.push_back(rep_ops::transposed(evaluate(w, pres.antipode[g])));
  return out;
}

/// Trivial module given by the counit.
ExactRep trivial_rep(const HopfPresentation& pres);

/// Matrices of all basis words, for findim routines working on the fiber basis.
template <class M>
std::vector<M> basis_action(const HopfPresentation& pres, const Representation<M>& rep) {
  std::vector<M> out;
  for (const auto& w : pres.basis) out.push_back(evaluate(rep, word_poly(w)));
  return out;
}

/// Generator matrices from basis-word matrices of a fiber module.
template <class M>
Representation<M> from_basis_action(const HopfPresentation& pres, const CentralCharacter& chi, const std::vector<M>& basis_mats);

NumericRep to_numeric_rep(const ExactRep& rep);

}  // namespace fiberlab
