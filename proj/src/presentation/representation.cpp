#include "fiberlab/presentation/representation.hpp"

#include "fiberlab/presentation/fiber.hpp"

namespace fiberlab {

ExactRep trivial_rep(const HopfPresentation& pres) {
  ExactRep r;
  r.character = identity_character(*pres.central);
  r.dim = 1;
  for (const auto& e : pres.counit) r.action.push_back(SMatrix{{e}});
  return r;
}

template <class M>
Representation<M> from_basis_action(const HopfPresentation& pres, const CentralCharacter& chi,
                                    const std::vector<M>& basis_mats) {
  Representation<M> r;
  r.character = chi;
  r.dim = basis_mats.empty() ? 0 : static_cast<size_t>(basis_mats.front().rows());
  for (size_t g = 0; g < pres.generators.size(); ++g) {
    const SVector v = fiber_coordinates(pres, word_poly({static_cast<int>(g)}), chi);
    M total = rep_ops::zero(static_cast<const M*>(nullptr), r.dim);
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) total = total + rep_ops::scaled(basis_mats[k], v[k]);
    r.action.push_back(std::move(total));
  }
  return r;
}

template ExactRep from_basis_action(const HopfPresentation&, const CentralCharacter&, const std::vector<SMatrix>&);
template NumericRep from_basis_action(const HopfPresentation&, const CentralCharacter&, const std::vector<CMatrix>&);

NumericRep to_numeric_rep(const ExactRep& rep) {
  NumericRep n;
  n.character = rep.character;
  n.dim = rep.dim;
  n.action = to_numeric(rep.action);
  return n;
}

}  // namespace fiberlab
