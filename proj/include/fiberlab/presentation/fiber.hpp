#pragma once

#include <string>
#include <vector>

#include "fiberlab/findim/algebra.hpp"
#include "fiberlab/presentation/characters.hpp"
#include "fiberlab/presentation/hopf.hpp"

namespace fiberlab {

/// H as a C-algebra on its C-module basis: sc[i][j][k] in C.
struct SymbolicAlgebra {
  ShapePtr shape;
  size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<std::vector<CPoly>>> sc;
};

SymbolicAlgebra symbolic_structure(const HopfPresentation& pres);

/// Structure constants at a character.
StructureConstAlgebra specialize(const SymbolicAlgebra& s, const CentralCharacter& chi);

/// H/mH at chi. At the identity character the coalgebra data is attached and
/// checked. Throws StepCapExceeded, ConsistencyViolation.
StructureConstAlgebra build_fiber(const HopfPresentation& pres, const CentralCharacter& chi);
StructureConstAlgebra build_fiber(const HopfPresentation& pres, const SymbolicAlgebra& s, const CentralCharacter& chi);

/// H itself as a finite-dimensional Hopf algebra when every central symbol is
/// torsion; basis z^e b_i. Throws UnsupportedCentralShape otherwise.
StructureConstAlgebra build_total_algebra(const HopfPresentation& pres);

/// Coordinates of an element at chi (the C-coefficients evaluated).
SVector fiber_coordinates(const HopfPresentation& pres, const NCPoly& element, const CentralCharacter& chi);

}  // namespace fiberlab
