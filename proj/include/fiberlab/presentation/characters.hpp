#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiberlab/presentation/central.hpp"

namespace fiberlab {

/// A point of maxSpec C: one value per central symbol.
struct CentralCharacter {
  std::vector<Scalar> values;

  friend bool operator==(const CentralCharacter& a, const CentralCharacter& b) { return a.values == b.values; }
  friend bool operator!=(const CentralCharacter& a, const CentralCharacter& b) { return !(a == b); }
};

/// Total order used for deterministic containers.
struct CharacterLess {
  bool operator()(const CentralCharacter& a, const CentralCharacter& b) const;
};

/// "T=0", "z=-1, w=zeta(3,1)"; "C=k" for the empty shape.
std::string label(const CentralShape& shape, const CentralCharacter& chi);

/// Group-likes to 1, primitives to 0. Throws MissingCoalgebraData on a Generic symbol.
CentralCharacter identity_character(const CentralShape& shape);
/// Throws InvalidArgument naming the offending symbol.
void check_character(const CentralShape& shape, const CentralCharacter& chi);

struct CharacterSpace {
  std::vector<CentralCharacter> characters;  ///< identity first
  bool finite = false;                       ///< only torsion symbols
  std::vector<Scalar> primitive_samples;
  std::vector<Scalar> laurent_samples;
};

std::vector<Scalar> default_primitive_samples();  ///< 0, 1, -1, 2, 1/2
std::vector<Scalar> default_laurent_samples();    ///< 1, -1, 2

/// Torsion symbols run over all roots of unity of their order; free symbols
/// over the sample sets. An override replaces the samples of every free symbol
/// (zero is dropped for Laurent symbols).
CharacterSpace characters_of_C(const CentralShape& shape,
                               const std::optional<std::vector<Scalar>>& samples_override = std::nullopt);

CentralCharacter convolve(const CentralShape& shape, const CentralCharacter& a, const CentralCharacter& b);
CentralCharacter inverse_char(const CentralShape& shape, const CentralCharacter& a);

/// Values of the doubled shape for a pair of characters.
std::vector<Scalar> pair_values(const CentralCharacter& left, const CentralCharacter& right);

}  // namespace fiberlab
