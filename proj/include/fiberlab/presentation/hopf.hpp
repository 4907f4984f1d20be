#pragma once

#include <map>
#include <string>
#include <vector>

#include "fiberlab/presentation/central.hpp"
#include "fiberlab/presentation/ncpoly.hpp"
#include "fiberlab/presentation/rewrite.hpp"

namespace fiberlab {

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// A finitely presented Hopf algebra H with a central Hopf subalgebra C and a
/// C-module basis of H. Central symbols only ever appear in coefficients.
class HopfPresentation {
 public:
  std::vector<std::string> generators;
  ShapePtr central;
  ShapePtr tensor_shape;  ///< two copies of `central`, for H (x) H
  RewriteSystem rewriting;
  std::vector<SourcePos> rule_positions;
  std::vector<TensorPoly> coproduct;  ///< per generator
  std::vector<Scalar> counit;         ///< per generator
  std::vector<NCPoly> antipode;       ///< per generator
  std::vector<Word> basis;
  SourcePos basis_pos;

  int generator_index(const std::string& name) const;
  int basis_index(const Word& w) const;
  size_t dim() const { return basis.size(); }

  NCPoly normal_form(const NCPoly& p) const { return rewriting.normal_form(p); }
  NCPoly normal_form(const Word& w) const { return rewriting.normal_form(w); }
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const { return normal_form(a * b); }
  /// Normal form on both tensor legs; leg coefficients move into the doubled shape.
  TensorPoly tensor_normal_form(const TensorPoly& t) const;

  /// Hopf maps on the central ring.
  CPoly central_coproduct(const CPoly& c) const;  ///< into the doubled shape
  CPoly central_antipode(const CPoly& c) const;
  Scalar central_counit(const CPoly& c) const;

  /// Hopf maps on elements; results are normalized.
  TensorPoly coproduct_of(const NCPoly& p) const;
  NCPoly antipode_of(const NCPoly& p) const;
  Scalar counit_of(const NCPoly& p) const;

  /// Coordinates of a normalized element in the basis, with central coefficients.
  /// Throws BasisNotClosed for a non-basis word.
  std::vector<CPoly> coordinates(const NCPoly& normalized) const;

  std::string format(const NCPoly& p) const { return to_string(p, generators); }
  std::string format(const TensorPoly& p) const { return to_string(p, generators); }
  std::string format(const Word& w) const { return word_to_string(w, generators); }
};

/// Parses and validates `.hopf` text. Throws ParseError carrying SyntaxError,
/// UnknownSymbol, BasisNotClosed or HopfMapInconsistent.
HopfPresentation parse_presentation(const std::string& text);
HopfPresentation load_presentation(const std::string& path);

}  // namespace fiberlab
