#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fiberlab/exactmath/poly.hpp"
#include "fiberlab/exactmath/scalar.hpp"

namespace fiberlab {

enum class CentralKind {
  GroupLikeTorsion,  ///< z^order = 1, z group-like
  GroupLikeFree,     ///< invertible group-like (Laurent variable)
  PrimitiveFree,     ///< primitive polynomial variable
  Generic,           ///< plain commuting indeterminate without Hopf data
};

std::string to_string(CentralKind kind);

struct CentralSymbol {
  std::string name;
  CentralKind kind = CentralKind::PrimitiveFree;
  int order = 0;                   ///< torsion order, 0 otherwise
  std::vector<int> defining_word;  ///< generator indices of the word it stands for
};

/// The commuting symbols that coefficients may involve.
struct CentralShape {
  std::vector<CentralSymbol> symbols;

  int index_of(const std::string& name) const;
  size_t size() const { return symbols.size(); }
  bool all_torsion() const;
  size_t torsion_group_order() const;
};

using ShapePtr = std::shared_ptr<const CentralShape>;

/// Two copies of a shape: left-leg symbols first, then right-leg symbols.
ShapePtr doubled_shape(const ShapePtr& shape);

/// Commutative polynomial in the central symbols with Scalar coefficients.
/// Torsion exponents are kept in [0, order); free group-like exponents may be
/// negative. A null shape is allowed for constants.
class CPoly {
 public:
  using Exponents = std::vector<int>;

  CPoly() = default;
  CPoly(const Scalar& c);  // NOLINT(implicit)
  CPoly(long c) : CPoly(Scalar(c)) {}  // NOLINT(implicit)
  CPoly(int c) : CPoly(Scalar(c)) {}   // NOLINT(implicit)
  CPoly(ShapePtr shape, const Scalar& c);

  /// c * symbol^power.
  static CPoly symbol(const ShapePtr& shape, int index, int power = 1, const Scalar& c = Scalar(1));
  static CPoly monomial(const ShapePtr& shape, Exponents exps, const Scalar& c);

  const ShapePtr& shape() const { return shape_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  /// Throws InvalidArgument unless constant.
  Scalar as_constant() const;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);
  CPoly& operator*=(const Scalar& s);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const CPoly& b) { return a *= b; }
  friend bool operator==(const CPoly& a, const CPoly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

  /// Value at a point given per symbol of the shape.
  Scalar evaluate(const std::vector<Scalar>& values) const;
  /// Partial specialization: symbols with a value are replaced, others kept.
  CPoly specialize(const std::vector<const Scalar*>& values) const;

  /// Moves into a larger shape, symbol i going to i + offset.
  CPoly embed(const ShapePtr& target, size_t offset) const;
  /// Ring map sending symbol i to images[i]. A negative exponent requires a
  /// monomial image with an invertible coefficient.
  CPoly substitute(const ShapePtr& target, const std::vector<CPoly>& images) const;

  /// Univariate view in symbol `index` (all other exponents must be zero).
  Poly to_poly(int index) const;
  static CPoly from_poly(const ShapePtr& shape, int index, const Poly& p);

  /// Largest exponent magnitude over all terms.
  int max_degree() const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Scalar& c);
  void normalize_exponents(Exponents& e) const;
  void adopt_shape(const CPoly& o);

  ShapePtr shape_;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace fiberlab
