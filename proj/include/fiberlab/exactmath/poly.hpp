#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fiberlab/exactmath/scalar.hpp"

namespace fiberlab {

/// Univariate polynomial over the cyclotomic scalars, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);  // NOLINT(implicit)
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(implicit)
  Poly(int c) : Poly(Scalar(c)) {}   // NOLINT(implicit)
  explicit Poly(std::vector<Scalar> coeffs);

  /// c * T^degree.
  static Poly monomial(const Scalar& c, int degree);
  static Poly variable() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const { return i >= 0 && i < int(coeffs_.size()) ? coeffs_[i] : Scalar(); }
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Multiplicity of 0 as a root (0 for the zero polynomial).
  int low_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Scalar evaluate(const Scalar& x) const;
  Poly derivative() const;
  Poly monic() const;
  /// Divides out the largest power of T.
  Poly strip_variable_power() const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws InvalidArgument when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic greatest common divisor; throws BothZero when both are zero.
Poly poly_gcd_monic(const Poly& p, const Poly& q);
/// Product of the distinct monic irreducible factors (up to a unit).
Poly squarefree_part(const Poly& p);

inline Poly exact_div_dispatch(const Poly& a, const Poly& b) { return exact_div(a, b); }

}  // namespace fiberlab
