#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "fiberlab/exactmath/rational.hpp"

namespace fiberlab {

/// Euler's totient.
int totient(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.
///
/// The stored order is always the conductor of the element: the smallest N
/// (never 2 mod 4) with the value in Q(zeta_N). Rationals have order 1. This
/// makes the representation unique, so equality is coefficientwise.
class Scalar {
 public:
  Scalar() : order_(1), coeffs_(1) {}
  Scalar(long v) : order_(1), coeffs_{Rational(v)} {}  // NOLINT(implicit)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}      // NOLINT(implicit)
  Scalar(const Rational& q) : order_(1), coeffs_{q} {}  // NOLINT(implicit)

  /// zeta_order^exponent.
  static Scalar root_of_unity(int order, long exponent);
  static Scalar rational(long num, long den) { return Scalar(make_rational(num, den)); }

  /// Builds order-N coordinates and canonicalizes them.
  static Scalar from_coeffs(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return order_ == 1 && coeffs_[0] == 0; }
  bool is_one() const { return order_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return order_ == 1; }
  /// Throws InvalidArgument unless rational.
  const Rational& as_rational() const;

  std::complex<double> to_complex() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(long e) const;
  /// Complex conjugate (zeta -> zeta^-1).
  Scalar conjugate() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Exact text form, e.g. "3/2", "zeta(4,1)", "1/2 - 3*zeta(3,1)". Parsable by
  /// the presentation grammar.
  std::string to_string() const;

 private:
  Scalar(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  void canonicalize();
  std::vector<Rational> embedded(int target_order) const;

  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace fiberlab
