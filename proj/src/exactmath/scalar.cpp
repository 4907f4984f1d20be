#include "fiberlab/exactmath/scalar.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>

#include "fiberlab/error.hpp"

namespace fiberlab {

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::recursive_mutex mutex;
  static std::map<int, std::vector<long>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // x^n - 1 divided by every Phi_d with d | n, d < n. All divisors are monic
  // with integer coefficients, so the long division stays integral.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_polynomial(d);
    const int dq = static_cast<int>(q.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<long> quotient(dp - dq + 1, 0);
    for (int i = dp; i >= dq; --i) {
      const long c = p[i];
      quotient[i - dq] = c;
      for (int j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = std::move(quotient);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

namespace {

// Reduces a coefficient vector (any length) modulo Phi_n in place and trims it
// to exactly phi(n) entries.
void reduce_mod_cyclotomic(std::vector<Rational>& c, int n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi_poly.size()) - 1;
  for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
    if (c[i] == 0) continue;
    const Rational lead = c[i];
    for (int j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) c[i - deg + j] -= lead * phi_poly[j];
    }
    c[i] = 0;
  }
  c.resize(deg);
}

// Solves A y = b (A given by columns) over Q; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
  const size_t rows = b.size();
  const size_t ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = b[r];
  }
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t c = 0; c < ncols && row < rows; ++c) {
    size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (size_t k = c; k <= ncols; ++k) m[row][k] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (size_t k = c; k <= ncols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  for (size_t r = row; r < rows; ++r) {
    if (m[r][ncols] != 0) return std::nullopt;
  }
  std::vector<Rational> y(ncols);
  for (size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = m[i][ncols];
  return y;
}

std::vector<Rational> power_basis_element(int n, long exponent) {
  long e = exponent % n;
  if (e < 0) e += n;
  std::vector<Rational> c(std::max<long>(e + 1, 1));
  c[e] = 1;
  reduce_mod_cyclotomic(c, n);
  return c;
}

}  // namespace

Scalar Scalar::root_of_unity(int order, long exponent) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "root of unity order must be positive");
  Scalar s(order, power_basis_element(order, exponent));
  s.canonicalize();
  return s;
}

Scalar Scalar::from_coeffs(int order, std::vector<Rational> coeffs) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  reduce_mod_cyclotomic(coeffs, order);
  Scalar s(order, std::move(coeffs));
  s.canonicalize();
  return s;
}

const Rational& Scalar::as_rational() const {
  if (order_ != 1) throw Error(ErrorKind::InvalidArgument, "scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

void Scalar::canonicalize() {
  if (order_ == 1) return;
  bool rational = true;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      rational = false;
      break;
    }
  }
  if (rational) {
    coeffs_.resize(1);
    order_ = 1;
    return;
  }
  for (int d = 3; d < order_; ++d) {
    if (order_ % d != 0 || d % 4 == 2) continue;
    const int step = order_ / d;
    const int phi_d = totient(d);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(phi_d);
    for (int j = 0; j < phi_d; ++j) cols.push_back(power_basis_element(order_, long(j) * step));
    if (auto y = solve_columns(cols, coeffs_)) {
      order_ = d;
      coeffs_ = std::move(*y);
      return;
    }
  }
}

std::vector<Rational> Scalar::embedded(int target) const {
  if (target == order_) return coeffs_;
  const int step = target / order_;
  std::vector<Rational> c(target);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[(i * step) % target] += coeffs_[i];
  reduce_mod_cyclotomic(c, target);
  return c;
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> z = 0;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * double(i) / double(order_);
    z += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (order_ == o.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    const int l = std::lcm(order_, o.order_);
    coeffs_ = embedded(l);
    const auto oc = o.embedded(l);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += oc[i];
    order_ = l;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (order_ == 1 && o.order_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    canonicalize();
    return *this;
  }
  if (order_ == 1) {
    const Rational f = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= f;
    canonicalize();
    return *this;
  }
  const int l = std::lcm(order_, o.order_);
  const auto a = embedded(l);
  const auto b = o.embedded(l);
  std::vector<Rational> prod(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
  }
  reduce_mod_cyclotomic(prod, l);
  order_ = l;
  coeffs_ = std::move(prod);
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
  if (order_ == 1) return Scalar(Rational(1) / coeffs_[0]);
  // Columns of the multiplication-by-this matrix in the power basis.
  const int phi = static_cast<int>(coeffs_.size());
  std::vector<std::vector<Rational>> cols;
  cols.reserve(phi);
  for (int j = 0; j < phi; ++j) {
    std::vector<Rational> c(coeffs_.size() + j);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + j] = coeffs_[i];
    reduce_mod_cyclotomic(c, order_);
    cols.push_back(std::move(c));
  }
  std::vector<Rational> e0(phi);
  e0[0] = 1;
  auto y = solve_columns(cols, e0);
  if (!y) throw Error(ErrorKind::DivisionByZero, "singular multiplication map");
  Scalar r(order_, std::move(*y));
  r.canonicalize();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero scalar");
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c /= o.coeffs_[0];
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar Scalar::conjugate() const {
  if (order_ == 1) return *this;
  std::vector<Rational> c(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[(order_ - i) % order_] += coeffs_[i];
  return from_coeffs(order_, std::move(c));
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Scalar::to_string() const {
  if (order_ == 1) return coeffs_[0].get_str();
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "zeta(" + std::to_string(order_) + "," + std::to_string(i) + ")";
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace fiberlab
