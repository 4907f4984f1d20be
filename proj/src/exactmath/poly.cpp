#include "fiberlab/exactmath/poly.hpp"

#include "fiberlab/error.hpp"

namespace fiberlab {

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Poly::low_degree() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Scalar(long(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = leading().inverse();
  Poly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Poly Poly::strip_variable_power() const {
  const int low = low_degree();
  if (low == 0) return *this;
  return Poly(std::vector<Scalar>(coeffs_.begin() + low, coeffs_.end()));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = !c.is_rational() && cs.find_first_of("+-", 1) != std::string::npos;
    bool negative = false;
    if (c.is_rational() && c.as_rational() < 0) {
      negative = true;
      cs = (-c).to_string();
    }
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (compound) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(a.degree() - b.degree() + 1);
  const Scalar inv = b.leading().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    const Scalar f = rem[i] * inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) {
      if (!b.coeffs()[j].is_zero()) rem[i - db + j] -= f * b.coeffs()[j];
    }
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, b.to_string() + " does not divide " + a.to_string());
  }
  return q;
}

Poly poly_gcd_monic(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_constant()) return p.is_zero() ? p : Poly(1);
  return exact_div(p, poly_gcd_monic(p, p.derivative())).monic();
}

}  // namespace fiberlab
