#include "fiberlab/presentation/central.hpp"

#include <cstdlib>
#include <mutex>

#include "fiberlab/error.hpp"

namespace fiberlab {

std::string to_string(CentralKind kind) {
  switch (kind) {
    case CentralKind::GroupLikeTorsion: return "group-like-torsion";
    case CentralKind::GroupLikeFree: return "group-like-free";
    case CentralKind::PrimitiveFree: return "primitive-free";
    case CentralKind::Generic: return "generic";
  }
  return "unknown";
}

int CentralShape::index_of(const std::string& name) const {
  for (size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i].name == name) return static_cast<int>(i);
  return -1;
}

bool CentralShape::all_torsion() const {
  for (const auto& s : symbols)
    if (s.kind != CentralKind::GroupLikeTorsion) return false;
  return true;
}

size_t CentralShape::torsion_group_order() const {
  size_t n = 1;
  for (const auto& s : symbols)
    if (s.kind == CentralKind::GroupLikeTorsion) n *= s.order;
  return n;
}

ShapePtr doubled_shape(const ShapePtr& shape) {
  auto d = std::make_shared<CentralShape>();
  if (!shape) return d;
  for (const auto& s : shape->symbols) {
    CentralSymbol c = s;
    c.name = s.name + "_L";
    d->symbols.push_back(c);
  }
  for (const auto& s : shape->symbols) {
    CentralSymbol c = s;
    c.name = s.name + "_R";
    d->symbols.push_back(c);
  }
  return d;
}

CPoly::CPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

CPoly::CPoly(ShapePtr shape, const Scalar& c) : shape_(std::move(shape)) {
  if (!c.is_zero()) terms_.emplace(Exponents(shape_ ? shape_->size() : 0, 0), c);
}

CPoly CPoly::symbol(const ShapePtr& shape, int index, int power, const Scalar& c) {
  Exponents e(shape->size(), 0);
  e.at(index) = power;
  return monomial(shape, std::move(e), c);
}

CPoly CPoly::monomial(const ShapePtr& shape, Exponents exps, const Scalar& c) {
  CPoly p;
  p.shape_ = shape;
  if (exps.size() != (shape ? shape->size() : 0))
    throw Error(ErrorKind::InvalidArgument, "exponent vector does not match the central shape");
  p.normalize_exponents(exps);
  p.add_term(exps, c);
  return p;
}

void CPoly::normalize_exponents(Exponents& e) const {
  if (!shape_) return;
  for (size_t i = 0; i < e.size(); ++i) {
    const auto& s = shape_->symbols[i];
    if (s.kind == CentralKind::GroupLikeTorsion) {
      e[i] %= s.order;
      if (e[i] < 0) e[i] += s.order;
    } else if (e[i] < 0 && s.kind != CentralKind::GroupLikeFree) {
      throw Error(ErrorKind::InvalidArgument, "negative power of non-invertible symbol " + s.name);
    }
  }
}

void CPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CPoly::adopt_shape(const CPoly& o) {
  if (shape_ || !o.shape_) return;
  shape_ = o.shape_;
  // Constants stored with empty exponents get padded to the shape.
  std::map<Exponents, Scalar> padded;
  for (auto& [e, c] : terms_) padded.emplace(Exponents(shape_->size(), 0), c);
  terms_ = std::move(padded);
}

bool CPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x != 0) return false;
  return true;
}

Scalar CPoly::constant_term() const {
  for (const auto& [e, c] : terms_) {
    bool zero = true;
    for (int x : e) zero = zero && x == 0;
    if (zero) return c;
  }
  return Scalar();
}

Scalar CPoly::as_constant() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "central element " + to_string() + " is not constant");
  return constant_term();
}

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  adopt_shape(o);
  if (shape_ && o.shape_ && shape_ != o.shape_ && shape_->size() != o.shape_->size())
    throw Error(ErrorKind::InvalidArgument, "central shape mismatch");
  for (const auto& [e, c] : o.terms_) {
    if (e.empty() && shape_) {
      add_term(Exponents(shape_->size(), 0), c);
    } else {
      add_term(e, c);
    }
  }
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) { return *this += -o; }

CPoly& CPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) {
  if (o.is_constant() && !o.shape_) return *this *= o.constant_term();
  adopt_shape(o);
  CPoly other = o;
  other.adopt_shape(*this);
  if (shape_ && other.shape_ && shape_->size() != other.shape_->size())
    throw Error(ErrorKind::InvalidArgument, "central shape mismatch");
  CPoly result;
  result.shape_ = shape_;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      Exponents e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      result.normalize_exponents(e);
      result.add_term(e, c1 * c2);
    }
  }
  *this = std::move(result);
  return *this;
}

Scalar CPoly::evaluate(const std::vector<Scalar>& values) const {
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= values.at(i).pow(e[i]);
    }
    total += t;
  }
  return total;
}

CPoly CPoly::specialize(const std::vector<const Scalar*>& values) const {
  CPoly result;
  result.shape_ = shape_;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    Scalar t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (values.at(i) && e[i] != 0) {
        t *= values[i]->pow(e[i]);
        ne[i] = 0;
      }
    }
    result.add_term(ne, t);
  }
  return result;
}

CPoly CPoly::embed(const ShapePtr& target, size_t offset) const {
  CPoly result;
  result.shape_ = target;
  for (const auto& [e, c] : terms_) {
    Exponents ne(target->size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne.at(i + offset) = e[i];
    result.add_term(ne, c);
  }
  return result;
}

CPoly CPoly::substitute(const ShapePtr& target, const std::vector<CPoly>& images) const {
  CPoly result(target, Scalar());
  for (const auto& [e, c] : terms_) {
    CPoly t(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      CPoly base = images.at(i);
      int k = e[i];
      if (k < 0) {
        if (base.terms_.size() != 1)
          throw Error(ErrorKind::InvalidArgument, "cannot invert non-monomial image " + base.to_string());
        Exponents be = base.terms_.begin()->first;
        const Scalar bc = base.terms_.begin()->second;
        for (auto& x : be) x = -x;
        base = monomial(base.shape_ ? base.shape_ : target,
                        be.empty() ? Exponents(target->size(), 0) : be, bc.inverse());
        k = -k;
      }
      for (int j = 0; j < k; ++j) t *= base;
    }
    result += t;
  }
  return result;
}

Poly CPoly::to_poly(int index) const {
  std::vector<Scalar> coeffs;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == index) {
        deg = e[i];
      } else if (e[i] != 0) {
        throw Error(ErrorKind::UnsupportedCentralShape, "element " + to_string() + " is not univariate");
      }
    }
    if (deg < 0) throw Error(ErrorKind::UnsupportedCentralShape, "negative power in univariate view");
    if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += c;
  }
  return Poly(coeffs);
}

CPoly CPoly::from_poly(const ShapePtr& shape, int index, const Poly& p) {
  CPoly r(shape, Scalar());
  for (int d = 0; d <= p.degree(); ++d) r += symbol(shape, index, d, p.coeffs()[d]);
  return r;
}

int CPoly::max_degree() const {
  int m = 0;
  for (const auto& [e, c] : terms_)
    for (int x : e) m = std::max(m, std::abs(x));
  return m;
}

std::string CPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += shape_ ? shape_->symbols[i].name : "?";
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    bool negative = false;
    if (c.is_rational() && c.as_rational() < 0) {
      negative = true;
      cs = (-c).to_string();
    } else if (!c.is_rational() && cs.find_first_of("+-", 1) != std::string::npos) {
      cs = "(" + cs + ")";
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else {
      term = (cs == "1" ? "" : cs + "*") + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace fiberlab
