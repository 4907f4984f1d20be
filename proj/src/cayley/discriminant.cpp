#include "fiberlab/cayley/discriminant.hpp"

#include <algorithm>
#include <set>

#include "fiberlab/error.hpp"
#include "fiberlab/findim/analysis.hpp"

namespace fiberlab {

std::string to_string(IdealForm form) {
  switch (form) {
    case IdealForm::Unit:
      return "unit";
    case IdealForm::Zero:
      return "zero";
    case IdealForm::Principal:
      return "principal";
    case IdealForm::Subspace:
      return "subspace";
  }
  return "?";
}

std::string to_string(LocusClass c) {
  switch (c) {
    case LocusClass::Empty:
      return "empty";
    case LocusClass::Identity:
      return "identity";
    case LocusClass::All:
      return "all";
    case LocusClass::Other:
      return "other";
  }
  return "?";
}

namespace {

std::string variable_name(const CentralBase& base) {
  return base.variable >= 0 ? base.shape->symbols[static_cast<size_t>(base.variable)].name : "T";
}

/// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(size_t n, size_t k, F&& f) {
  if (k > n) return;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Smallest exponent of the base variable over the Gram entries (0 when none is negative).
int laurent_shift(const TraceData& td) {
  int lo = 0;
  for (const auto& e : td.gram.data())
    for (const auto& [exps, c] : e.terms()) lo = std::min(lo, exps.at(static_cast<size_t>(td.base.variable)));
  return -lo;
}

/// Gram entries times z^shift as ordinary polynomials.
PMatrix shifted_gram(const TraceData& td, int shift) {
  const size_t n = td.gram.rows();
  const size_t v = static_cast<size_t>(td.base.variable);
  PMatrix p(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly acc;
      for (const auto& [exps, c] : td.gram(i, j).terms()) acc += Poly::monomial(c, exps.at(v) + shift);
      p(i, j) = acc;
    }
  return p;
}

IdealDescriptor principal_ideal(const CentralBase& base, Poly g) {
  IdealDescriptor id;
  id.base = base;
  if (g.is_zero()) {
    id.form = IdealForm::Zero;
    return id;
  }
  if (base.laurent) g = g.strip_variable_power();
  g = g.monic();
  if (g.degree() == 0) {
    id.form = IdealForm::Unit;
    return id;
  }
  id.form = IdealForm::Principal;
  id.generator = g;
  return id;
}

Scalar character_value(const CentralCharacter& chi, const CPoly::Exponents& e) {
  Scalar v(1);
  for (size_t i = 0; i < e.size(); ++i) v *= chi.values[i].pow(e[i]);
  return v;
}

/// Primitive idempotent of a finite C supported at chi.
SVector idempotent(const CentralShape& shape, const CentralCharacter& chi) {
  const auto monos = finite_monomials(shape);
  const Scalar inv_order = Scalar(1) / Scalar(static_cast<long>(monos.size()));
  SVector e;
  for (const auto& m : monos) e.push_back(character_value(chi, m).inverse() * inv_order);
  return e;
}

IdealDescriptor supported_ideal(const CentralBase& base, const std::vector<bool>& support) {
  IdealDescriptor id;
  id.base = base;
  const size_t order = base.points.size();
  const size_t count = static_cast<size_t>(std::count(support.begin(), support.end(), true));
  if (count == 0) {
    id.form = IdealForm::Zero;
    return id;
  }
  if (count == order) {
    id.form = IdealForm::Unit;
    return id;
  }
  std::vector<SVector> gens;
  for (size_t p = 0; p < order; ++p)
    if (support[p]) gens.push_back(idempotent(*base.shape, base.points[p]));
  id.form = IdealForm::Subspace;
  id.basis = span_basis(gens, order);
  return id;
}

bool has_nonzero_principal_minor(const SMatrix& g, size_t k) {
  bool found = false;
  for_each_subset(g.rows(), k, [&](const std::vector<size_t>& s) {
    if (!found && !det(g.submatrix(s, s)).is_zero()) found = true;
  });
  return found;
}

CentralCharacter field_point() { return CentralCharacter{}; }

std::vector<Scalar> root_candidates(const CentralBase& base) {
  std::vector<Scalar> c;
  const auto space = characters_of_C(*base.shape);
  for (const auto& s : base.laurent ? space.laurent_samples : space.primitive_samples) c.push_back(s);
  for (int order = 1; order <= 24; ++order)
    for (long e = 0; e < order; ++e) c.push_back(Scalar::root_of_unity(order, e));
  for (long q = 1; q <= 16; ++q)
    for (long p = -64; p <= 64; ++p) c.push_back(Scalar::rational(p, q));
  return c;
}

}  // namespace

std::string IdealDescriptor::to_string() const {
  switch (form) {
    case IdealForm::Unit:
      return "(1)";
    case IdealForm::Zero:
      return "(0)";
    case IdealForm::Principal:
      return "(" + generator.to_string(variable_name(base)) + ")";
    case IdealForm::Subspace: {
      std::string s = "span{";
      for (size_t i = 0; i < basis.size(); ++i)
        s += (i ? ", " : "") + from_finite_coordinates(base.shape, basis[i]).to_string();
      return s + "}";
    }
  }
  return "?";
}

std::vector<CPoly::Exponents> finite_monomials(const CentralShape& shape) {
  std::vector<CPoly::Exponents> out = {CPoly::Exponents(shape.size(), 0)};
  for (size_t i = 0; i < shape.size(); ++i) {
    std::vector<CPoly::Exponents> next;
    for (const auto& m : out)
      for (int e = 0; e < shape.symbols[i].order; ++e) {
        auto x = m;
        x[i] = e;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

SVector finite_coordinates(const CentralShape& shape, const CPoly& c) {
  const auto monos = finite_monomials(shape);
  SVector v(monos.size());
  for (const auto& [exps, coeff] : c.terms()) {
    CPoly::Exponents e = exps;
    e.resize(shape.size(), 0);
    const auto it = std::find(monos.begin(), monos.end(), e);
    if (it == monos.end()) throw Error(ErrorKind::InvalidArgument, "monomial outside the finite central basis");
    v[static_cast<size_t>(it - monos.begin())] += coeff;
  }
  return v;
}

CPoly from_finite_coordinates(const ShapePtr& shape, const SVector& v) {
  const auto monos = finite_monomials(*shape);
  CPoly c(shape, Scalar());
  for (size_t i = 0; i < monos.size(); ++i)
    if (!v[i].is_zero()) c += CPoly::monomial(shape, monos[i], v[i]);
  return c;
}

IdealDescriptor modified_discriminant_ideal(const TraceData& td, size_t k) {
  const CentralBase& base = td.base;
  const size_t n = td.gram.rows();
  IdealDescriptor id;
  id.base = base;
  if (k > n) return id;
  switch (base.kind) {
    case BaseKind::Field:
      id.form = rank(specialize_gram(td, field_point())) >= k ? IdealForm::Unit : IdealForm::Zero;
      return id;
    case BaseKind::Univariate: {
      const int shift = laurent_shift(td);
      return principal_ideal(base, determinantal_divisor(shifted_gram(td, shift), k));
    }
    case BaseKind::Finite: {
      std::vector<bool> support;
      for (const auto& chi : base.points) support.push_back(rank(specialize_gram(td, chi)) >= k);
      return supported_ideal(base, support);
    }
  }
  return id;
}

IdealDescriptor discriminant_ideal_sub(const TraceData& td, size_t k) {
  const CentralBase& base = td.base;
  const size_t n = td.gram.rows();
  IdealDescriptor id;
  id.base = base;
  id.sub_ideal = true;
  if (k > n) return id;
  switch (base.kind) {
    case BaseKind::Field:
      id.form = has_nonzero_principal_minor(specialize_gram(td, field_point()), k) ? IdealForm::Unit : IdealForm::Zero;
      return id;
    case BaseKind::Univariate: {
      const PMatrix p = shifted_gram(td, laurent_shift(td));
      Poly g;
      for_each_subset(n, k, [&](const std::vector<size_t>& s) {
        const Poly d = det(p.submatrix(s, s));
        if (d.is_zero()) return;
        g = g.is_zero() ? d.monic() : poly_gcd_monic(g, d);
      });
      id = principal_ideal(base, g);
      id.sub_ideal = true;
      return id;
    }
    case BaseKind::Finite: {
      std::vector<bool> support;
      for (const auto& chi : base.points) support.push_back(has_nonzero_principal_minor(specialize_gram(td, chi), k));
      id = supported_ideal(base, support);
      id.sub_ideal = true;
      return id;
    }
  }
  return id;
}

CPoly discriminant(const TraceData& td) {
  const CentralBase& base = td.base;
  const size_t n = td.gram.rows();
  switch (base.kind) {
    case BaseKind::Field:
      return CPoly(base.shape, det(specialize_gram(td, field_point())));
    case BaseKind::Univariate: {
      const int shift = laurent_shift(td);
      CPoly d = CPoly::from_poly(base.shape, base.variable, det(shifted_gram(td, shift)));
      if (shift != 0) d *= CPoly::symbol(base.shape, base.variable, -static_cast<int>(n) * shift);
      return d;
    }
    case BaseKind::Finite: {
      SVector coords(base.points.size());
      for (const auto& chi : base.points) {
        const Scalar d = det(specialize_gram(td, chi));
        if (d.is_zero()) continue;
        const SVector e = idempotent(*base.shape, chi);
        for (size_t i = 0; i < coords.size(); ++i) coords[i] += d * e[i];
      }
      return from_finite_coordinates(base.shape, coords);
    }
  }
  return CPoly();
}

bool ideal_contained(const IdealDescriptor& i, const IdealDescriptor& j) {
  if (i.form == IdealForm::Zero || j.form == IdealForm::Unit) return true;
  if (j.form == IdealForm::Zero || i.form == IdealForm::Unit) return false;
  if (i.form == IdealForm::Principal && j.form == IdealForm::Principal)
    return divmod(i.generator, j.generator).second.is_zero();
  if (i.form == IdealForm::Subspace && j.form == IdealForm::Subspace)
    return std::all_of(i.basis.begin(), i.basis.end(), [&](const SVector& v) { return in_span(j.basis, v); });
  throw Error(ErrorKind::InvalidArgument, "ideals over different central rings");
}

bool ZeroLocus::contains(const CentralBase& base, const CentralCharacter& chi) const {
  if (all) return true;
  if (base.kind == BaseKind::Univariate)
    return std::find(roots.begin(), roots.end(), chi.values.at(static_cast<size_t>(base.variable))) != roots.end();
  return std::find(points.begin(), points.end(), chi) != points.end();
}

std::string ZeroLocus::describe(const CentralBase& base) const {
  if (all) return "all";
  std::vector<std::string> items;
  if (base.kind == BaseKind::Univariate) {
    for (const auto& r : roots) items.push_back(variable_name(base) + "=" + r.to_string());
  } else {
    for (const auto& p : points) items.push_back(label(*base.shape, p));
  }
  if (items.empty()) return "empty";
  std::string s = "{";
  for (size_t i = 0; i < items.size(); ++i) s += (i ? "; " : "") + items[i];
  return s + "}";
}

ZeroLocus zero_locus(const IdealDescriptor& id) {
  ZeroLocus z;
  if (id.form == IdealForm::Zero) {
    z.all = true;
    return z;
  }
  if (id.form == IdealForm::Unit) return z;
  if (id.form == IdealForm::Subspace) {
    for (const auto& chi : id.base.points) {
      const bool vanishes = std::all_of(id.basis.begin(), id.basis.end(), [&](const SVector& v) {
        return from_finite_coordinates(id.base.shape, v).evaluate(chi.values).is_zero();
      });
      if (vanishes) z.points.push_back(chi);
    }
    return z;
  }
  Poly r = id.generator;
  if (r.low_degree() > 0) {
    z.roots.push_back(Scalar());
    r = r.strip_variable_power();
  }
  for (const auto& c : root_candidates(id.base)) {
    if (r.degree() <= 0) break;
    if (!r.evaluate(c).is_zero()) continue;
    const Poly linear(std::vector<Scalar>{-c, Scalar(1)});
    while (r.degree() > 0 && r.evaluate(c).is_zero()) r = exact_div(r, linear);
    z.roots.push_back(c);
  }
  if (r.degree() > 0)
    throw Error(ErrorKind::UnrecognizedRoot, "residual factor " + r.to_string(variable_name(id.base)) + " of " +
                                                 id.generator.to_string(variable_name(id.base)));
  std::sort(z.roots.begin(), z.roots.end());
  return z;
}

bool same_zero_locus(const IdealDescriptor& a, const IdealDescriptor& b) {
  const ZeroLocus za = zero_locus(a);
  const ZeroLocus zb = zero_locus(b);
  if (za.all != zb.all) return false;
  if (a.base.kind == BaseKind::Univariate) return za.roots == zb.roots;
  std::set<CentralCharacter, CharacterLess> pa(za.points.begin(), za.points.end());
  std::set<CentralCharacter, CharacterLess> pb(zb.points.begin(), zb.points.end());
  return pa == pb;
}

SdProfile sd_profile(const HopfPresentation& pres, const SymbolicAlgebra& algebra,
                     const std::optional<std::vector<Scalar>>& samples) {
  SdProfile p;
  p.space = characters_of_C(*pres.central, samples);
  p.dim = algebra.dim;
  for (const auto& chi : p.space.characters) p.sd.push_back(sd(specialize(algebra, chi)));
  return p;
}

std::vector<CentralCharacter> sd_zero_locus(const SdProfile& profile, size_t k) {
  std::vector<CentralCharacter> out;
  for (size_t i = 0; i < profile.sd.size(); ++i)
    if (profile.sd[i] < k) out.push_back(profile.space.characters[i]);
  return out;
}

size_t lowest_level(const SdProfile& profile) {
  return *std::min_element(profile.sd.begin(), profile.sd.end()) + 1;
}

namespace {

LocusClass classify_sampled(const SdProfile& profile, const std::vector<CentralCharacter>& locus) {
  if (locus.empty()) return LocusClass::Empty;
  if (locus.size() == profile.space.characters.size()) return LocusClass::All;
  if (locus.size() == 1 && locus.front() == profile.space.characters.front()) return LocusClass::Identity;
  return LocusClass::Other;
}

LocusClass classify_symbolic(const CentralBase& base, const ZeroLocus& z, const CentralCharacter& identity) {
  if (z.all) return LocusClass::All;
  if (base.kind == BaseKind::Univariate) {
    if (z.roots.empty()) return LocusClass::Empty;
    if (z.roots.size() == 1 && z.roots.front() == identity.values.at(static_cast<size_t>(base.variable)))
      return LocusClass::Identity;
    return LocusClass::Other;
  }
  if (z.points.empty()) return LocusClass::Empty;
  if (z.points.size() == base.points.size()) return LocusClass::All;
  if (z.points.size() == 1 && z.points.front() == identity) return LocusClass::Identity;
  return LocusClass::Other;
}

}  // namespace

DiscTable discriminant_table(const TraceData& td, const SdProfile& profile, size_t k_min, size_t k_max) {
  DiscTable t;
  t.base = td.base;
  t.lowest_level = lowest_level(profile);
  t.discriminant = discriminant(td);
  const CentralCharacter& identity = profile.space.characters.front();
  std::optional<IdealDescriptor> previous;
  for (size_t k = k_min; k <= k_max; ++k) {
    DiscRow row;
    row.k = k;
    row.md = modified_discriminant_ideal(td, k);
    row.sub = discriminant_ideal_sub(td, k);
    row.locus = zero_locus(row.md);
    row.sd_locus = sd_zero_locus(profile, k);
    row.sandwich = same_zero_locus(row.sub, row.md);
    row.symbolic_class = classify_symbolic(td.base, row.locus, identity);
    row.sd_class = classify_sampled(profile, row.sd_locus);
    for (size_t i = 0; i < profile.sd.size(); ++i) {
      const auto& chi = profile.space.characters[i];
      if (row.locus.contains(td.base, chi) != (profile.sd[i] < k))
        throw Error(ErrorKind::ConsistencyViolation, "k = " + std::to_string(k) + " at " + label(*td.base.shape, chi) +
                                                         ": Sd = " + std::to_string(profile.sd[i]) +
                                                         " but MD_k locus is " + row.locus.describe(td.base));
    }
    if (!ideal_contained(row.sub, row.md)) t.chain_ok = false;
    if (previous && !ideal_contained(row.md, *previous)) t.chain_ok = false;
    previous = row.md;
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace fiberlab
