#include "fiberlab/presentation/fiber.hpp"

#include "fiberlab/error.hpp"

namespace fiberlab {

SymbolicAlgebra symbolic_structure(const HopfPresentation& pres) {
  SymbolicAlgebra s;
  s.shape = pres.central;
  s.dim = pres.dim();
  for (const auto& w : pres.basis) s.basis_labels.push_back(pres.format(w));
  s.sc.assign(s.dim, std::vector<std::vector<CPoly>>(s.dim));
  for (size_t i = 0; i < s.dim; ++i)
    for (size_t j = 0; j < s.dim; ++j)
      s.sc[i][j] = pres.coordinates(pres.normal_form(concat(pres.basis[i], pres.basis[j])));
  return s;
}

StructureConstAlgebra specialize(const SymbolicAlgebra& s, const CentralCharacter& chi) {
  StructureConstAlgebra a;
  a.dim = s.dim;
  a.basis_labels = s.basis_labels;
  a.sc.assign(a.dim, std::vector<SVector>(a.dim, SVector(a.dim)));
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k) a.sc[i][j][k] = s.sc[i][j][k].evaluate(chi.values);
  a.unit = SVector(a.dim);
  for (size_t i = 0; i < a.dim; ++i)
    if (s.basis_labels[i] == "1") a.unit[i] = Scalar(1);
  return a;
}

SVector fiber_coordinates(const HopfPresentation& pres, const NCPoly& element, const CentralCharacter& chi) {
  const auto coords = pres.coordinates(pres.normal_form(element));
  SVector v(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) v[i] = coords[i].evaluate(chi.values);
  return v;
}

namespace {

int basis_or_throw(const HopfPresentation& pres, const Word& w) {
  const int idx = pres.basis_index(w);
  if (idx < 0) throw Error(ErrorKind::BasisNotClosed, "word " + pres.format(w) + " is not a basis word");
  return idx;
}

CoalgebraData identity_coalgebra(const HopfPresentation& pres, const CentralCharacter& id) {
  const size_t n = pres.dim();
  CoalgebraData cd{SMatrix(n * n, n), SVector(n), SMatrix(n, n)};
  const std::vector<Scalar> id2 = pair_values(id, id);
  for (size_t i = 0; i < n; ++i) {
    const NCPoly b = word_poly(pres.basis[i]);
    const TensorPoly delta = pres.coproduct_of(b);
    for (const auto& [wp, c] : delta.terms()) {
      const int p = basis_or_throw(pres, wp.first), q = basis_or_throw(pres, wp.second);
      cd.delta(p * n + q, i) += c.evaluate(id2);
    }
    cd.epsilon[i] = pres.counit_of(b);
    const SVector s = fiber_coordinates(pres, pres.antipode_of(b), id);
    for (size_t k = 0; k < n; ++k) cd.antipode(k, i) = s[k];
  }
  return cd;
}

}  // namespace

StructureConstAlgebra build_fiber(const HopfPresentation& pres, const SymbolicAlgebra& s, const CentralCharacter& chi) {
  check_character(*pres.central, chi);
  StructureConstAlgebra a = specialize(s, chi);
  bool hopf_shape = true;
  for (const auto& sym : pres.central->symbols) hopf_shape = hopf_shape && sym.kind != CentralKind::Generic;
  if (hopf_shape && chi == identity_character(*pres.central)) {
    a.coalgebra = identity_coalgebra(pres, chi);
    a.check_hopf();
  }
  return a;
}

StructureConstAlgebra build_fiber(const HopfPresentation& pres, const CentralCharacter& chi) {
  return build_fiber(pres, symbolic_structure(pres), chi);
}

StructureConstAlgebra build_total_algebra(const HopfPresentation& pres) {
  const CentralShape& shape = *pres.central;
  if (!shape.all_torsion())
    throw Error(ErrorKind::UnsupportedCentralShape, "H is finite-dimensional only when every central symbol is torsion");
  const size_t m = shape.size();
  const size_t n = pres.dim();

  // Mixed-radix enumeration of central monomials.
  std::vector<CPoly::Exponents> monos;
  const size_t csize = shape.torsion_group_order();
  for (size_t r = 0; r < csize; ++r) {
    CPoly::Exponents e(m);
    size_t x = r;
    for (size_t i = m; i-- > 0;) {
      e[i] = static_cast<int>(x % shape.symbols[i].order);
      x /= shape.symbols[i].order;
    }
    monos.push_back(e);
  }
  auto mono_index = [&](const CPoly::Exponents& e) {
    size_t r = 0;
    for (size_t i = 0; i < m; ++i) r = r * shape.symbols[i].order + static_cast<size_t>(e[i]);
    return r;
  };
  const size_t dim = csize * n;
  auto index = [&](const CPoly::Exponents& e, size_t b) { return mono_index(e) * n + b; };

  // Coordinates of an element of H in the total basis.
  auto total_coords = [&](const NCPoly& element) {
    SVector v(dim);
    const NCPoly normal = pres.normal_form(element);
    for (const auto& [w, c] : normal.terms()) {
      const size_t b = static_cast<size_t>(basis_or_throw(pres, w));
      for (const auto& [e, s] : c.terms()) v[index(e.empty() ? CPoly::Exponents(m, 0) : e, b)] += s;
    }
    return v;
  };
  auto element_of = [&](size_t r, size_t b) {
    return NCPoly(pres.basis[b], CPoly::monomial(pres.central, monos[r], Scalar(1)));
  };

  StructureConstAlgebra a;
  a.dim = dim;
  for (size_t r = 0; r < csize; ++r)
    for (size_t b = 0; b < n; ++b) {
      const std::string c = CPoly::monomial(pres.central, monos[r], Scalar(1)).to_string();
      const std::string w = pres.format(pres.basis[b]);
      a.basis_labels.push_back(c == "1" ? w : (w == "1" ? c : c + " " + w));
    }
  a.sc.assign(dim, std::vector<SVector>(dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      a.sc[i][j] = total_coords(element_of(i / n, i % n) * element_of(j / n, j % n));
  a.unit = total_coords(word_poly(Word{}));

  CoalgebraData cd{SMatrix(dim * dim, dim), SVector(dim), SMatrix(dim, dim)};
  for (size_t i = 0; i < dim; ++i) {
    const NCPoly h = element_of(i / n, i % n);
    const TensorPoly delta = pres.coproduct_of(h);
    for (const auto& [wp, c] : delta.terms()) {
      const size_t p = static_cast<size_t>(basis_or_throw(pres, wp.first));
      const size_t q = static_cast<size_t>(basis_or_throw(pres, wp.second));
      for (const auto& [e, s] : c.terms()) {
        CPoly::Exponents el(m, 0), er(m, 0);
        if (!e.empty()) {
          std::copy(e.begin(), e.begin() + m, el.begin());
          std::copy(e.begin() + m, e.end(), er.begin());
        }
        cd.delta(index(el, p) * dim + index(er, q), i) += s;
      }
    }
    cd.epsilon[i] = pres.counit_of(h);
    const SVector s = total_coords(pres.antipode_of(h));
    for (size_t k = 0; k < dim; ++k) cd.antipode(k, i) = s[k];
  }
  a.coalgebra = std::move(cd);
  a.check_algebra();
  a.check_hopf();
  return a;
}

}  // namespace fiberlab
