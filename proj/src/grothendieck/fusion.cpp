#include "fiberlab/grothendieck/fusion.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "fiberlab/error.hpp"

namespace fiberlab {

namespace {

using CharSet = std::set<CentralCharacter, CharacterLess>;

[[noreturn]] void certification_failed(const std::string& what) { throw Error(ErrorKind::CertificationFailed, what); }

bool is_identity(const CentralShape& shape, const CentralCharacter& chi) { return chi == identity_character(shape); }

/// Convolution order up to a cap, 0 when not reached.
int convolution_order(const CentralShape& shape, const CentralCharacter& chi, int cap = 64) {
  CentralCharacter p = chi;
  for (int k = 1; k <= cap; ++k) {
    if (is_identity(shape, p)) return k;
    p = convolve(shape, p, chi);
  }
  return 0;
}

Scalar round_value(const CentralSymbol& sym, std::complex<double> v, const Scalar& expected) {
  if (sym.kind == CentralKind::GroupLikeTorsion) {
    const double step = 2.0 * std::numbers::pi / sym.order;
    long e = std::lround(std::arg(v) / step);
    e = ((e % sym.order) + sym.order) % sym.order;
    const Scalar r = Scalar::root_of_unity(sym.order, e);
    if (std::abs(r.to_complex() - v) > kRoundingTolerance)
      certification_failed("central symbol " + sym.name + " does not act by a root of unity on a 1-dimensional module");
    return r;
  }
  if (std::abs(expected.to_complex() - v) > kRoundingTolerance)
    certification_failed("central symbol " + sym.name + " acts off its fiber value on a 1-dimensional module");
  return expected;
}

struct CharSetLess {
  bool operator()(const CharSet& a, const CharSet& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CharacterLess{});
  }
};

using Partition = std::set<CharSet, CharSetLess>;

std::vector<std::vector<CentralCharacter>> as_partition(const Partition& parts) {
  std::vector<std::vector<CentralCharacter>> out;
  for (const auto& p : parts) out.emplace_back(p.begin(), p.end());
  return out;
}

}  // namespace

FiberData analyze_fiber(const HopfPresentation& pres, const SymbolicAlgebra& algebra, const CentralCharacter& chi,
                        uint64_t seed) {
  FiberData f;
  f.chi = chi;
  f.algebra = build_fiber(pres, algebra, chi);
  f.analysis = analyze_algebra(f.algebra, seed);
  f.irrep_dims = f.analysis.blocks.block_dims;
  for (const auto& m : f.analysis.irreducibles) f.irreps.push_back(from_basis_action(pres, chi, m));
  return f;
}

FusionData action_matrices(const HopfPresentation& pres, const FiberData& source, const FiberData& target) {
  FusionData fd;
  fd.source_dims = source.irrep_dims;
  fd.target_dims = target.irrep_dims;
  const size_t r = target.irreps.size();
  fd.regular = IntMatrix(r, r, 0);
  for (size_t i = 0; i < source.irreps.size(); ++i) {
    IntMatrix a(r, r, 0);
    for (size_t j = 0; j < r; ++j) {
      const NumericRep t = tensor_rep(pres, source.irreps[i], target.irreps[j]);
      const NumericModule m = basis_action(pres, t);
      if (module_residual(target.algebra, m) > kRoundingTolerance)
        certification_failed("tensor product is not a module over the target fiber");
      const auto mult = composition_multiplicities(target.algebra, target.analysis.blocks, m);
      long total = 0;
      for (size_t k = 0; k < r; ++k) {
        if (mult[k] < 0) certification_failed("negative composition multiplicity");
        a(k, j) = mult[k];
        total += mult[k] * static_cast<long>(fd.target_dims[k]);
      }
      if (total != static_cast<long>(fd.source_dims[i] * fd.target_dims[j]))
        certification_failed("composition factors of V_" + std::to_string(i) + " (x) W_" + std::to_string(j) +
                             " do not account for its dimension");
    }
    for (size_t k = 0; k < r; ++k)
      for (size_t j = 0; j < r; ++j) fd.regular(k, j) += static_cast<long>(fd.source_dims[i]) * a(k, j);
    fd.action.push_back(std::move(a));
  }
  return fd;
}

RegularIdentity regular_identities(const FusionData& fusion, long sd_identity) {
  RegularIdentity r;
  r.sd_identity = sd_identity;
  const IntMatrix& t = fusion.regular;
  const IntMatrix sq = t * t;
  r.square_ok = true;
  r.positive = true;
  for (size_t i = 0; i < t.rows(); ++i) {
    r.trace += t(i, i);
    for (size_t j = 0; j < t.cols(); ++j) {
      if (sq(i, j) != sd_identity * t(i, j)) r.square_ok = false;
      if (t(i, j) <= 0) r.positive = false;
    }
  }
  r.trace_ok = r.trace == sd_identity;
  return r;
}

void require_regular_identities(const FusionData& fusion, long sd_identity) {
  const RegularIdentity r = regular_identities(fusion, sd_identity);
  if (!r.square_ok) throw Error(ErrorKind::IdentityViolation, "T_R^2 != " + std::to_string(sd_identity) + " T_R");
  if (!r.trace_ok)
    throw Error(ErrorKind::IdentityViolation,
                "trace(T_R) = " + std::to_string(r.trace) + ", expected " + std::to_string(sd_identity));
  if (!r.positive) throw Error(ErrorKind::IdentityViolation, "T_R has a non-positive entry");
}

FPdimResult fpdim(const FusionData& self_fusion, bool identity_chevalley) {
  FPdimResult r;
  if (identity_chevalley) {
    long s = 0;
    for (size_t d : self_fusion.source_dims) s += static_cast<long>(d * d);
    r.method = "fusion";
    r.exact = s;
    r.value = static_cast<double>(s);
    return r;
  }
  r.method = "perron";
  for (const auto& a : self_fusion.action) {
    const PerronEstimate p = perron_eigenvalue(a);
    r.value += p.value * p.value;
    r.tolerance += 2.0 * p.value * p.bracket + p.bracket * p.bracket;
  }
  return r;
}

bool chevalley_locus_membership(const HopfPresentation& pres, const FiberData& identity, const FiberData& target) {
  for (const auto& v : identity.irreps)
    for (const auto& w : target.irreps) {
      const NumericModule m = basis_action(pres, tensor_rep(pres, v, w));
      if (!is_semisimple_module(target.analysis.radical, m)) return false;
    }
  return true;
}

std::vector<CentralCharacter> subgroup_I(const std::vector<FiberData>& fibers) {
  std::vector<CentralCharacter> out;
  for (const auto& f : fibers)
    if (f.analysis.one_dim_count > 0) out.push_back(f.chi);
  return out;
}

std::vector<CentralCharacter> one_dim_restrictions(const HopfPresentation& pres, const std::vector<FiberData>& fibers) {
  const auto& syms = pres.central->symbols;
  std::vector<CentralCharacter> out;
  for (const auto& f : fibers)
    for (const auto& rep : f.irreps) {
      if (rep.dim != 1) continue;
      CentralCharacter r;
      for (size_t s = 0; s < syms.size(); ++s) {
        const CMatrix m = evaluate(rep, word_poly(syms[s].defining_word));
        r.values.push_back(round_value(syms[s], m(0, 0), f.chi.values[s]));
      }
      if (r != f.chi) certification_failed("a 1-dimensional module restricts to C away from its fiber");
      out.push_back(r);
    }
  return out;
}

CosetOrbitReport coset_orbit_check(const HopfPresentation& pres, const std::vector<FiberData>& fibers) {
  const CentralShape& shape = *pres.central;
  CosetOrbitReport rep;
  CharSet torsion;
  for (const auto& f : fibers)
    if (convolution_order(shape, f.chi) > 0) torsion.insert(f.chi);
  rep.torsion.assign(torsion.begin(), torsion.end());

  CharSet sub;
  for (const auto& c : subgroup_I(fibers))
    if (torsion.count(c)) sub.insert(c);
  rep.subgroup.assign(sub.begin(), sub.end());

  rep.subgroup_ok = sub.count(identity_character(shape)) > 0;
  for (const auto& a : sub) {
    if (!sub.count(inverse_char(shape, a))) rep.subgroup_ok = false;
    for (const auto& b : sub)
      if (!sub.count(convolve(shape, a, b))) rep.subgroup_ok = false;
  }
  for (const auto& chi : torsion)
    for (const auto& i : sub)
      if (!torsion.count(convolve(shape, chi, i))) {
        rep.reason = "torsion samples are not closed under the subgroup";
        return rep;
      }
  rep.applicable = true;

  // Restrictions of H-characters, closed under convolution.
  CharSet moves;
  for (const auto& r : one_dim_restrictions(pres, fibers))
    if (torsion.count(r)) moves.insert(r);
  bool grew = true;
  while (grew) {
    grew = false;
    const CharSet snapshot = moves;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (moves.insert(convolve(shape, a, b)).second) grew = true;
  }

  Partition cosets, orbits;
  for (const auto& chi : torsion) {
    CharSet coset, orbit;
    for (const auto& i : sub) coset.insert(convolve(shape, i, chi));
    orbit.insert(chi);
    for (const auto& m : moves) orbit.insert(convolve(shape, chi, m));
    cosets.insert(coset);
    orbits.insert(orbit);
  }
  rep.cosets = as_partition(cosets);
  rep.orbits = as_partition(orbits);
  rep.equal = cosets.size() == orbits.size() &&
              std::equal(cosets.begin(), cosets.end(), orbits.begin(), [](const CharSet& a, const CharSet& b) {
                return !CharSetLess{}(a, b) && !CharSetLess{}(b, a);
              });
  if (!rep.subgroup_ok) throw Error(ErrorKind::PartitionMismatch, "the set of characters with 1-dimensional modules is not a subgroup");
  if (!rep.equal) throw Error(ErrorKind::PartitionMismatch, "cosets of the subgroup differ from the winding orbits");
  return rep;
}

}  // namespace fiberlab
