#include "fiberlab/grothendieck/theorems.hpp"

#include <algorithm>

#include "fiberlab/error.hpp"

namespace fiberlab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

Study run_study(HopfPresentation pres, uint64_t seed, const std::optional<std::vector<Scalar>>& samples) {
  Study s;
  s.pres = std::move(pres);
  s.algebra = symbolic_structure(s.pres);
  s.space = characters_of_C(*s.pres.central, samples);
  for (const auto& chi : s.space.characters) s.fibers.push_back(analyze_fiber(s.pres, s.algebra, chi, seed));
  s.identity_chevalley = chevalley_property(s.identity().algebra, s.identity().analysis.radical);
  if (s.pres.central->all_torsion()) {
    const StructureConstAlgebra total = build_total_algebra(s.pres);
    s.total_chevalley = chevalley_property(total, jacobson_radical(total));
  }
  for (const auto& f : s.fibers) s.fusion.push_back(action_matrices(s.pres, s.identity(), f));
  s.fpdim = fpdim(s.fusion.front(), s.identity_chevalley.holds);
  s.subgroup = subgroup_I(s.fibers);
  try {
    s.trace = regular_trace_over_C(s.pres, s.algebra);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedCentralShape) throw;
    s.trace_unsupported = e.what();
  }
  s.profile.space = s.space;
  s.profile.dim = s.algebra.dim;
  for (const auto& f : s.fibers) s.profile.sd.push_back(f.analysis.sd);
  return s;
}

namespace {

std::string chi_label(const Study& s, const CentralCharacter& chi) { return label(*s.pres.central, chi); }

std::string labels(const Study& s, const std::vector<CentralCharacter>& chars) {
  std::string out = "{";
  for (size_t i = 0; i < chars.size(); ++i) out += (i ? "; " : "") + chi_label(s, chars[i]);
  return out + "}";
}

std::string join(const std::vector<long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string matrix_text(const IntMatrix& m) {
  std::string out = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    out += i ? "; " : "";
    for (size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + std::to_string(m(i, j));
  }
  return out + "]";
}

CheckRecord record(std::string name, std::string anchor) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  return r;
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

void skip(CheckRecord& r, const std::string& reason) {
  r.status = CheckStatus::Skipped;
  r.data.emplace_back("reason", reason);
}

/// Identity-fiber module W (x) W* for an irreducible W at chi.
NumericModule tensor_with_dual(const Study& s, const NumericRep& w) {
  return basis_action(s.pres, tensor_rep(s.pres, w, dual_rep(s.pres, w)));
}

bool contains(const std::vector<CentralCharacter>& v, const CentralCharacter& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

CheckRecord equal_fiber_dimensions(const Study& s) {
  auto r = record("equal_fiber_dimensions", "equal fiber dimensions");
  bool ok = true;
  for (const auto& f : s.fibers) ok = ok && f.algebra.dim == s.algebra.dim;
  r.status = status_of(ok);
  r.data.emplace_back("dim", std::to_string(s.algebra.dim));
  r.data.emplace_back("characters", std::to_string(s.fibers.size()));
  return r;
}

CheckRecord sd_inequalities(const Study& s) {
  auto r = record("sd_inequalities", "square dimension inequalities");
  if (!s.identity_chevalley.holds) {
    skip(r, "identity fiber lacks the Chevalley property");
    return r;
  }
  bool ok = true;
  std::string rows;
  const long sd0 = s.sd_identity();
  for (const auto& f : s.fibers) {
    const long sd = static_cast<long>(f.analysis.sd);
    const long irr = static_cast<long>(f.analysis.irr_count);
    if (!(sd >= sd0 && sd0 >= irr)) ok = false;
    rows += (rows.empty() ? "" : "; ") + chi_label(s, f.chi) + ": " + std::to_string(sd) + " >= " + std::to_string(sd0) +
            " >= " + std::to_string(irr);
  }
  r.status = status_of(ok);
  r.data.emplace_back("scope", "sampled");
  r.data.emplace_back("rows", rows);
  return r;
}

CheckRecord regular_element(const Study& s) {
  auto r = record("regular_element_identities", "canonical regular element");
  if (!s.identity_chevalley.holds) {
    skip(r, "identity fiber lacks the Chevalley property");
    return r;
  }
  bool ok = true;
  std::string rows;
  for (size_t i = 0; i < s.fibers.size(); ++i) {
    const RegularIdentity id = regular_identities(s.fusion[i], s.sd_identity());
    ok = ok && id.ok();
    rows += (rows.empty() ? "" : "; ") + chi_label(s, s.fibers[i].chi) + ": T_R = " + matrix_text(s.fusion[i].regular) +
            ", trace " + std::to_string(id.trace) + (id.ok() ? "" : " (violated)");
  }
  r.status = status_of(ok);
  r.data.emplace_back("sd_identity", std::to_string(s.sd_identity()));
  r.data.emplace_back("rows", rows);
  return r;
}

CheckRecord coset_orbits(const Study& s) {
  auto r = record("coset_orbit_partition", "winding orbits and cosets");
  r.data.emplace_back("subgroup_I", labels(s, s.subgroup));
  try {
    const CosetOrbitReport rep = coset_orbit_check(s.pres, s.fibers);
    if (!rep.applicable) {
      skip(r, rep.reason);
      return r;
    }
    std::string parts;
    for (const auto& c : rep.cosets) parts += (parts.empty() ? "" : " | ") + labels(s, c);
    r.data.emplace_back("torsion", labels(s, rep.torsion));
    r.data.emplace_back("cosets", parts);
    r.status = CheckStatus::Pass;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PartitionMismatch) throw;
    r.status = CheckStatus::Fail;
    r.data.emplace_back("witness", e.what());
  }
  return r;
}

CheckRecord chevalley_identity(const Study& s) {
  auto r = record("chevalley_identity_fiber", "Chevalley property");
  r.status = status_of(s.identity_chevalley.holds);
  r.data.emplace_back("holds", s.identity_chevalley.holds ? "true" : "false");
  if (!s.identity_chevalley.holds) r.data.emplace_back("reason", s.identity_chevalley.reason);
  return r;
}

CheckRecord chevalley_total(const Study& s) {
  auto r = record("chevalley_total", "Chevalley property");
  if (!s.total_chevalley) {
    skip(r, "H is not finite dimensional");
    return r;
  }
  r.status = status_of(s.total_chevalley->holds);
  r.data.emplace_back("holds", s.total_chevalley->holds ? "true" : "false");
  if (!s.total_chevalley->holds) {
    r.data.emplace_back("reason", s.total_chevalley->reason);
    if (s.total_chevalley->witness) {
      std::string w;
      for (const auto& c : *s.total_chevalley->witness) w += (w.empty() ? "" : ", ") + c.to_string();
      r.data.emplace_back("witness", "(" + w + ")");
    }
  }
  return r;
}

CheckRecord chevalley_locus(const Study& s) {
  auto r = record("chevalley_locus", "Chevalley locus");
  bool all = true;
  std::string rows;
  for (const auto& f : s.fibers) {
    const bool m = chevalley_locus_membership(s.pres, s.identity(), f);
    all = all && m;
    rows += (rows.empty() ? "" : "; ") + chi_label(s, f.chi) + ": " + (m ? "in" : "out");
  }
  r.status = status_of(all == s.identity_chevalley.holds);
  r.data.emplace_back("rows", rows);
  r.data.emplace_back("identity_chevalley", s.identity_chevalley.holds ? "true" : "false");
  return r;
}

CheckRecord orbit_in_loci(const Study& s) {
  auto r = record("subgroup_in_zero_loci", "orbit in discriminant zero loci");
  if (!s.identity_chevalley.holds) {
    skip(r, "identity fiber lacks the Chevalley property");
    return r;
  }
  bool ok = true;
  std::string ks;
  for (size_t k = 1; k <= s.algebra.dim + 1; ++k) {
    const auto locus = sd_zero_locus(s.profile, k);
    if (locus.empty()) continue;
    for (const auto& c : s.subgroup) ok = ok && contains(locus, c);
    ks += (ks.empty() ? "" : ",") + std::to_string(k);
  }
  r.status = status_of(ok);
  r.data.emplace_back("scope", "sampled");
  r.data.emplace_back("nonempty_levels", ks);
  return r;
}

CheckRecord lowest_level_check(const Study& s) {
  auto r = record("lowest_level", "lowest discriminant level");
  const size_t ell = lowest_level(s.profile);
  r.data.emplace_back("level", std::to_string(ell));
  r.data.emplace_back("fpdim_method", s.fpdim.method);
  if (!s.identity_chevalley.holds || !s.fpdim.exact) {
    r.data.emplace_back("fpdim", std::to_string(s.fpdim.value));
    r.data.emplace_back("fpdim_tol", std::to_string(s.fpdim.tolerance));
    skip(r, "identity fiber lacks the Chevalley property");
    return r;
  }
  r.data.emplace_back("fpdim", std::to_string(*s.fpdim.exact));
  r.status = status_of(static_cast<long>(ell) == *s.fpdim.exact + 1);
  return r;
}

CheckRecord lowest_level_tensor(const Study& s) {
  auto r = record("lowest_level_tensor_criterion", "lowest discriminant level");
  if (!s.identity_chevalley.holds) {
    skip(r, "identity fiber lacks the Chevalley property");
    return r;
  }
  const size_t ell = lowest_level(s.profile);
  const auto& id = s.identity();
  bool ok = true;
  std::string rows;
  for (size_t f = 0; f < s.fibers.size(); ++f) {
    const auto& fib = s.fibers[f];
    const bool in_locus = fib.analysis.sd < ell;
    bool all_ss = true;
    bool mult_ok = true;
    for (size_t j = 0; j < fib.irreps.size(); ++j) {
      const NumericModule m = tensor_with_dual(s, fib.irreps[j]);
      const bool ss = is_semisimple_module(id.analysis.radical, m);
      all_ss = all_ss && ss;
      if (in_locus && ss) {
        std::vector<long> got = composition_multiplicities(id.algebra, id.analysis.blocks, m);
        std::vector<long> want;
        for (size_t i = 0; i < id.irreps.size(); ++i) want.push_back(s.fusion[f].action[i](j, j));
        if (got != want) mult_ok = false;
        rows += (rows.empty() ? "" : "; ") + chi_label(s, fib.chi) + " W" + std::to_string(j) + ": " + join(got);
      }
    }
    if (in_locus != all_ss || (in_locus && !mult_ok)) ok = false;
    if (!in_locus)
      rows += (rows.empty() ? "" : "; ") + chi_label(s, fib.chi) + ": " + (all_ss ? "semisimple" : "not semisimple");
  }
  r.status = status_of(ok);
  r.data.emplace_back("level", std::to_string(ell));
  r.data.emplace_back("rows", rows);
  return r;
}

bool is_unit(const CentralBase& base, const CPoly& c) {
  if (c.is_zero()) return false;
  switch (base.kind) {
    case BaseKind::Field:
      return true;
    case BaseKind::Univariate:
      return c.terms().size() == 1 && (base.laurent || c.is_constant());
    case BaseKind::Finite:
      return std::all_of(base.points.begin(), base.points.end(),
                         [&](const CentralCharacter& chi) { return !c.evaluate(chi.values).is_zero(); });
  }
  return false;
}

CheckRecord trivial_ideals(const Study& s) {
  auto r = record("trivial_discriminant_ideals", "trivial discriminant ideals");
  if (!s.trace) {
    skip(r, s.trace_unsupported);
    return r;
  }
  if (!s.total_chevalley) {
    skip(r, "Chevalley property of H not decidable here");
    return r;
  }
  if (!s.total_chevalley->holds) {
    skip(r, "H lacks the Chevalley property");
    return r;
  }
  bool ok = true;
  for (size_t k = 1; k <= s.algebra.dim + 1; ++k) {
    const auto f = modified_discriminant_ideal(*s.trace, k).form;
    ok = ok && (f == IdealForm::Unit || f == IdealForm::Zero);
  }
  r.status = status_of(ok);
  return r;
}

CheckRecord discriminant_test(const Study& s) {
  auto r = record("discriminant_chevalley_test", "discriminant as a Chevalley test");
  if (!s.trace) {
    skip(r, s.trace_unsupported);
    return r;
  }
  const CPoly d = discriminant(*s.trace);
  r.data.emplace_back("discriminant", d.to_string());
  if (d.is_zero() || is_unit(s.trace->base, d)) {
    skip(r, "discriminant is zero or a unit");
    return r;
  }
  r.data.emplace_back("conclusion", "H lacks the Chevalley property");
  r.status = status_of(!s.total_chevalley || !s.total_chevalley->holds);
  return r;
}

CheckRecord semisimple_fibers(const Study& s) {
  auto r = record("semisimple_fibers", "semisimple fibers");
  if (s.identity().analysis.sd != s.identity().algebra.dim) {
    skip(r, "identity fiber is not semisimple");
    return r;
  }
  bool ok = true;
  for (const auto& f : s.fibers) ok = ok && f.analysis.sd == f.algebra.dim;
  r.status = status_of(ok);
  r.data.emplace_back("scope", "sampled");
  return r;
}

}  // namespace

std::vector<CheckRecord> theorem_checks(const Study& s, const std::set<std::string>& expected_negative) {
  std::vector<CheckRecord> out = {equal_fiber_dimensions(s), sd_inequalities(s),   regular_element(s),
                                  coset_orbits(s),           chevalley_identity(s), chevalley_total(s),
                                  chevalley_locus(s),        orbit_in_loci(s),      lowest_level_check(s),
                                  lowest_level_tensor(s),    trivial_ideals(s),     discriminant_test(s),
                                  semisimple_fibers(s)};
  for (auto& r : out) {
    if (!expected_negative.count(r.name) || r.status == CheckStatus::Skipped) continue;
    r.data.emplace_back("expected", "negative");
    r.status = r.status == CheckStatus::Fail ? CheckStatus::Pass : CheckStatus::Fail;
  }
  return out;
}

}  // namespace fiberlab
