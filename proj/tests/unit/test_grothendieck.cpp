#include <gtest/gtest.h>

#include <map>

#include "fiberlab/error.hpp"
#include "fiberlab/grothendieck/theorems.hpp"

using namespace fiberlab;

namespace {

std::string corpus(const std::string& name) { return std::string(FIBERLAB_CORPUS_DIR) + "/" + name; }

const Study& study(const std::string& file) {
  static std::map<std::string, Study> cache;
  auto it = cache.find(file);
  if (it == cache.end()) it = cache.emplace(file, run_study(load_presentation(corpus(file)), 0)).first;
  return it->second;
}

size_t fiber_index(const Study& s, const Scalar& value) {
  for (size_t i = 0; i < s.fibers.size(); ++i)
    if (s.fibers[i].chi.values.front() == value) return i;
  throw std::runtime_error("no such sampled character");
}

IntMatrix swap2() { return IntMatrix{{0, 1}, {1, 0}}; }

}  // namespace

TEST(Fusion, TaftGenericFiber) {
  const auto& s = study("taft_inf_2.hopf");
  const auto& f = s.fusion[fiber_index(s, Scalar(1))];
  ASSERT_EQ(f.action.size(), 2u);
  EXPECT_EQ(f.action[0], (IntMatrix{{1}}));
  EXPECT_EQ(f.action[1], (IntMatrix{{1}}));
  EXPECT_EQ(f.regular, (IntMatrix{{2}}));
}

TEST(Fusion, TaftIdentityIsGroupRing) {
  const auto& s = study("taft_inf_2.hopf");
  const auto& f = s.fusion.front();
  ASSERT_EQ(f.action.size(), 2u);
  const IntMatrix id = IntMatrix::identity(2);
  EXPECT_TRUE((f.action[0] == id && f.action[1] == swap2()) || (f.action[0] == swap2() && f.action[1] == id));
}

TEST(Fusion, TrivialModuleActsAsIdentity) {
  for (const auto* file : {"taft_inf_2.hopf", "taft_inf_3.hopf", "ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"}) {
    const auto& s = study(file);
    const ExactRep triv = trivial_rep(s.pres);
    const NumericRep t = to_numeric_rep(triv);
    // Locate the trivial irreducible of the identity fiber by its generator values.
    std::optional<size_t> idx;
    for (size_t i = 0; i < s.identity().irreps.size(); ++i) {
      const auto& r = s.identity().irreps[i];
      if (r.dim != 1) continue;
      bool same = true;
      for (size_t g = 0; g < r.action.size(); ++g) same = same && std::abs(r.action[g](0, 0) - t.action[g](0, 0)) < 1e-8;
      if (same) idx = i;
    }
    ASSERT_TRUE(idx.has_value()) << file;
    for (const auto& f : s.fusion) EXPECT_EQ(f.action[*idx], IntMatrix::identity(f.target_dims.size())) << file;
  }
}

TEST(Fusion, ColumnDimensionSums) {
  for (const auto* file : {"taft_inf_3.hopf", "ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"}) {
    const auto& s = study(file);
    for (const auto& f : s.fusion)
      for (size_t i = 0; i < f.action.size(); ++i)
        for (size_t j = 0; j < f.target_dims.size(); ++j) {
          long total = 0;
          for (size_t k = 0; k < f.target_dims.size(); ++k) {
            EXPECT_GE(f.action[i](k, j), 0);
            total += f.action[i](k, j) * static_cast<long>(f.target_dims[k]);
          }
          EXPECT_EQ(total, static_cast<long>(f.source_dims[i] * f.target_dims[j])) << file;
        }
  }
}

TEST(FPdim, Examples) {
  EXPECT_EQ(study("taft_inf_2.hopf").fpdim.exact, 2);
  EXPECT_EQ(study("taft_inf_3.hopf").fpdim.exact, 3);
  EXPECT_EQ(study("ex3_2.hopf").fpdim.exact, 4);
  EXPECT_EQ(study("q8_central.hopf").fpdim.exact, 4);
  EXPECT_EQ(study("ex3_8.hopf").fpdim.exact, 2);
}

TEST(FPdim, PerronAgreesWithFusionCount) {
  for (const auto* file : {"taft_inf_2.hopf", "ex3_2.hopf", "q8_central.hopf"}) {
    const auto& s = study(file);
    const FPdimResult p = fpdim(s.fusion.front(), false);
    EXPECT_EQ(p.method, "perron");
    EXPECT_NEAR(p.value, static_cast<double>(*s.fpdim.exact), 1e-6) << file;
  }
}

TEST(RegularElement, Examples) {
  const auto& t = study("taft_inf_2.hopf");
  const auto id = regular_identities(t.fusion[fiber_index(t, Scalar(1))], t.sd_identity());
  EXPECT_TRUE(id.ok());
  EXPECT_EQ(id.trace, 2);
  const auto& e = study("ex3_8.hopf");
  const auto& f = e.fusion[fiber_index(e, Scalar(-1))];
  EXPECT_EQ(f.regular, (IntMatrix{{2}}));
  EXPECT_NO_THROW(require_regular_identities(f, e.sd_identity()));
  EXPECT_THROW(require_regular_identities(f, 3), Error);
}

TEST(SubgroupI, Examples) {
  for (const auto* file : {"ex3_2.hopf", "ex3_8.hopf", "q8_central.hopf", "taft_inf_2.hopf", "taft_inf_3.hopf"}) {
    const auto& s = study(file);
    ASSERT_EQ(s.subgroup.size(), 1u) << file;
    EXPECT_EQ(s.subgroup.front(), s.space.characters.front()) << file;
  }
}

TEST(CosetOrbit, CorpusPartitions) {
  for (const auto* file : {"ex3_2.hopf", "ex3_8.hopf", "q8_central.hopf", "taft_inf_2.hopf", "taft_inf_3.hopf"}) {
    const auto& s = study(file);
    const auto rep = coset_orbit_check(s.pres, s.fibers);
    EXPECT_TRUE(rep.applicable) << file;
    EXPECT_TRUE(rep.equal) << file;
    EXPECT_TRUE(rep.subgroup_ok) << file;
  }
  const auto rep = coset_orbit_check(study("ex3_8.hopf").pres, study("ex3_8.hopf").fibers);
  EXPECT_EQ(rep.cosets.size(), 2u);
}

TEST(ChevalleyLocus, Examples) {
  const auto& e = study("ex3_8.hopf");
  for (const auto& f : e.fibers) EXPECT_TRUE(chevalley_locus_membership(e.pres, e.identity(), f));
  EXPECT_TRUE(e.identity_chevalley.holds);
  ASSERT_TRUE(e.total_chevalley.has_value());
  EXPECT_FALSE(e.total_chevalley->holds);
  const auto& t = study("taft_inf_2.hopf");
  EXPECT_TRUE(chevalley_locus_membership(t.pres, t.identity(), t.fibers[fiber_index(t, Scalar(1))]));
}

TEST(TheoremChecks, CorpusAllPass) {
  const std::map<std::string, std::set<std::string>> negatives = {{"ex3_8.hopf", {"chevalley_total"}}};
  for (const auto* file : {"ex3_2.hopf", "ex3_8.hopf", "q8_central.hopf", "taft_inf_2.hopf", "taft_inf_3.hopf"}) {
    const auto it = negatives.find(file);
    for (const auto& r : theorem_checks(study(file), it == negatives.end() ? std::set<std::string>{} : it->second)) {
      EXPECT_NE(r.status, CheckStatus::Fail) << file << " " << r.name;
    }
  }
}

TEST(TheoremChecks, ExpectedNegativeFlipsStatus) {
  const auto plain = theorem_checks(study("ex3_8.hopf"));
  const auto it = std::find_if(plain.begin(), plain.end(), [](const CheckRecord& r) { return r.name == "chevalley_total"; });
  ASSERT_NE(it, plain.end());
  EXPECT_EQ(it->status, CheckStatus::Fail);
}

TEST(SdProperties, InequalitiesAndSubgroupInLoci) {
  for (const auto* file : {"ex3_2.hopf", "ex3_8.hopf", "q8_central.hopf", "taft_inf_2.hopf", "taft_inf_3.hopf"}) {
    const auto& s = study(file);
    for (const auto& f : s.fibers) {
      EXPECT_GE(f.analysis.sd, s.identity().analysis.sd) << file;
      EXPECT_GE(s.identity().analysis.sd, f.analysis.irr_count) << file;
    }
    for (size_t k = 1; k <= s.algebra.dim + 1; ++k) {
      const auto locus = sd_zero_locus(s.profile, k);
      if (locus.empty()) continue;
      for (const auto& c : s.subgroup) EXPECT_NE(std::find(locus.begin(), locus.end(), c), locus.end()) << file << k;
    }
  }
}
