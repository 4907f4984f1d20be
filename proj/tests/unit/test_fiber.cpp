#include <gtest/gtest.h>

#include "fiberlab/error.hpp"
#include "fiberlab/presentation/fiber.hpp"
#include "fiberlab/presentation/representation.hpp"

using namespace fiberlab;

namespace {

std::string corpus(const std::string& name) { return std::string(FIBERLAB_CORPUS_DIR) + "/" + name; }

const char* kCorpus[] = {"taft_inf_2.hopf", "taft_inf_3.hopf", "ex3_8.hopf", "ex3_2.hopf", "q8_central.hopf"};

Scalar I() { return Scalar::root_of_unity(4, 1); }

// 16-dimensional example modules: generators b c x y.
ExactRep rho5() {
  return {{{Scalar(-1)}}, 2, {SMatrix{{-1, 0}, {0, 1}}, SMatrix{{1, 0}, {0, -1}}, SMatrix{{0, 1}, {1, 0}}, SMatrix(2, 2)}};
}
ExactRep rho2() { return {{{Scalar(1)}}, 1, {SMatrix{{1}}, SMatrix{{1}}, SMatrix{{-1}}, SMatrix{{0}}}}; }

}  // namespace

TEST(Characters, Enumeration) {
  const auto h = load_presentation(corpus("ex3_8.hopf"));
  const auto space = characters_of_C(*h.central);
  ASSERT_EQ(space.characters.size(), 2u);
  EXPECT_TRUE(space.finite);
  EXPECT_EQ(space.characters[0].values[0], Scalar(1));
  EXPECT_EQ(space.characters[1].values[0], Scalar(-1));

  const auto t = load_presentation(corpus("taft_inf_2.hopf"));
  const auto ts = characters_of_C(*t.central);
  EXPECT_FALSE(ts.finite);
  ASSERT_EQ(ts.characters.size(), 5u);
  const std::vector<Scalar> expected = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar::rational(1, 2)};
  for (size_t i = 0; i < 5; ++i) EXPECT_EQ(ts.characters[i].values[0], expected[i]);
  EXPECT_EQ(label(*t.central, ts.characters[4]), "T=1/2");

  for (const char* f : kCorpus) {
    const auto p = load_presentation(corpus(f));
    EXPECT_EQ(characters_of_C(*p.central).characters.front(), identity_character(*p.central));
  }
}

TEST(Characters, Convolution) {
  const auto h = load_presentation(corpus("ex3_8.hopf"));
  const CentralCharacter m{{Scalar(-1)}};
  EXPECT_EQ(convolve(*h.central, m, m), identity_character(*h.central));
  EXPECT_EQ(convolve(*h.central, identity_character(*h.central), m), m);
  const auto t = load_presentation(corpus("taft_inf_2.hopf"));
  EXPECT_EQ(convolve(*t.central, {{Scalar(2)}}, {{Scalar(3)}}), CentralCharacter{{Scalar(5)}});
  EXPECT_EQ(inverse_char(*t.central, {{Scalar(2)}}), CentralCharacter{{Scalar(-2)}});
}

TEST(Characters, TorsionGroupAxioms) {
  // Two torsion symbols of different orders exercise mixed cyclotomic orders.
  auto shape = std::make_shared<CentralShape>();
  shape->symbols = {{"u", CentralKind::GroupLikeTorsion, 4, {}}, {"v", CentralKind::GroupLikeTorsion, 3, {}}};
  std::vector<const CentralShape*> shapes = {shape.get()};
  std::vector<HopfPresentation> pres;
  for (const char* f : kCorpus) pres.push_back(load_presentation(corpus(f)));
  for (const auto& p : pres)
    if (p.central->all_torsion()) shapes.push_back(p.central.get());
  for (const CentralShape* s : shapes) {
    const auto chars = characters_of_C(*s).characters;
    const auto id = identity_character(*s);
    for (const auto& a : chars) {
      EXPECT_EQ(convolve(*s, a, id), a);
      EXPECT_EQ(convolve(*s, a, inverse_char(*s, a)), id);
      EXPECT_EQ(convolve(*s, inverse_char(*s, a), a), id);
      for (const auto& b : chars) {
        const auto ab = convolve(*s, a, b);
        EXPECT_NE(std::find(chars.begin(), chars.end(), ab), chars.end());
        for (const auto& c : chars) EXPECT_EQ(convolve(*s, ab, c), convolve(*s, a, convolve(*s, b, c)));
      }
    }
  }
}

TEST(Fiber, TaftFibers) {
  const auto t = load_presentation(corpus("taft_inf_2.hopf"));
  const auto f0 = build_fiber(t, {{Scalar(0)}});
  EXPECT_EQ(f0.dim, 4u);
  ASSERT_TRUE(f0.coalgebra.has_value());
  const int x = t.basis_index({1});
  EXPECT_EQ(f0.multiply(f0.basis_vector(x), f0.basis_vector(x)), SVector(4));
  const auto f1 = build_fiber(t, {{Scalar(1)}});
  EXPECT_FALSE(f1.coalgebra.has_value());
  EXPECT_EQ(f1.multiply(f1.basis_vector(x), f1.basis_vector(x)), f1.unit);
}

TEST(Fiber, AssociativityAndEqualDimensions) {
  for (const char* f : kCorpus) {
    SCOPED_TRACE(f);
    const auto p = load_presentation(corpus(f));
    const auto sym = symbolic_structure(p);
    for (const auto& chi : characters_of_C(*p.central).characters) {
      const auto a = build_fiber(p, sym, chi);
      EXPECT_EQ(a.dim, p.dim());
      EXPECT_NO_THROW(a.check_algebra());
    }
  }
}

TEST(Fiber, IdentityFiberCounitIsAlgebraMap) {
  for (const char* f : kCorpus) {
    const auto p = load_presentation(corpus(f));
    const auto a = build_fiber(p, identity_character(*p.central));
    ASSERT_TRUE(a.coalgebra.has_value());
    const auto& eps = a.coalgebra->epsilon;
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j) {
        Scalar e;
        for (size_t k = 0; k < a.dim; ++k) e += a.sc[i][j][k] * eps[k];
        EXPECT_EQ(e, eps[i] * eps[j]);
      }
  }
}

TEST(Fiber, TotalAlgebras) {
  const std::pair<const char*, size_t> cases[] = {{"ex3_8.hopf", 8}, {"ex3_2.hopf", 16}, {"q8_central.hopf", 8}};
  for (const auto& [f, dim] : cases) {
    const auto p = load_presentation(corpus(f));
    const auto h = build_total_algebra(p);
    EXPECT_EQ(h.dim, dim);
    EXPECT_TRUE(h.coalgebra.has_value());
  }
  const auto t = load_presentation(corpus("taft_inf_2.hopf"));
  try {
    build_total_algebra(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedCentralShape);
  }
}

TEST(Representation, VerifyExamples) {
  const auto p = load_presentation(corpus("ex3_2.hopf"));
  EXPECT_TRUE(verify_rep(p, rho5()).ok);
  auto bad = rho5();
  bad.action[2](0, 1) = Scalar(-1);
  const auto check = verify_rep(p, bad);
  EXPECT_FALSE(check.ok);
  EXPECT_NE(check.failure.find("x^2"), std::string::npos) << check.failure;
  for (const char* f : kCorpus) {
    const auto q = load_presentation(corpus(f));
    EXPECT_TRUE(verify_rep(q, trivial_rep(q)).ok) << f;
  }
}

TEST(Representation, TensorAndDualExamples) {
  const auto p = load_presentation(corpus("ex3_2.hopf"));
  const auto rr = tensor_rep(p, rho2(), rho2());
  ASSERT_EQ(rr.dim, 1u);
  EXPECT_EQ(rr.action[2](0, 0), Scalar(1));
  EXPECT_TRUE(verify_rep(p, rr).ok);
  const auto d = dual_rep(p, rho2());
  EXPECT_EQ(d.action[2](0, 0), Scalar(-1));
  EXPECT_TRUE(verify_rep(p, d).ok);
  EXPECT_TRUE(verify_rep(p, dual_rep(p, rho5())).ok);
  EXPECT_TRUE(verify_rep(p, tensor_rep(p, rho5(), rho5())).ok);

  const auto t = load_presentation(corpus("taft_inf_2.hopf"));
  const ExactRep w{{{Scalar(1)}}, 2, {SMatrix{{1, 0}, {0, -1}}, SMatrix{{0, 1}, {1, 0}}}};
  const ExactRep v{{{Scalar(0)}}, 1, {SMatrix{{-1}}, SMatrix{{0}}}};
  ASSERT_TRUE(verify_rep(t, w).ok);
  ASSERT_TRUE(verify_rep(t, v).ok);
  const auto vw = tensor_rep(t, v, w);
  EXPECT_EQ(vw.dim, 2u);
  EXPECT_EQ(vw.character, w.character);
  EXPECT_TRUE(verify_rep(t, vw).ok);
  const auto tw = tensor_rep(t, trivial_rep(t), w);
  EXPECT_EQ(tw.action, w.action);
  EXPECT_EQ(dual_rep(t, trivial_rep(t)).action, trivial_rep(t).action);
}

TEST(Representation, NonChevalleyZetaModule) {
  const auto h = load_presentation(corpus("ex3_8.hopf"));
  const ExactRep zeta{{{Scalar(-1)}}, 2, {SMatrix{{I(), 0}, {0, -I()}}, SMatrix{{0, 1}, {1, 0}}}};
  EXPECT_TRUE(verify_rep(h, zeta).ok);
  const auto d = dual_rep(h, zeta);
  EXPECT_EQ(d.character, zeta.character);
  EXPECT_TRUE(verify_rep(h, d).ok);
  const auto ww = tensor_rep(h, zeta, d);
  EXPECT_EQ(ww.character, identity_character(*h.central));
  EXPECT_TRUE(verify_rep(h, ww).ok);
  EXPECT_TRUE(verify_rep(h, to_numeric_rep(ww)).ok);
}
