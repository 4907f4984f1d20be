#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fiberlab/error.hpp"
#include "fiberlab/exactmath/linalg.hpp"
#include "fiberlab/exactmath/perron.hpp"
#include "fiberlab/exactmath/poly.hpp"
#include "fiberlab/exactmath/scalar.hpp"

using namespace fiberlab;

namespace {

Scalar zeta(int n, long k) { return Scalar::root_of_unity(n, k); }

std::complex<double> complex_root(int n, long k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n));
}

// Random element of Q(zeta_N) built as a sum of roots of unity, together with
// its floating-point value computed independently.
struct Sample {
  Scalar exact;
  std::complex<double> approx;
};

Sample random_scalar(std::mt19937_64& rng) {
  static const int orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> pick(0, 7), coef(-4, 4), den(1, 3), terms(1, 3);
  const int n = orders[pick(rng)];
  Sample s{Scalar(), 0.0};
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    const long k = std::uniform_int_distribution<long>(0, n - 1)(rng);
    const long p = coef(rng), q = den(rng);
    s.exact += Scalar::rational(p, q) * zeta(n, k);
    s.approx += (double(p) / double(q)) * complex_root(n, k);
  }
  return s;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a)); }

Poly P(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

Poly T() { return Poly::variable(); }

}  // namespace

TEST(Scalar, RootOfUnityExamples) {
  EXPECT_EQ(zeta(1, 0), Scalar(1));
  EXPECT_EQ(zeta(4, 1) * zeta(4, 1), Scalar(-1));
  EXPECT_EQ(zeta(3, 1) + zeta(3, 2), Scalar(-1));
  // Brute-force oracle: zeta_3 is a root of x^2 + x + 1.
  const Scalar z3 = zeta(3, 1);
  EXPECT_TRUE((z3 * z3 + z3 + Scalar(1)).is_zero());
  EXPECT_EQ(zeta(6, 1).pow(6), Scalar(1));
  EXPECT_NE(zeta(6, 1).pow(3), Scalar(1));
}

TEST(Scalar, ArithmeticExamples) {
  EXPECT_EQ(Scalar::rational(1, 2) + Scalar::rational(1, 3), Scalar::rational(5, 6));
  EXPECT_EQ(zeta(4, 1) * zeta(4, 1), Scalar(-1));
  const Scalar z6 = zeta(6, 1);
  EXPECT_EQ(z6 - (z6 - Scalar(1)), Scalar(1));
  EXPECT_TRUE((z6 * z6 - z6 + Scalar(1)).is_zero());
  EXPECT_THROW(Scalar(1) / Scalar(0), Error);
}

TEST(Scalar, CanonicalOrder) {
  // zeta_12^4 = zeta_3, zeta_12^3 = i, zeta_12^6 = -1.
  EXPECT_EQ(zeta(12, 4).order(), 3);
  EXPECT_EQ(zeta(12, 3).order(), 4);
  EXPECT_EQ(zeta(12, 6), Scalar(-1));
  EXPECT_EQ(zeta(6, 1).order(), 3);  // zeta_6 = -zeta_3^2
  EXPECT_EQ(zeta(6, 1), -zeta(3, 2));
  EXPECT_EQ(zeta(8, 1) * zeta(8, 1), zeta(4, 1));
}

TEST(Scalar, ToStringRoundTripShape) {
  EXPECT_EQ(Scalar::rational(3, 2).to_string(), "3/2");
  EXPECT_EQ(zeta(4, 1).to_string(), "zeta(4,1)");
  EXPECT_EQ((Scalar::rational(1, 2) - Scalar(3) * zeta(3, 1)).to_string(), "1/2 - 3*zeta(3,1)");
}

TEST(ScalarProperty, FieldAxiomsMixedOrders) {
  std::mt19937_64 rng(20261019);
  int checked = 0;
  for (int i = 0; i < 1200; ++i) {
    const Sample a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    ASSERT_TRUE(near(a.exact.to_complex(), a.approx));
    ASSERT_EQ((a.exact + b.exact) + c.exact, a.exact + (b.exact + c.exact));
    ASSERT_EQ((a.exact * b.exact) * c.exact, a.exact * (b.exact * c.exact));
    ASSERT_EQ(a.exact * (b.exact + c.exact), a.exact * b.exact + a.exact * c.exact);
    ASSERT_EQ(a.exact * b.exact, b.exact * a.exact);
    ASSERT_EQ(a.exact - a.exact, Scalar());
    ASSERT_TRUE(near((a.exact * b.exact).to_complex(), a.approx * b.approx));
    ASSERT_TRUE(near((a.exact + b.exact).to_complex(), a.approx + b.approx));
    if (!a.exact.is_zero()) {
      ASSERT_EQ(a.exact * a.exact.inverse(), Scalar(1));
      ASSERT_EQ((b.exact / a.exact) * a.exact, b.exact);
      ASSERT_TRUE(near((b.exact / a.exact).to_complex(), b.approx / a.approx));
    }
    ASSERT_TRUE(near(a.exact.conjugate().to_complex(), std::conj(a.approx)));
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

TEST(Linalg, RrefExamples) {
  SMatrix ones{{1, 1}, {1, 1}};
  EXPECT_EQ(rref(ones).rank, 1u);
  const auto id = rref(SMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.pivots, (std::vector<size_t>{0, 1, 2}));
  const Scalar i = zeta(4, 1);
  SMatrix m{{Scalar(1), i}, {i, Scalar(-1)}};
  EXPECT_EQ(rref(m).rank, 1u);
  // Hand check: second row equals i times the first.
  EXPECT_EQ(i * m(0, 0), m(1, 0));
  EXPECT_EQ(i * m(0, 1), m(1, 1));
}

TEST(Linalg, KernelExamples) {
  EXPECT_TRUE(kernel(SMatrix::identity(3)).empty());
  EXPECT_EQ(kernel(SMatrix(2, 3)).size(), 3u);
  const auto k = kernel(SMatrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_FALSE(k[0][0].is_zero());
}

TEST(Linalg, DeterminantExamples) {
  EXPECT_EQ(det(SMatrix{{1, 2}, {3, 4}}), Scalar(-2));
  EXPECT_EQ(det(SMatrix::identity(5)), Scalar(1));
  EXPECT_THROW(det(SMatrix(2, 3)), Error);
  PMatrix d(4, 4);
  d(0, 0) = P({4});
  d(1, 1) = P({4});
  d(2, 2) = P({0, 4});
  d(3, 3) = P({0, -4});
  EXPECT_EQ(det(d), P({0, 0, -256}));
}

TEST(Linalg, InverseAndSolve) {
  SMatrix m{{2, 1}, {1, 1}};
  EXPECT_EQ(m * inverse(m), SMatrix::identity(2));
  const auto x = solve(m, {Scalar(3), Scalar(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Scalar(1));
  EXPECT_EQ((*x)[1], Scalar(1));
  EXPECT_FALSE(solve(SMatrix{{1, 1}, {1, 1}}, {Scalar(1), Scalar(2)}).has_value());
  EXPECT_THROW(inverse(SMatrix{{1, 1}, {1, 1}}), Error);
}

TEST(LinalgProperty, RankNullity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), val(-2, 2), zero(0, 2);
  for (int t = 0; t < 200; ++t) {
    const size_t r = dim(rng), c = dim(rng);
    SMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        m(i, j) = zero(rng) == 0 ? Scalar() : Scalar(val(rng)) * zeta(3, val(rng));
    const auto ker = kernel(m);
    ASSERT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker) {
      for (const auto& e : m.apply(v)) ASSERT_TRUE(e.is_zero());
    }
  }
}

TEST(LinalgProperty, DeterminantMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int t = 0; t < 100; ++t) {
    SMatrix a(4, 4), b(4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        a(i, j) = Scalar(val(rng)) + Scalar(val(rng)) * zeta(4, 1);
        b(i, j) = Scalar::rational(val(rng), 2);
      }
    ASSERT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Poly, GcdExamples) {
  EXPECT_EQ(poly_gcd_monic(P({0, -1, 1}), P({0, 0, 1})), T());
  EXPECT_EQ(poly_gcd_monic(P({0, 0, 1}), Poly()), P({0, 0, 1}));
  EXPECT_EQ(poly_gcd_monic(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
  EXPECT_THROW(poly_gcd_monic(Poly(), Poly()), Error);
}

TEST(PolyProperty, GcdDivisibility) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> deg(0, 3), val(-3, 3);
  auto random_poly = [&](int d) {
    std::vector<Scalar> c(d + 1);
    for (auto& x : c) x = Scalar(val(rng));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return Poly(c);
  };
  for (int t = 0; t < 200; ++t) {
    const Poly common = random_poly(deg(rng));
    const Poly p = common * random_poly(deg(rng));
    const Poly q = common * random_poly(deg(rng));
    if (p.is_zero() && q.is_zero()) continue;
    const Poly g = poly_gcd_monic(p, q);
    ASSERT_EQ(g.leading(), Scalar(1));
    ASSERT_TRUE(divmod(p, g).second.is_zero());
    ASSERT_TRUE(divmod(q, g).second.is_zero());
    ASSERT_TRUE(divmod(g, common.monic()).second.is_zero());
    ASSERT_LE(p.degree(), 6);
  }
}

TEST(Poly, SquarefreeAndEval) {
  const Poly p = P({0, 0, 1}) * P({-1, 1});
  EXPECT_EQ(squarefree_part(p), P({0, -1, 1}));
  EXPECT_EQ(p.evaluate(Scalar(2)), Scalar(4));
  EXPECT_EQ(P({0, 0, -256}).to_string(), "-256*T^2");
}

TEST(Smith, DeterminantalDivisorsMatchMinorOracle) {
  // Brute-force oracle: gcd of all k x k minors.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int t = 0; t < 30; ++t) {
    PMatrix m(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) m(i, j) = P({val(rng), val(rng)});
    for (size_t k = 1; k <= 3; ++k) {
      Poly g;
      std::vector<std::vector<size_t>> subsets;
      for (unsigned mask = 0; mask < 8; ++mask) {
        if (__builtin_popcount(mask) != int(k)) continue;
        std::vector<size_t> s;
        for (size_t b = 0; b < 3; ++b)
          if (mask >> b & 1) s.push_back(b);
        subsets.push_back(s);
      }
      for (const auto& rs : subsets)
        for (const auto& cs : subsets) {
          const Poly d = det(m.submatrix(rs, cs));
          g = (g.is_zero() && d.is_zero()) ? Poly() : poly_gcd_monic(g, d);
        }
      ASSERT_EQ(determinantal_divisor(m, k), g) << "k=" << k;
    }
  }
}

TEST(Perron, Examples) {
  EXPECT_NEAR(perron_eigenvalue(IntMatrix{{1, 1}, {1, 1}}).value, 2.0, 1e-9);
  EXPECT_NEAR(perron_eigenvalue(IntMatrix{{0, 1}, {1, 0}}).value, 1.0, 1e-9);
  EXPECT_NEAR(perron_eigenvalue(IntMatrix{{2}}).value, 2.0, 1e-9);
}

TEST(PerronProperty, IdempotentShape) {
  // M = v w^T with w^T v = c gives M^2 = c M and spectral radius c.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> val(1, 4);
  for (int t = 0; t < 50; ++t) {
    const size_t n = 1 + t % 4;
    std::vector<long> v(n), w(n);
    long c = 0;
    for (size_t i = 0; i < n; ++i) {
      v[i] = val(rng);
      w[i] = val(rng);
      c += v[i] * w[i];
    }
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = v[i] * w[j];
    ASSERT_EQ(m * m, m.scaled(c));
    ASSERT_NEAR(perron_eigenvalue(m).value, double(c), 1e-9 * double(c));
  }
}
