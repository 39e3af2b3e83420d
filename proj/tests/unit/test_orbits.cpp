#include <gtest/gtest.h>

#include <numeric>

#include "projflow/errors.hpp"
#include "projflow/orbits.hpp"
#include "support.hpp"

namespace projflow {
namespace {

using testing::F;
using testing::field;
using testing::RatGen;

void expect_orbit(const OrbitForm& w, long a, long b, long c, long level, long genus) {
  EXPECT_EQ(w.alpha, a);
  EXPECT_EQ(w.beta, b);
  EXPECT_EQ(w.gamma, c);
  EXPECT_EQ(w.level, level);
  ASSERT_TRUE(w.genus.has_value());
  EXPECT_EQ(*w.genus, genus);
}

TEST(OrbitExponents, PublishedExamples) {
  expect_orbit(orbit_exponents(field("x^2-2*x*y", "-2*x*y+y^2")), 1, 1, 1, 3, 1);
  expect_orbit(orbit_exponents(field("2*x^2-4*x*y", "-3*x*y+y^2")), 1, 2, 2, 5, 2);
  expect_orbit(orbit_exponents(field("-4*x^2+3*x*y", "-2*x*y+y^2")), -1, -1, 4, 2, 0);
  auto w = orbit_exponents(field("-3*x^2+5*x*y", "x*y+y^2"));
  EXPECT_EQ(w.alpha, -1);
  EXPECT_EQ(w.beta, 2);
  EXPECT_EQ(w.gamma, 3);
  EXPECT_EQ(w.level, 4);
  EXPECT_EQ(w.curve_degree, 5);
  EXPECT_EQ(*w.genus, 1);
  EXPECT_EQ(orbit_equation(w), "x^-1 (x-y)^2 y^3 = const");
}

TEST(OrbitExponents, Errors) {
  try {
    orbit_exponents(field("x^2", "x*y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateField);
  }
  try {
    orbit_exponents(field("x^2+x*y+y^2", "x*y+y^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WrongRootConfiguration);
  }
}

TEST(Genus, PublishedValuesAndErrors) {
  EXPECT_EQ(genus_cyclic_cover(1, 1, 1), 1);
  EXPECT_EQ(genus_cyclic_cover(1, 2, 2), 2);
  EXPECT_EQ(genus_cyclic_cover(-1, 2, 3), 1);
  EXPECT_THROW(genus_cyclic_cover(-1, -1, 2), Error);
  EXPECT_THROW(genus_cyclic_cover(2, 2, 4), Error);
}

TEST(Genus, SymmetryAndSignInvariance) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> d(-12, 12);
  for (int trial = 0; trial < 300; ++trial) {
    long a = d(rng), b = d(rng), c = d(rng);
    if (std::gcd(std::gcd(a, b), c) != 1 || a + b + c == 0) continue;
    long g = genus_cyclic_cover(a, b, c);
    EXPECT_GE(g, 0);
    EXPECT_EQ(g, genus_cyclic_cover(b, c, a));
    EXPECT_EQ(g, genus_cyclic_cover(c, b, a));
    EXPECT_EQ(g, genus_cyclic_cover(-a, -b, -c));
  }
}

TEST(Genus, CanonicalOrbitsAreRational) {
  for (long q = 1; q < 15; ++q)
    for (long p = -14; p < 15; ++p)
      if (std::gcd(q, p) == 1 && q + p != 0) EXPECT_EQ(genus_cyclic_cover(q, 0, p), 0) << q << "," << p;
}

TEST(OrbitInvariance, Examples) {
  auto vf = field("2*x^2-4*x*y", "-3*x*y+y^2");
  EXPECT_TRUE(orbit_invariance_check(vf, make_orbit_form(1, 2, 2)));
  auto ex3 = field("-x*(3*x^5+x^3*y^2+2*y^5)/(3*(x^2+y^2)^2)", "-y*(3*y^5+y^3*x^2+2*x^5)/(3*(x^2+y^2)^2)");
  EXPECT_TRUE(orbit_invariance_check(ex3, F("x^3*y^3/((x-y)*(x^2+y^2)*(x^2+x*y+y^2))")));
  auto tr = field("x^2+x*y+y^2", "x*y+y^2");
  for (auto [a, b, c] : {std::tuple{1L, 1L, 1L}, {1L, 2L, 2L}, {-1L, -1L, 4L}, {1L, 0L, 1L}, {0L, 1L, 0L}}) {
    auto r = orbit_invariance_check(tr, make_orbit_form(a, b, c));
    EXPECT_FALSE(r);
    EXPECT_FALSE(r.residual.is_zero());
  }
  EXPECT_TRUE(orbit_invariance_gradient(tr, F("-1/y-x/y^2"), F("x/y^2+x^2/y^3+1/y")));
}

TEST(OrbitOde, Examples) {
  EXPECT_TRUE(orbit_ode_residual(field("x^2-2*x*y", "-2*x*y+y^2"), F("x*y*(x-y)"), 3).is_zero());
  EXPECT_FALSE(orbit_ode_residual(field("x*y", "y^2"), F("x"), 1).is_zero());
  try {
    orbit_ode_residual(field("x*y", "y^2"), F("x^2"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HomogeneityMismatch);
  }
}

TEST(OrbitProperties, RandomBCFieldsHaveInvariantOrbits) {
  RatGen g(41, 7);
  for (int trial = 0; trial < 40; ++trial) {
    Rat B = g(), C = g();
    if (B == 1 || C == 1) continue;
    Rat a = (B - 1) / (C - 1);
    auto vf = quadratic_field(a, B, a * C, 1);
    auto w = orbit_exponents(vf);
    EXPECT_TRUE(orbit_invariance_check(vf, w));
    EXPECT_GT(w.level, 0);
    // Proportional to (1 - C, BC - 1, 1 - B).
    Rat p0 = 1 - C, p1 = B * C - 1, p2 = 1 - B;
    EXPECT_EQ(Rat(w.alpha) * p1, Rat(w.beta) * p0);
    EXPECT_EQ(Rat(w.beta) * p2, Rat(w.gamma) * p1);
    EXPECT_EQ(Rat(w.alpha) * p2, Rat(w.gamma) * p0);
    // Level-N orbit ODE holds for W = x^a (x-y)^b y^c when all exponents are small.
    if (std::labs(w.alpha) + std::labs(w.beta) + std::labs(w.gamma) < 30) {
      auto pw = [](const char* base, long e) {
        RationalFunction2 b = F(base);
        RationalFunction2 r = RationalFunction2::constant(1);
        for (long i = 0; i < std::labs(e); ++i) r *= b;
        return e >= 0 ? r : RationalFunction2::constant(1) / r;
      };
      auto W = pw("x", w.alpha) * pw("x-y", w.beta) * pw("y", w.gamma);
      EXPECT_TRUE(orbit_ode_residual(vf, W, static_cast<int>(w.alpha + w.beta + w.gamma)).is_zero());
    }
  }
}

}  // namespace
}  // namespace projflow
