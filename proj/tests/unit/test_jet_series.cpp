#include <gtest/gtest.h>

#include "projflow/errors.hpp"
#include "projflow/series.hpp"
#include "support.hpp"

namespace projflow {
namespace {

using testing::coeff_strings;
using testing::F;
using testing::field;
using testing::RatGen;
using S = std::vector<std::string>;

TEST(Jet, InverseAndProductTrackPrecision) {
  auto a = UnivarSeries::from_coeffs(0, {rat(1), rat(1)});  // 1 + t, known mod t^2
  EXPECT_EQ(a.prec(), 2);
  auto geo = UnivarSeries(0, {rat(1), rat(-1)}, 6);  // 1 - t mod t^6
  auto inv = geo.inverse();
  EXPECT_EQ(inv.prec(), 6);
  EXPECT_EQ(coeff_strings(inv, 0, 6), S({"1", "1", "1", "1", "1", "1"}));
  auto laurent = UnivarSeries(1, {rat(2), rat(4)}, 5).inverse();  // 1/(2t + 4t^2)
  EXPECT_EQ(laurent.prec(), 3);
  EXPECT_EQ(coeff_strings(laurent, -1, 4), S({"1/2", "-1", "2", "-4"}));
  EXPECT_THROW(laurent.coeff(3), Error);
}

TEST(Jet, BinomialSeriesMatchesGeneralizedBinomials) {
  auto base = UnivarSeries(0, {rat(1), rat(1)}, 6);
  auto h = base.pow_rational(rat(3, 5));
  Rat c(1);
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(h.coeff(k), c) << k;
    c = c * (rat(3, 5) - k) / (k + 1);
  }
}

TEST(Jet, PowerLawsHoldOnRandomJets) {
  RatGen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> cs{rat(1)};
    for (int k = 1; k < 8; ++k) cs.push_back(g());
    auto f = UnivarSeries::from_coeffs(0, cs);
    Rat r = g.nonzero(), s = g.nonzero();
    EXPECT_EQ(f.pow_rational(r) * f.pow_rational(s), f.pow_rational(r + s));
    EXPECT_EQ(f.pow_rational(rat(-1)), f.inverse());
    EXPECT_EQ(f * f.inverse(), UnivarSeries::constant(rat(1), 8));
  }
}

TEST(Jet, ExpIsAHomomorphism) {
  RatGen g(12);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> a{rat(0)}, b{rat(0)};
    for (int k = 1; k < 7; ++k) {
      a.push_back(g());
      b.push_back(g());
    }
    auto A = UnivarSeries::from_coeffs(0, a), B = UnivarSeries::from_coeffs(0, b);
    EXPECT_EQ((A + B).exp(), A.exp() * B.exp());
  }
}

TEST(Jet, QSqrt3Coefficients) {
  auto s = LaurentJet(-1, {QSqrt3(1), QSqrt3(0), QSqrt3(0), QSqrt3::sqrt3()}, 4);
  auto p = s * s;
  EXPECT_EQ(p.coeff(-2), QSqrt3(1));
  EXPECT_EQ(p.coeff(1), QSqrt3(0, 2));
}

TEST(IntegrateSeries, ProjectiveGeometricFlow) {
  auto sf = integrate_series(field("x*y", "y^2"), 3);
  ASSERT_EQ(sf.u.size(), 3u);
  EXPECT_EQ(sf.u_at(1), F("x"));
  EXPECT_EQ(sf.u_at(2), F("x*y"));
  EXPECT_EQ(sf.u_at(3), F("x*y^2"));
}

TEST(IntegrateSeries, ZeroFieldGivesIdentity) {
  auto sf = integrate_series(field("0", "0"), 5);
  EXPECT_EQ(sf.u_at(1), F("x"));
  for (int i = 2; i <= 5; ++i) EXPECT_TRUE(sf.u_at(i).is_zero());
}

TEST(IntegrateSeries, AntidiagonalRestriction) {
  auto sf = integrate_series(field("2*x^2-4*x*y", "-3*x*y+y^2"), 8);
  auto s = restrict_to_line(sf, 1, -1, Component::U, true);
  EXPECT_EQ(coeff_strings(s, 0, 8), S({"1", "6", "16", "36", "111", "369", "2243/2", "46101/14"}));
}

TEST(IntegrateSeries, RationalFieldStaysExact) {
  // x^4/y^2 • 0 integrates to x/(1 - x^3 z/y^2)^{1/3} style growth; check the PDE and Euler degree.
  auto sf = integrate_series(field("x^4/y^2", "0"), 6);
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(sf.u_at(i).euler_homogeneous(i)) << i;
  EXPECT_EQ(sf.u_at(3), F("2*x^7/y^4"));
  EXPECT_TRUE(pde_residual_series(sf).all_zero());
}

TEST(IntegrateSeries, DigitCapRaisesSizeExceeded) {
  try {
    integrate_series(field("x^2+x*y+y^2", "x*y+y^2"), 40, 20);
    FAIL() << "expected SizeExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeExceeded);
  }
  EXPECT_THROW(integrate_series(field("x*y", "y^2"), 1), Error);
}

TEST(RestrictToLine, Examples) {
  auto sf = integrate_series(field("2*x^2-4*x*y", "-3*x*y+y^2"), 6);
  EXPECT_EQ(coeff_strings(restrict_to_line(sf, 1, 1, Component::U, true), 0, 6),
            S({"1", "-2", "4", "-8", "16", "-32"}));
  auto g = integrate_series(field("x^2+x*y+y^2", "x*y+y^2"), 7);
  EXPECT_EQ(coeff_strings(restrict_to_line(g, 1, -1, Component::U, true), 0, 7),
            S({"1", "1", "1/2", "2/3", "7/24", "13/30", "127/720"}));
  auto v = restrict_to_line(sf, 1, 0, Component::V, false);
  EXPECT_TRUE(v.is_zero());
  EXPECT_THROW(restrict_to_line(sf, 0, 0, Component::U, false), Error);
  try {
    restrict_to_line(sf, 0, 1, Component::U, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZeroLeading);
  }
}

TEST(RatioOnLine, Examples) {
  auto sf = integrate_series(field("2*x^2-4*x*y", "-3*x*y+y^2"), 7);
  EXPECT_EQ(coeff_strings(ratio_on_line(sf, 1, -1), 0, 6), S({"-1", "-10", "-55", "-245", "-4035/4", "-15763/4"}));
  auto id = integrate_series(field("0", "0"), 5);
  auto r = ratio_on_line(id, 3, 7);
  EXPECT_EQ(coeff_strings(r, 0, 5), S({"3/7", "0", "0", "0", "0"}));
  auto geo = integrate_series(field("x*y", "y^2"), 6);
  EXPECT_EQ(coeff_strings(ratio_on_line(geo, 1, 1), 0, 6), S({"1", "0", "0", "0", "0", "0"}));
  try {
    ratio_on_line(geo, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonInvertibleLeading);
  }
}

TEST(ExtractVectorField, RoundTrips) {
  auto a = field("x*y", "y^2");
  EXPECT_EQ(extract_vector_field(integrate_series(a, 4)), a);
  auto b = field("x^2-2*x*y", "-2*x*y+y^2");
  EXPECT_EQ(extract_vector_field(integrate_series(b, 3)), b);
}

TEST(ExtractVectorField, HandBuiltIrrationalPowerFlow) {
  // x (y z + 1)^c • y / (y z + 1) with c a rational stand-in for sqrt(2).
  const Rat c = rat(141421356, 100000000);
  std::vector<RationalFunction2> u, v;
  Rat binom(1);
  for (int i = 1; i <= 5; ++i) {
    u.emplace_back(BivarPoly::monomial(1, i - 1, binom));
    v.emplace_back(BivarPoly::monomial(0, i, Rat(i % 2 == 1 ? 1 : -1)));
    binom = binom * (c - (i - 1)) / i;
  }
  auto sf = SeriesFlow::from_coefficients(u, v);
  auto vf = extract_vector_field(sf);
  EXPECT_EQ(vf, make_vector_field(RationalFunction2(BivarPoly::monomial(1, 1, c)), F("-y^2")));
  EXPECT_TRUE(pde_residual_series(sf).all_zero());
  EXPECT_TRUE(translation_check(sf, 5));
  EXPECT_THROW(extract_vector_field(SeriesFlow::from_coefficients({F("x")}, {F("y")})), Error);
}

TEST(PdeResidual, ZeroForIntegratedSeriesAndCatchesCorruption) {
  EXPECT_TRUE(pde_residual_series(integrate_series(field("x*y", "y^2"), 6)).all_zero());
  auto sf = integrate_series(field("x^2+x*y+y^2", "x*y+y^2"), 10);
  EXPECT_TRUE(pde_residual_series(sf).all_zero());
  sf.u[4] += F("x^5");
  auto r = pde_residual_series(sf);
  EXPECT_FALSE(r.all_zero());
  EXPECT_EQ(r.first_nonzero(), 5);
}

TEST(TranslationCheck, HoldsAndDetectsCorruption) {
  EXPECT_TRUE(translation_check(integrate_series(field("x*y", "y^2"), 5), 5));
  auto sf = integrate_series(field("2*x^2-4*x*y", "-3*x*y+y^2"), 6);
  EXPECT_TRUE(translation_check(sf, 6));
  sf.v[3] += F("y^4");
  auto rep = translation_check(sf, 6);
  EXPECT_FALSE(rep);
  EXPECT_EQ(rep.first_failure, 3);
}

TEST(ExpandInZ, GeometricClosedForm) {
  // x/(1 - y z)
  auto c = expand_in_z({F("x")}, {F("1"), F("-y")}, 4);
  EXPECT_EQ(c[3], F("x*y^3"));
}

TEST(SeriesProperties, RandomQuadraticFields) {
  RatGen g(21, 5);
  for (int trial = 0; trial < 12; ++trial) {
    auto vf = quadratic_field6(g(), g(), g(), g(), g(), g());
    auto sf = integrate_series(vf, 6);
    EXPECT_EQ(sf.u_at(1), F("x"));
    EXPECT_EQ(sf.v_at(1), F("y"));
    for (int i = 1; i <= 6; ++i) {
      EXPECT_TRUE(sf.u_at(i).euler_homogeneous(i));
      EXPECT_TRUE(sf.v_at(i).euler_homogeneous(i));
    }
    EXPECT_EQ(extract_vector_field(sf), vf);
    EXPECT_TRUE(pde_residual_series(sf).all_zero());
    if (trial < 4) EXPECT_TRUE(translation_check(sf, 5));
  }
}

TEST(SeriesProperties, ExceptionalLinesOfTheBCFamily) {
  RatGen g(22, 6);
  for (int trial = 0; trial < 10; ++trial) {
    Rat B = g(), C = g();
    if (B == 1 || C == 1) continue;
    Rat a = (B - 1) / (C - 1);
    auto sf = integrate_series(quadratic_field(a, B, a * C, 1), 7);
    Rat s = (B * C - 1) / (C - 1);
    auto on_x = restrict_to_line(sf, 1, 0, Component::U, true);
    auto on_y = restrict_to_line(sf, 0, 1, Component::V, true);
    auto diag_u = restrict_to_line(sf, 1, 1, Component::U, true);
    auto diag_v = restrict_to_line(sf, 1, 1, Component::V, true);
    for (int k = 0; k < 7; ++k) {
      EXPECT_EQ(on_x.coeff(k), pow(a, k));
      EXPECT_EQ(on_y.coeff(k), Rat(1));
      EXPECT_EQ(diag_u.coeff(k), pow(s, k));
      EXPECT_EQ(diag_v.coeff(k), pow(s, k));
    }
    EXPECT_TRUE(restrict_to_line(sf, 1, 0, Component::V, false).is_zero());
  }
}

}  // namespace
}  // namespace projflow
