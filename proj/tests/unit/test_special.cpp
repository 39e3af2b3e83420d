#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "projflow/errors.hpp"
#include "projflow/series.hpp"
#include "projflow/special.hpp"
#include "support.hpp"

namespace projflow {
namespace {

using testing::coeff_strings;
using testing::field;

// Reference values computed with mpmath at 40 digits.
constexpr long double kAlphaMinusOne = -0.92797502408647995742L;
constexpr long double kAlphaOne = 1.367617082587983501276L;

TEST(Hypergeom2F1, InitialValueAndOde) {
  EXPECT_EQ(y_hypergeom(0).value, 1.0L);
  EXPECT_LT(std::fabs(y_ode_residual(0.5L)), 1e-8L);
  // The central difference error grows with Y''' as x approaches 1.
  for (long double x : {-3.0L, -0.7L, 0.3L, 0.9L}) EXPECT_LT(std::fabs(y_ode_residual(x)), 1e-6L) << x;
}

TEST(Hypergeom2F1, SeriesAndQuadratureAgree) {
  EXPECT_NEAR(y_hypergeom_series(0.3L).value, y_hypergeom_quadrature(0.3L).value, 1e-10L);
  EXPECT_NEAR(y_hypergeom_series(-0.45L).value, y_hypergeom_quadrature(-0.45L).value, 1e-14L);
}

TEST(Hypergeom2F1, ReferenceValues) {
  const std::pair<long double, long double> ref[] = {
      {0.3L, 1.193503993145891097L},  {0.5L, 1.406547117315763364L},  {-3.0L, 0.4893824185197353532L},
      {0.9L, 2.985479683941054613L},  {-0.7L, 0.7645212242560004760L}, {0.99L, 8.144285649256756534L},
  };
  for (auto [x, y] : ref) EXPECT_NEAR(y_hypergeom(x).value, y, 1e-13L * y) << x;
  EXPECT_THROW(y_hypergeom(1), Error);
}

TEST(Alpha, ReferenceValues) {
  EXPECT_NEAR(alpha_integral(-1).value, -0.927975024086478L, 1e-12L);
  EXPECT_EQ(alpha_integral(0).value, 0.0L);
  long double beta = std::tgamma(0.2L) * std::pow(std::tgamma(0.4L), 2) * std::sqrt(10 + 2 * std::sqrt(5.0L)) /
                     (20 * std::numbers::pi_v<long double>);
  EXPECT_NEAR(alpha_integral(1).value, beta, 1e-10L);
  const std::pair<long double, long double> ref[] = {
      {-1.0L, kAlphaMinusOne},           {1.0L, kAlphaOne},
      {-10.0L, -1.171825713119114536L},  {0.9L, 1.163757846184178210L},
      {-0.3L, -0.765051055231139297L},   {0.01L, 0.398507025341271630L},
      {-1000.0L, -1.336074621047497183L}, {0.999L, 1.336062000634654053L},
  };
  for (auto [x, a] : ref) EXPECT_NEAR(alpha_integral(x).value, a, 1e-14L) << x;
  EXPECT_THROW(alpha_integral(1.5L), Error);
}

TEST(Alpha, OddUnderTheMobiusPairing) {
  // α(x/(x-1)) = -α(x) for x < 1, since x ↦ x/(x-1) swaps the two ends of the integral.
  for (long double x : {-5.0L, -1.0L, -0.2L, 0.3L, 0.7L}) {
    EXPECT_NEAR(alpha_integral(x / (x - 1)).value, -alpha_integral(x).value, 1e-14L) << x;
  }
}

TEST(KFunction, InvertsAlpha) {
  EXPECT_NEAR(k_invert(kAlphaMinusOne), -1.0L, 1e-12L);
  EXPECT_NEAR(k_invert(-0.5L), -0.031743884576769178L, 1e-14L);
  EXPECT_NEAR(alpha_integral(k_invert(-0.5L)).value, -0.5L, 1e-10L);
  EXPECT_THROW(k_invert(2), Error);
}

TEST(KFunction, DerivativeAtTheCenter) {
  const long double h = 1e-5L;
  long double fd = (k_invert(kAlphaMinusOne + h) - k_invert(kAlphaMinusOne - h)) / (2 * h);
  EXPECT_NEAR(fd, 7.578582832551990412L, 1e-7L);
  EXPECT_NEAR(k_derivative(-1), 5 * std::pow(8.0L, 0.2L), 1e-15L);
}

TEST(KFunction, RoundTripProperty) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> dist(-1.3, 1.3);
  for (int i = 0; i < 40; ++i) {
    long double t = dist(rng);
    EXPECT_NEAR(alpha_integral(k_invert(t)).value, t, 1e-10L) << t;
  }
}

TEST(KJet, PrintedCoefficients) {
  AbelianJet jet = k_jet(11);
  std::vector<std::string> a;
  for (int i = 1; i <= 11; ++i) a.push_back(to_string(jet.at(i)));
  EXPECT_EQ(a, (std::vector<std::string>{"10", "55", "245", "4035/4", "15763/4", "118275/8", "3017075/56",
                                          "86027325/448", "43032775/64", "2079392255/896", "78011676535/9856"}));
  EXPECT_EQ(jet.center_tag, "alpha(-1)");
}

TEST(KJet, AgreesWithTheFlowRatioOnTheAntidiagonal) {
  // Two routes: the ODE for 𝐤 and the recursion for the flow of 2x²-4xy • -3xy+y².
  const int K = 9;
  AbelianJet jet = k_jet(K);
  UnivarSeries ratio = ratio_on_line(integrate_series(field("2*x^2 - 4*x*y", "-3*x*y + y^2"), K + 2), rat(1), rat(-1));
  ASSERT_GE(ratio.prec(), K + 1);
  EXPECT_EQ(ratio.coeff(0), rat(-1));
  for (int i = 1; i <= K; ++i) EXPECT_EQ(ratio.coeff(i), Rat(-jet.at(i))) << i;
}

TEST(KJet, LinearCoefficientMatchesTheNumericDerivative) {
  // d/dx 𝐤(c - 4^{1/5} x) at 0 is -4^{1/5} 𝐤'(c) = -a_1.
  const long double h = 1e-5L;
  long double fd = (k_invert(kAlphaMinusOne + h) - k_invert(kAlphaMinusOne - h)) / (2 * h);
  EXPECT_NEAR(std::pow(4.0L, 0.2L) * fd, to_long_double(k_jet(1).at(1)), 1e-7L);
}

TEST(AbelCrossCheck, ReproducesTheThetaSeries) {
  SeriesComparison c = abel_cross_check(7);
  EXPECT_TRUE(c.equal) << c.first_mismatch;
  EXPECT_EQ(coeff_strings(c.computed, 0, 8),
            (std::vector<std::string>{"1", "6", "16", "36", "111", "369", "2243/2", "46101/14"}));
  EXPECT_TRUE(abel_cross_check(0).equal);
  EXPECT_EQ(abel_cross_check(0).computed.coeff(0), rat(1));
}

TEST(AbelCrossCheck, DetectsACorruptedCoefficient) {
  AbelianJet jet = k_jet(7);
  jet.a[1] += 1;
  SeriesComparison c = abel_cross_check(jet, 7);
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.first_mismatch, 2);
}

TEST(ErfJet, PrintedCoefficients) {
  UnivarSeries m = erf_jet(13);
  EXPECT_EQ(coeff_strings(m, 0, 14),
            (std::vector<std::string>{"0", "-1", "0", "-1/6", "0", "-7/120", "0", "-127/5040", "0",
                                      "-4369/362880", "0", "-34807/5702400", "0", "-20036983/6227020800"}));
}

TEST(ErfJet, OddPowersOnly) {
  UnivarSeries m = erf_jet(40);
  for (int k = 0; k <= 40; k += 2) EXPECT_EQ(m.coeff(k), 0) << k;
}

TEST(ErfJet, MatchesTheClosedFormNumerically) {
  // m(x) = 𝐥(x e^{1/2}) + 1; the odd series converges for |x| < √(π/2).
  UnivarSeries m = erf_jet(61);
  for (long double x : {-0.4L, 0.1L, 0.5L}) {
    long double s = 0;
    for (int k = 61; k >= 0; --k) s = s * x + to_long_double(m.coeff(k));
    EXPECT_NEAR(s, l_function(x * std::exp(0.5L)) + 1, 1e-15L) << x;
  }
}

TEST(ErfFunctions, BetaInvertsL) {
  for (long double t : {-1.5L, -0.3L, 0.0L, 0.8L, 1.9L}) EXPECT_NEAR(beta_function(l_function(t)), t, 1e-15L) << t;
  EXPECT_THROW(l_function(3), Error);
}

TEST(GSeries, IdentityThroughOrder13) {
  SeriesComparison c = g_series_identity(13);
  EXPECT_TRUE(c.equal) << c.first_mismatch;
  EXPECT_EQ(coeff_strings(c.expected, 0, 14),
            (std::vector<std::string>{"1", "1", "1/2", "2/3", "7/24", "13/30", "127/720", "88/315", "4369/40320",
                                      "4069/22680", "34807/518400", "17926/155925", "20036983/479001600",
                                      "7157977/97297200"}));
  EXPECT_TRUE(g_series_identity(0).equal);
}

TEST(GSeries, CorruptedJetIsDetected) {
  UnivarSeries m = erf_jet(10) + UnivarSeries::monomial(5, rat(1, 1000));
  SeriesComparison c = g_series_identity(m, 9);
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.first_mismatch, 4);
}

TEST(GSeries, RadiusOfConvergence) {
  long double R = radius_estimate(g_series_from_erf(60));
  long double target = std::sqrt(std::numbers::pi_v<long double> / 2);
  EXPECT_NEAR(R, target, 0.05L * target);
}

TEST(Type2Flow, QFlowClosedForm) {
  VectorField vf = field("x^4/y^2 + x*y", "0");
  const long double x = 0.5L, y = 0.3L;
  Type2Result r = type2_flow_eval(vf, x, y);
  long double expected = x * y * std::exp(y) / std::cbrt(x * x * x + y * y * y - x * x * x * std::exp(3 * y));
  EXPECT_NEAR(r.u, expected, 1e-10L);
  EXPECT_NEAR(r.u, -0.376573L, 1e-6L);
  EXPECT_EQ(r.v, y);
  EXPECT_FALSE(r.closed_form);
}

TEST(Type2Flow, RFlowClosedForm) {
  VectorField vf = field("x^3/y", "0");
  const long double x = 0.2L, y = 0.9L;
  Type2Result r = type2_flow_eval(vf, x, y);
  EXPECT_NEAR(r.u, x / std::sqrt(1 - 2 * x * x / y), 1e-12L);
  EXPECT_TRUE(r.closed_form);
}

TEST(Type2Flow, BoundaryAndErrors) {
  VectorField vf = field("x^4/y^2 + x*y", "0");
  EXPECT_EQ(type2_flow_eval(vf, 0.7L, 0).u, 0.7L);
  EXPECT_THROW(type2_flow_eval(field("x^2", "y^2"), 1, 1), Error);
  try {
    // 1/ϖ(1,t) = t/(1+t) integrates to at most 0.0945 from 1/2 down to 0 and
    // turns negative below, so time 0.2 runs into the pole at t = -1.
    type2_flow_eval(field("(x^3 + x^2*y)/y", "0"), 0.4L, 0.2L);
    FAIL() << "expected PoleOnPath";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PoleOnPath);
  }
}

long double type2_pde_residual(const VectorField& vf, long double x, long double y) {
  const long double h = 1e-5L;
  auto u = [&](long double a, long double b) { return type2_flow_eval(vf, a, b).u; };
  long double ux = (u(x + h, y) - u(x - h, y)) / (2 * h);
  long double uy = (u(x, y + h) - u(x, y - h)) / (2 * h);
  return ux * (vf.pi().eval(x, y) - x) + uy * (0 - y) + u(x, y);
}

TEST(Type2Flow, SatisfiesThePde) {
  for (const char* pi : {"x^4/y^2 + x*y", "x^3/y", "x^2 + x*y", "x^2 - 3*y^2"}) {
    VectorField vf = field(pi, "0");
    for (auto [x, y] : {std::pair{0.5L, 0.3L}, std::pair{0.2L, 0.9L}, std::pair{-0.4L, 0.25L}}) {
      long double res;
      try {
        res = type2_pde_residual(vf, x, y);
      } catch (const Error&) {
        continue;
      }
      EXPECT_LT(std::fabs(res), 1e-6L) << pi << " at " << static_cast<double>(x) << "," << static_cast<double>(y);
    }
  }
}

TEST(Type2Flow, ExplicitSolutions) {
  // ϖ(1,t) = 1 + t: log(1 + y/x) - log(1 + y/u) = y, via partial fractions.
  VectorField lin = field("x^2 + x*y", "0");
  // ϖ(1,t) = 1 + t²: atan(y/x) - atan(y/u) = y, via quadrature.
  VectorField quad = field("x^2 + y^2", "0");
  for (auto [x, y] : {std::pair{0.5L, 0.3L}, std::pair{1.2L, -0.4L}, std::pair{-0.7L, 0.2L}}) {
    Type2Result a = type2_flow_eval(lin, x, y);
    EXPECT_TRUE(a.closed_form);
    EXPECT_NEAR(a.u, y / ((1 + y / x) * std::exp(-y) - 1), 1e-12L);
    Type2Result b = type2_flow_eval(quad, x, y);
    EXPECT_FALSE(b.closed_form);
    EXPECT_NEAR(b.u, y / std::tan(std::atan(y / x) - y), 1e-12L);
  }
}

}  // namespace
}  // namespace projflow
