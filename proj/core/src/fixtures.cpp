#include "projflow/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "projflow/dixon.hpp"
#include "projflow/errors.hpp"
#include "projflow/parse.hpp"
#include "projflow/special.hpp"

namespace projflow {

namespace {

constexpr long double kSqrt2 = std::numbers::sqrt2_v<long double>;

[[noreturn]] void escape(const std::string& fixture, const std::string& why) {
  throw Error(Errc::BranchEscape, fixture + ": " + why, fixture);
}

long double checked(const std::string& fixture, long double v) {
  if (!std::isfinite(v)) escape(fixture, "non-finite value");
  return v;
}

VectorField field_of(const char* pi, const char* rho) {
  return make_vector_field(parse_rational_function(pi), parse_rational_function(rho));
}

PointMap numeric_field(const VectorField& vf) {
  return [vf](long double x, long double y) -> Point { return {vf.pi().eval(x, y), vf.rho().eval(x, y)}; };
}

bool near_diagonal(long double x, long double y) { return std::fabs(x - y) < 0.03L; }

FixtureFlow rational_fixture(std::string name, std::string formula, const char* pi, const char* rho, const char* u,
                             const char* v) {
  FixtureFlow f;
  f.name = std::move(name);
  f.formula = std::move(formula);
  f.branch = "single-valued";
  f.field = field_of(pi, rho);
  f.field_eval = numeric_field(*f.field);
  f.exact = ExactFlow{parse_rational_function(u), parse_rational_function(v)};
  ExactFlow e = *f.exact;
  std::string n = f.name;
  f.eval = [e, n](long double x, long double y) -> Point {
    return {checked(n, e.u.eval(x, y)), checked(n, e.v.eval(x, y))};
  };
  f.box = {0.1L, 0.5L, 0.1L, 0.5L};
  return f;
}

FixtureFlow identity_fixture() {
  FixtureFlow f = rational_fixture("identity", "x • y", "0", "0", "x", "y");
  return f;
}

FixtureFlow radial_fixture() {
  FixtureFlow f = rational_fixture("radial", "x/(1-y) • y/(1-y)", "x*y", "y^2", "x/(1-y)", "y/(1-y)");
  f.invariant = [](long double x, long double y) { return x / y; };
  f.invariant_text = "x/y";
  return f;
}

long double prop_alg_invariant(long double x, long double y) { return y * y * y * y / (x * (x - y)); }

FixtureFlow prop_alg_fixture() {
  FixtureFlow f;
  f.name = "prop-alg";
  f.formula = "(y*R + y^2 + 2x - y)/(8x + 2(y-1)^2) • y/R, R = sqrt(4x + (y-1)^2)";
  f.branch = "R > 0, the root equal to 1 at the origin";
  f.field = field_of("-4*x^2 + 3*x*y", "-2*x*y + y^2");
  f.field_eval = numeric_field(*f.field);
  f.eval = [](long double x, long double y) -> Point {
    long double d = 4 * x + (y - 1) * (y - 1);
    if (!(d > 0)) escape("prop-alg", "4x + (y-1)^2 <= 0");
    long double r = std::sqrt(d);
    return {(y * r + y * y + 2 * x - y) / (8 * x + 2 * (y - 1) * (y - 1)), y / r};
  };
  f.invariant = prop_alg_invariant;
  f.invariant_text = "y^4/(x(x-y))";
  f.box = {0.1L, 0.5L, 0.1L, 0.5L};
  f.excluded = near_diagonal;
  return f;
}

FixtureFlow phi23_fixture() {
  FixtureFlow f = rational_fixture("phi2-3", "(y^2+x)^3/(x+2xy+y^3)^2 • y(y^2+x)/(x+2xy+y^3)", "-4*x*y + 3*y^2",
                                   "(-2*x*y^2 + y^3)/x", "(y^2+x)^3/(x+2*x*y+y^3)^2", "y*(y^2+x)/(x+2*x*y+y^3)");
  f.invariant = prop_alg_invariant;
  f.invariant_text = "y^4/(x(x-y))";
  f.excluded = near_diagonal;
  return f;
}

FixtureFlow sqrt2_fixture() {
  FixtureFlow f;
  f.name = "sqrt2";
  f.formula = "x(y+1)^sqrt2 • y/(y+1)";
  f.branch = "principal real power, y + 1 > 0";
  f.field_eval = [](long double x, long double y) -> Point { return {kSqrt2 * x * y, -y * y}; };
  f.eval = [](long double x, long double y) -> Point {
    if (!(y + 1 > 0)) escape("sqrt2", "y + 1 <= 0");
    return {x * std::pow(y + 1, kSqrt2), y / (y + 1)};
  };
  f.invariant = [](long double x, long double y) { return x * std::pow(y, kSqrt2); };
  f.invariant_text = "x y^sqrt2";
  f.box = {0.1L, 0.5L, 0.1L, 0.5L};
  return f;
}

FixtureFlow q_flow_fixture() {
  FixtureFlow f;
  f.name = "q-flow";
  f.formula = "x y e^y / (x^3 + y^3 - x^3 e^{3y})^{1/3} • y";
  f.branch = "real cube root; the radicand keeps the sign of y^3";
  f.field = field_of("x^4/y^2 + x*y", "0");
  f.field_eval = numeric_field(*f.field);
  f.eval = [](long double x, long double y) -> Point {
    long double d = x * x * x + y * y * y - x * x * x * std::exp(3 * y);
    if (!(d * y > 0)) escape("q-flow", "radicand changed sign");
    return {x * y * std::exp(y) / std::cbrt(d), y};
  };
  f.invariant = [](long double, long double y) { return y; };
  f.invariant_text = "y";
  f.box = {0.05L, 0.15L, 0.2L, 0.5L};
  return f;
}

FixtureFlow r_flow_fixture() {
  FixtureFlow f;
  f.name = "r-flow";
  f.formula = "x / sqrt(1 - 2x^2/y) • y";
  f.branch = "positive square root";
  f.field = field_of("x^3/y", "0");
  f.field_eval = numeric_field(*f.field);
  f.eval = [](long double x, long double y) -> Point {
    long double d = 1 - 2 * x * x / y;
    if (!(d > 0)) escape("r-flow", "1 - 2x^2/y <= 0");
    return {x / std::sqrt(d), y};
  };
  f.invariant = [](long double, long double y) { return y; };
  f.invariant_text = "y";
  f.box = {0.1L, 0.3L, 0.3L, 0.5L};
  return f;
}

long double prop_int_orbit(long double x, long double y) {
  long double t = x / y;
  return std::exp(-t - t * t / 2) * y;
}

FixtureFlow prop_int_fixture() {
  FixtureFlow f;
  f.name = "prop-int";
  f.formula = "psi s e^{psi + psi^2/2} • s e^{psi + psi^2/2}, psi = l(beta(x/y) - s), s = e^{-x/y - x^2/(2y^2)} y";
  f.branch = "l real, |beta(x/y) - s| < sqrt(pi e / 2)";
  f.field = field_of("x^2 + x*y + y^2", "x*y + y^2");
  f.field_eval = numeric_field(*f.field);
  f.eval = [](long double x, long double y) -> Point {
    if (y == 0) escape("prop-int", "y = 0");
    long double s = prop_int_orbit(x, y);
    long double psi;
    try {
      psi = l_function(beta_function(x / y) - s);
    } catch (const Error&) {
      escape("prop-int", "argument of l outside its real range");
    }
    long double h = s * std::exp(psi + psi * psi / 2);
    return {checked("prop-int", psi * h), checked("prop-int", h)};
  };
  f.invariant = prop_int_orbit;
  f.invariant_text = "exp(-x/y - x^2/(2y^2)) y";
  // beta(x/y) - s leaves the range of l near (0.3, 0.5); keep clear of it.
  f.box = {0.1L, 0.2L, 0.3L, 0.4L};
  f.orbit_tol = 1e-8L;
  return f;
}

long double prop_abel_invariant(long double x, long double y) { return x * (x - y) * (x - y) * y * y; }

FixtureFlow prop_abel_fixture() {
  FixtureFlow f;
  f.name = "prop-abel";
  f.formula = "k^{4/5} s / (k-1)^{2/5} • s / (k^{1/5} (k-1)^{2/5}), k = k(alpha(x/y) - s), s = [x(x-y)^2 y^2]^{1/5}";
  f.branch = "real fifth roots; k stays on the side of 0 and 1 where x/y lies";
  f.field = field_of("2*x^2 - 4*x*y", "-3*x*y + y^2");
  f.field_eval = numeric_field(*f.field);
  f.eval = [](long double x, long double y) -> Point {
    if (y == 0) escape("prop-abel", "y = 0");
    long double t = x / y;
    if (!(t < 1)) escape("prop-abel", "x/y >= 1");
    long double s = r5(prop_abel_invariant(x, y));
    long double k;
    try {
      k = k_invert(alpha_integral(t).value - s);
    } catch (const Error&) {
      escape("prop-abel", "alpha(x/y) - s outside the range of alpha");
    }
    if ((k > 0) != (t > 0) || k == 0) escape("prop-abel", "k crossed 0");
    long double k5 = r5(k), m = r5((k - 1) * (k - 1));
    return {checked("prop-abel", k5 * k5 * k5 * k5 * s / m), checked("prop-abel", s / (k5 * m))};
  };
  f.invariant = prop_abel_invariant;
  f.invariant_text = "x(x-y)^2 y^2";
  f.box = {0.1L, 0.25L, 0.3L, 0.5L};
  f.orbit_tol = 1e-8L;
  return f;
}

// sm and cm summed from their Taylor series. The radius of convergence is
// π₃/3 ≈ 1.77, so 120 terms are ample for |s| < 0.5.
struct DixonSums {
  std::vector<long double> sm, cm;
  DixonSums() {
    JetPair sc = sm_cm_series(120);
    for (int k = 0; k <= 120; ++k) {
      sm.push_back(sc.first.coeff(k).to_long_double());
      cm.push_back(sc.second.coeff(k).to_long_double());
    }
  }
  static long double horner(const std::vector<long double>& c, long double s) {
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
  }
};

const DixonSums& dixon_sums() {
  static const DixonSums sums;
  return sums;
}

FixtureFlow prop_ell_fixture() {
  FixtureFlow f;
  f.name = "prop-ell";
  f.formula =
      "s(c s^2 - S c^2 y s + S^2 x y)^2 / (y(x - c^3 y)(c^2 s^2 - S x s + S^2 c x y)) • "
      "s(c^2 s^2 - S x s + S^2 c x y)^2 / (x(x - c^3 y)(c s^2 - S c^2 y s + S^2 x y)), "
      "s = [xy(x-y)]^{1/3}, S = sm(s), c = cm(s)";
  f.branch = "real cube root, |s| < 0.5 so sm, cm come from their Taylor series";
  f.field = field_of("x^2 - 2*x*y", "-2*x*y + y^2");
  f.field_eval = numeric_field(*f.field);
  f.eval = [](long double x, long double y) -> Point {
    long double s = std::cbrt(x * y * (x - y));
    if (!(std::fabs(s) < 0.5L)) escape("prop-ell", "|s| >= 0.5");
    const DixonSums& d = dixon_sums();
    long double S = DixonSums::horner(d.sm, s), c = DixonSums::horner(d.cm, s);
    long double a = c * s * s - S * c * c * y * s + S * S * x * y;
    long double b = c * c * s * s - S * x * s + S * S * c * x * y;
    long double e = x - c * c * c * y;
    return {checked("prop-ell", s * a * a / (y * e * b)), checked("prop-ell", s * b * b / (x * e * a))};
  };
  f.invariant = [](long double x, long double y) { return x * y * (x - y); };
  f.invariant_text = "xy(x-y)";
  f.box = {0.1L, 0.3L, 0.35L, 0.55L};
  f.excluded = near_diagonal;
  return f;
}

std::vector<FixtureFlow> build_registry() {
  return {identity_fixture(), radial_fixture(),    prop_alg_fixture(), phi23_fixture(),
          canonical_fixture(3), sqrt2_fixture(),   q_flow_fixture(),   r_flow_fixture(),
          prop_int_fixture(), prop_abel_fixture(), prop_ell_fixture()};
}

}  // namespace

FixtureFlow canonical_fixture(int n) {
  if (n < 1) raise(Errc::DomainError, "canonical fixture needs N >= 1");
  std::string N = std::to_string(n), M = std::to_string(n - 1);
  std::string pi = M + "*x*y";
  std::string u = "x*(y+1)^" + M;
  FixtureFlow f = rational_fixture("canonical-" + N, "x(y+1)^" + M + " • y/(y+1)", pi.c_str(), "-y^2", u.c_str(),
                                   "y/(y+1)");
  f.invariant = [n](long double x, long double y) { return x * std::pow(y, static_cast<long double>(n - 1)); };
  f.invariant_text = "x y^" + M;
  f.pde_tol = 1e-8L;
  return f;
}

const std::vector<FixtureFlow>& fixtures() {
  static const std::vector<FixtureFlow> registry = build_registry();
  return registry;
}

const FixtureFlow& fixture(std::string_view name) {
  for (const FixtureFlow& f : fixtures())
    if (f.name == name) return f;
  throw Error(Errc::DomainError, "unknown fixture '" + std::string(name) + "'", std::string(name));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const FixtureFlow& f : fixtures()) out.push_back(f.name);
  return out;
}

std::vector<Point> grid(const FixtureFlow& f, int n) {
  std::vector<Point> out;
  const SamplingBox& b = f.box;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long double x = n == 1 ? b.x_lo : b.x_lo + (b.x_hi - b.x_lo) * i / (n - 1);
      long double y = n == 1 ? b.y_lo : b.y_lo + (b.y_hi - b.y_lo) * j / (n - 1);
      if (!f.skips(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace projflow
