#include "projflow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "projflow/errors.hpp"
#include "projflow/series.hpp"
#include "projflow/vector_field.hpp"

namespace projflow {

namespace {

std::string point_text(long double x, long double y) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << static_cast<double>(x) << ", " << static_cast<double>(y) << ")";
  return os.str();
}

// Homogeneous parts of p from its lowest degree upwards.
std::vector<RationalFunction2> homogeneous_parts(const BivarPoly& p, int& lowest) {
  lowest = p.min_total_degree();
  std::vector<BivarPoly> parts(static_cast<std::size_t>(p.total_degree() - lowest + 1));
  for (const auto& [key, c] : p.terms())
    parts[static_cast<std::size_t>(key.first + key.second - lowest)] += BivarPoly::monomial(key.first, key.second, c);
  return {parts.begin(), parts.end()};
}

// Coefficients of z^0..z^{terms-1} in g(xz, yz)/z.
std::vector<RationalFunction2> expand_scaled(const RationalFunction2& g, int terms) {
  if (g.is_zero()) return std::vector<RationalFunction2>(static_cast<std::size_t>(terms));
  int vn = 0, vd = 0;
  auto n = homogeneous_parts(g.num(), vn);
  auto d = homogeneous_parts(g.den(), vd);
  if (vn - vd != 1) raise(Errc::DomainError, "closed form is not tangent to the identity at 0");
  return expand_in_z(n, d, terms);
}

long double rel_dev(long double a, long double b) { return std::fabs(a - b) / std::max(1.0L, std::fabs(b)); }

}  // namespace

long double fixture_pde_residual(const FixtureFlow& f, const std::vector<Point>& points, long double h) {
  long double worst = 0;
  for (const auto& [x, y] : points) {
    Point c = f.eval(x, y);
    Point xp = f.eval(x + h, y), xm = f.eval(x - h, y);
    Point yp = f.eval(x, y + h), ym = f.eval(x, y - h);
    Point w = f.field_eval(x, y);
    long double ru = (xp.first - xm.first) / (2 * h) * (w.first - x) + (yp.first - ym.first) / (2 * h) * (w.second - y) +
                     c.first;
    long double rv = (xp.second - xm.second) / (2 * h) * (w.first - x) +
                     (yp.second - ym.second) / (2 * h) * (w.second - y) + c.second;
    if (!std::isfinite(ru) || !std::isfinite(rv))
      throw Error(Errc::EvaluationFailure, f.name + ": residual not finite at " + point_text(x, y), f.name);
    worst = std::max({worst, std::fabs(ru), std::fabs(rv)});
  }
  return worst;
}

long double fixture_orbit_conservation(const FixtureFlow& f, const std::vector<Point>& points,
                                       const std::vector<long double>& z_values) {
  if (!f.has_invariant()) raise(Errc::DomainError, f.name + " has no orbit invariant");
  long double worst = 0;
  for (const auto& [x, y] : points) {
    long double w0 = f.invariant(x, y);
    for (long double z : z_values) {
      Point p = f.eval(x * z, y * z);
      long double w = f.invariant(p.first / z, p.second / z);
      long double dev = std::fabs(w - w0) / std::fabs(w0);
      if (!std::isfinite(dev))
        throw Error(Errc::EvaluationFailure, f.name + ": invariant not finite at " + point_text(x, y), f.name);
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

SeriesMatch fixture_exact_series(const FixtureFlow& f, int order) {
  if (!f.exact || !f.field) raise(Errc::DomainError, f.name + " has no rational closed form");
  SeriesMatch m;
  m.exact = true;
  SeriesFlow sf = integrate_series(*f.field, order);
  auto u = expand_scaled(f.exact->u, order);
  auto v = expand_scaled(f.exact->v, order);
  for (int i = 1; i <= order; ++i) {
    if (sf.u_at(i) != u[static_cast<std::size_t>(i - 1)] || sf.v_at(i) != v[static_cast<std::size_t>(i - 1)]) {
      m.equal = false;
      m.first_mismatch = i;
      break;
    }
  }
  return m;
}

std::vector<long double> taylor_fit(const std::function<long double(long double)>& g, int n, long double radius,
                                    int nodes) {
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<long double> values(static_cast<std::size_t>(nodes)), theta(values.size());
  for (int j = 0; j < nodes; ++j) {
    theta[j] = pi * (j + 0.5L) / nodes;
    values[j] = g(radius * std::cos(theta[j]));
  }
  std::vector<long double> a(static_cast<std::size_t>(nodes), 0);
  long double top = 0;
  for (int m = 0; m < nodes; ++m) {
    for (int j = 0; j < nodes; ++j) a[m] += values[j] * std::cos(m * theta[j]);
    a[m] *= (m == 0 ? 1.0L : 2.0L) / nodes;
    top = std::max(top, std::fabs(a[m]));
  }
  // Coefficients at the rounding floor would be amplified by the large
  // monomial coefficients of T_m; drop them.
  for (long double& am : a)
    if (std::fabs(am) < 1e-17L * top) am = 0;
  // T_m expanded in powers of s = t / radius.
  std::vector<long double> b(static_cast<std::size_t>(nodes), 0);
  std::vector<long double> prev(static_cast<std::size_t>(nodes), 0), cur(prev.size(), 0);
  prev[0] = 1;
  for (int m = 0; m < nodes; ++m) {
    const std::vector<long double>& T = m == 0 ? prev : cur;
    for (int k = 0; k < nodes; ++k) b[k] += a[m] * T[k];
    if (m == 0) {
      cur.assign(cur.size(), 0);
      cur[1] = 1;
    } else {
      std::vector<long double> next(cur.size(), 0);
      for (int k = 0; k + 1 < nodes; ++k) next[k + 1] += 2 * cur[k];
      for (int k = 0; k < nodes; ++k) next[k] -= prev[k];
      prev = cur;
      cur = next;
    }
  }
  std::vector<long double> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[k] = b[k] / std::pow(radius, static_cast<long double>(k));
  return c;
}

SeriesMatch fixture_vs_series(const FixtureFlow& f, const Rat& p, const Rat& q, int order, long double radius) {
  if (!f.field) raise(Errc::DomainError, f.name + " has no rational vector field");
  SeriesMatch m;
  SeriesFlow sf = integrate_series(*f.field, order);
  const long double pf = p.get_d(), qf = q.get_d();
  for (Component comp : {Component::U, Component::V}) {
    UnivarSeries s = restrict_to_line(sf, p, q, comp, false);
    auto g = [&](long double t) {
      Point r = f.eval(pf * t, qf * t);
      return comp == Component::U ? r.first : r.second;
    };
    auto fit = taylor_fit(g, order + 1, radius);
    for (int k = 1; k <= order && k < s.prec(); ++k) {
      long double dev = rel_dev(fit[k], s.coeff(k).get_d());
      if (dev > m.max_deviation) {
        m.max_deviation = dev;
        m.first_mismatch = k;
      }
    }
  }
  return m;
}

Point extract_field_numeric(const FixtureFlow& f, long double x, long double y, long double radius) {
  auto u = taylor_fit([&](long double t) { return f.eval(x * t, y * t).first; }, 3, radius);
  auto v = taylor_fit([&](long double t) { return f.eval(x * t, y * t).second; }, 3, radius);
  return {u[2], v[2]};
}

BoundaryReport boundary_limit_check(const FixtureFlow& f, long double x, long double y, long double z0,
                                    long double tol) {
  BoundaryReport r;
  std::vector<Point> d;
  for (long double z : {z0, z0 / 2, z0 / 4}) {
    Point p = f.eval(x * z, y * z);
    d.emplace_back(p.first / z, p.second / z);
    r.deviations.push_back(std::max(std::fabs(d.back().first - x), std::fabs(d.back().second - y)));
  }
  auto richardson = [](long double a, long double b, long double c) {
    long double r1 = 2 * b - a, r2 = 2 * c - b;
    return (4 * r2 - r1) / 3;
  };
  long double lu = richardson(d[0].first, d[1].first, d[2].first);
  long double lv = richardson(d[0].second, d[1].second, d[2].second);
  r.extrapolated = std::max(std::fabs(lu - x), std::fabs(lv - y));
  bool shrinking = r.deviations[1] <= r.deviations[0] && r.deviations[2] <= r.deviations[1];
  r.holds = r.extrapolated < tol && shrinking;
  return r;
}

LineReport prop_sing_lines(const Rat& B, const Rat& C, int order) {
  if (B == 1 || C == 1) raise(Errc::DomainError, "prop_sing_lines needs B, C != 1");
  const Rat a = Rat((B - 1) / (C - 1));
  const Rat b = Rat((B * C - 1) / (C - 1));
  SeriesFlow sf = integrate_series(quadratic_field6(a, B, 0, 0, Rat(a * C), 1), order);
  // t / (1 - c t) = Σ c^{k-1} t^k
  auto geometric = [&](const UnivarSeries& s, const Rat& c) {
    Rat pw(1);
    for (int k = 1; k <= order && k < s.prec(); ++k, pw *= c)
      if (s.coeff(k) != pw) return false;
    return s.coeff(0) == 0;
  };
  auto zero = [&](const UnivarSeries& s) { return s.valuation() >= s.prec(); };
  LineReport r;
  r.x_axis = geometric(restrict_to_line(sf, 1, 0, Component::U, false), a) &&
             zero(restrict_to_line(sf, 1, 0, Component::V, false));
  r.y_axis = zero(restrict_to_line(sf, 0, 1, Component::U, false)) &&
             geometric(restrict_to_line(sf, 0, 1, Component::V, false), Rat(1));
  r.diagonal = geometric(restrict_to_line(sf, 1, 1, Component::U, false), b) &&
               geometric(restrict_to_line(sf, 1, 1, Component::V, false), b);
  return r;
}

std::vector<CheckReport> run_fixture_checks(const FixtureFlow& f) {
  std::vector<CheckReport> out;
  auto attempt = [&](const std::string& check, long double tol, auto&& body) {
    CheckReport r{f.name, check, 0, tol, false, {}};
    try {
      r.max_residual = body();
      r.pass = r.max_residual <= tol;
    } catch (const Error& e) {
      r.note = e.what();
    }
    out.push_back(r);
  };
  const std::vector<Point> pts = grid(f, 5);
  attempt("pde_residual", f.pde_tol, [&] { return fixture_pde_residual(f, pts); });
  if (f.has_invariant())
    attempt("orbit_conservation", f.orbit_tol, [&] { return fixture_orbit_conservation(f, pts); });
  if (f.exact) {
    attempt("exact_series", 0, [&] {
      SeriesMatch m = fixture_exact_series(f, 10);
      return m.equal ? 0.0L : 1.0L;
    });
  }
  attempt("boundary_limit", 1e-7L, [&] {
    BoundaryReport b = boundary_limit_check(f, pts.front().first, pts.front().second, 1e-3L, 1e-7L);
    return b.holds ? b.extrapolated : std::max(b.extrapolated, 1.0L);
  });
  return out;
}

}  // namespace projflow
