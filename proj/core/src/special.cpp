#include "projflow/special.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>

#include "projflow/errors.hpp"
#include "projflow/partial_fractions.hpp"
#include "projflow/series.hpp"

namespace projflow {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kE = std::numbers::e_v<long double>;

SeriesComparison compare(UnivarSeries expected, UnivarSeries computed, int order) {
  SeriesComparison out;
  for (int k = 0; k <= order; ++k) {
    if (expected.coeff(k) != computed.coeff(k)) {
      out.equal = false;
      out.first_mismatch = k;
      break;
    }
  }
  out.expected = std::move(expected);
  out.computed = std::move(computed);
  return out;
}

UnivarSeries restriction_on_antidiagonal(const char* which, const VectorField& vf, int order) {
  if (order < 0) raise(Errc::OrderTooLow, std::string(which) + ": negative order");
  // normalize=true drops one order, so integrate one further.
  SeriesFlow sf = integrate_series(vf, std::max(order + 1, 2));
  return restrict_to_line(sf, Rat(1), Rat(-1), Component::U, true);
}

}  // namespace

long double r5(long double t) { return t < 0 ? -std::pow(-t, 0.2L) : std::pow(t, 0.2L); }

// ---------------------------------------------------------------- Y

QuadratureResult y_hypergeom_series(long double x) {
  if (std::fabs(x) >= 1) raise(Errc::DomainError, "series for Y needs |x| < 1");
  QuadratureResult r;
  long double term = 1, sum = 1;
  for (int k = 0; k < 2000; ++k) {
    term *= (0.6L + k) / (1.2L + k) * x;
    sum += term;
    ++r.nodes_used;
    if (std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
  }
  r.value = sum;
  r.error_estimate = std::fabs(term) * std::fabs(x) / (1 - std::fabs(x));
  return r;
}

QuadratureResult y_hypergeom_quadrature(long double x) {
  if (x >= 1) raise(Errc::DomainError, "Y is defined for x < 1");
  return integrate([x](long double s) { return std::pow(1 - x + x * std::pow(s, 5), -0.6L); }, 0, 1);
}

QuadratureResult y_hypergeom(long double x) {
  if (!(x < 1)) raise(Errc::DomainError, "Y is defined for x < 1");
  return std::fabs(x) <= 0.5L ? y_hypergeom_series(x) : y_hypergeom_quadrature(x);
}

long double y_ode_residual(long double x, long double h) {
  long double d = (y_hypergeom(x + h).value - y_hypergeom(x - h).value) / (2 * h);
  return 5 * x * (1 - x) * d + (1 - 3 * x) * y_hypergeom(x).value - 1;
}

// ---------------------------------------------------------------- α and 𝐤

QuadratureResult alpha_integral(long double x) {
  if (!(x <= 1)) raise(Errc::DomainError, "alpha is defined for x <= 1");
  if (x == 0) return {};
  auto head = [](long double s) { return std::pow(1 + std::pow(s, 5), -0.6L); };
  auto tail = [](long double r) { return r * std::pow(1 + std::pow(r, 5), -0.6L); };
  if (x == 1) return integrate(head, 0, 1) + integrate(tail, 0, 1);
  if (x > 0) {
    // t = 1 + s^5, then s = 1/r past s = 1.
    long double S = r5(x / (1 - x));
    if (S <= 1) return integrate(head, 0, S);
    return integrate(head, 0, 1) + integrate(tail, 1 / S, 1);
  }
  // t in (T, 1): t = 1 - s^5 on [max(T, 1/2), 1] and t = w^{5/2} below 1/2.
  long double T = 1 / (1 - x);
  auto near_one = [](long double s) { return std::pow(1 - std::pow(s, 5), -0.6L); };
  // 1 - T = -x/(1 - x), computed without cancellation.
  QuadratureResult r = integrate(near_one, 0, r5(T >= 0.5L ? -x / (1 - x) : 0.5L));
  if (T < 0.5L) {
    QuadratureResult low = integrate([](long double w) { return std::pow(1 - std::pow(w, 2.5L), -0.8L); },
                                     std::pow(T, 0.4L), std::pow(0.5L, 0.4L));
    low.value /= 2;
    low.error_estimate /= 2;
    r = r + low;
  }
  r.value = -r.value;
  return r;
}

long double alpha_derivative(long double x) {
  if (!(x < 1) || x == 0) raise(Errc::DomainError, "alpha' is singular at 0 and 1");
  return 1 / (5 * std::pow(1 - x, 0.6L) * std::pow(std::fabs(x), 0.8L));
}

long double k_derivative(long double k) {
  if (!(k <= 1)) raise(Errc::DomainError, "k takes values in (-inf, 1]");
  return 5 * std::pow(1 - k, 0.6L) * std::pow(std::fabs(k), 0.8L);
}

long double k_invert(long double t) {
  const long double top = alpha_integral(1).value;
  if (!(t <= top) || !(t > -top)) raise(Errc::DomainError, "t outside the range of alpha");
  // Newton in w with k = w^5, where dα/dw = (1 - k)^{-3/5} is smooth at 0.
  auto alpha_w = [](long double w) { return alpha_integral(w * w * w * w * w).value; };
  long double lo = -1, hi = 1;
  int grow = 0;
  while (alpha_w(lo) >= t) {
    lo *= 2;
    if (++grow > 60) raise(Errc::NewtonDivergence, "k_invert: no lower bracket");
  }
  long double w = t >= 0 ? std::min(t, 0.9L) : std::max(t, lo / 2);
  for (int it = 0; it < 200; ++it) {
    long double k = w * w * w * w * w;
    long double f = alpha_w(w) - t;
    if (f == 0) return k;
    if (f < 0) lo = w;
    else hi = w;
    long double step = f * std::pow(1 - k, 0.6L);
    long double next = w - step;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (std::fabs(next - w) <= 1e-17L * std::max(1.0L, std::fabs(w)) || hi - lo <= 1e-18L) {
      w = next;
      return w * w * w * w * w;
    }
    w = next;
  }
  raise(Errc::NewtonDivergence, "k_invert did not converge");
}

UnivarSeries AbelianJet::L(int n) const {
  if (n < 0 || n > static_cast<int>(a.size())) raise(Errc::OrderTooLow, "jet order exceeds computed coefficients");
  std::vector<Rat> c{Rat(0)};
  c.insert(c.end(), a.begin(), a.begin() + n);
  return UnivarSeries::from_coeffs(0, std::move(c));
}

AbelianJet k_jet(int order) {
  if (order < 1) raise(Errc::OrderTooLow, "k_jet needs order >= 1");
  AbelianJet jet;
  UnivarSeries one = UnivarSeries::constant(Rat(1));
  for (int k = 0; k < order; ++k) {
    // Σ i a_i x^{i-1} = 10 (1 + L/2)^{3/5} (1 + L)^{4/5}; [x^k] needs a_1..a_k.
    UnivarSeries L = jet.L(k);
    UnivarSeries rhs = (one + L * rat(1, 2)).pow_rational(rat(3, 5)) * (one + L).pow_rational(rat(4, 5));
    jet.a.push_back(Rat(rhs.coeff(k) * 10 / (k + 1)));
  }
  return jet;
}

SeriesComparison abel_cross_check(const AbelianJet& jet, int order) {
  UnivarSeries one = UnivarSeries::constant(Rat(1));
  UnivarSeries L = jet.L(order);
  UnivarSeries computed = (one + L).pow_rational(rat(4, 5)) * (one + L * rat(1, 2)).pow_rational(rat(-2, 5));
  VectorField vf = quadratic_field(Rat(2), Rat(-4), Rat(-3), Rat(1));
  return compare(restriction_on_antidiagonal("abel_cross_check", vf, order), computed, order);
}

SeriesComparison abel_cross_check(int order) { return abel_cross_check(k_jet(std::max(order, 1)), order); }

// ---------------------------------------------------------------- error-function flow

UnivarSeries erf_jet(int order) {
  if (order < 1) raise(Errc::OrderTooLow, "erf_jet needs order >= 1");
  std::vector<Rat> m{Rat(0)};
  for (int k = 0; k < order; ++k) {
    UnivarSeries known = UnivarSeries::from_coeffs(0, m);
    UnivarSeries e = (known * known * rat(1, 2)).exp();
    m.push_back(Rat(-e.coeff(k) / (k + 1)));
  }
  return UnivarSeries::from_coeffs(0, std::move(m));
}

UnivarSeries g_series_from_erf(int order) {
  UnivarSeries m = erf_jet(order + 1);
  return ((m - UnivarSeries::constant(Rat(1))) * m.derivative()).truncated(order + 1);
}

SeriesComparison g_series_identity(const UnivarSeries& m, int order) {
  UnivarSeries computed = ((m - UnivarSeries::constant(Rat(1))) * m.derivative()).truncated(order + 1);
  VectorField vf = quadratic_field6(Rat(1), Rat(1), Rat(1), Rat(0), Rat(1), Rat(1));
  return compare(restriction_on_antidiagonal("g_series_identity", vf, order), computed, order);
}

SeriesComparison g_series_identity(int order) { return g_series_identity(erf_jet(order + 1), order); }

long double radius_estimate(const UnivarSeries& s) {
  for (int k = s.prec() - 3; k >= 0; --k) {
    Rat a = s.coeff(k), b = s.coeff(k + 2);
    if (a != 0 && b != 0) return std::sqrt(std::fabs(to_long_double(Rat(a / b))));
  }
  raise(Errc::OrderTooLow, "radius_estimate needs two nonzero coefficients two apart");
}

long double l_function(long double t) {
  long double arg = -t * std::sqrt(2 / (kPi * kE));
  if (!(std::fabs(arg) < 1)) raise(Errc::DomainError, "l(t) needs |t| < sqrt(pi e / 2)");
  return std::sqrt(2.0L) * boost::math::erf_inv(arg) - 1;
}

long double beta_function(long double t) { return -std::sqrt(kPi * kE / 2) * boost::math::erf((t + 1) / std::sqrt(2.0L)); }

// ---------------------------------------------------------------- type II flows

Type2Result type2_flow_eval(const VectorField& vf, long double x, long double y) {
  if (!vf.rho().is_zero()) raise(Errc::UnsupportedShape, "type2_flow_eval needs rho = 0");
  if (x == 0) raise(Errc::DomainError, "type2_flow_eval needs x != 0");
  Type2Result out;
  out.v = y;
  if (y == 0) {
    out.u = x;
    return out;
  }
  // r(t) = 1/ϖ(1, t) = Q/P.
  const RationalFunction2 swapped = vf.pi().substitute_linear(Rat(0), Rat(1), Rat(1), Rat(0));
  Poly1 P = swapped.num().at_y_one(), Q = swapped.den().at_y_one();
  if (P.is_zero()) raise(Errc::PoleOnPath, "pi(1, t) vanishes identically");
  Poly1 g = gcd(P, Q);
  if (!g.is_constant()) {
    P = P / g;
    Q = Q / g;
  }
  auto r = [&](long double t) { return Q.eval(t) / P.eval(t); };

  const long double w0 = y / x;
  if (P.eval(w0) == 0) raise(Errc::PoleOnPath, "pi(1, y/x) = 0");

  std::function<long double(long double)> Phi;
  PartialFractions pf = partial_fractions({Q, P}, true);
  if (pf.fully_linear()) {
    out.closed_form = true;
    Poly1 prim;
    for (int k = 0; k <= pf.polynomial.degree(); ++k)
      prim += Poly1::monomial(k + 1, Rat(pf.polynomial.coeff(k) / (k + 1)));
    Phi = [prim, terms = pf.linear](long double t) {
      long double s = prim.eval(t);
      for (const LinearTerm& lt : terms) {
        long double c = to_long_double(lt.coeff), d = t - to_long_double(lt.root);
        s += lt.order == 1 ? c * std::log(std::fabs(d)) : c * std::pow(d, 1 - lt.order) / (1 - lt.order);
      }
      return s;
    };
  }
  // ∫_a^b r for a segment free of poles.
  auto segment = [&](long double a, long double b) {
    return Phi ? Phi(b) - Phi(a) : integrate(r, a, b).value;
  };
  auto pole_free = [&](long double a, long double b) {
    long double pa = P.eval(a);
    for (int i = 1; i <= 16; ++i) {
      long double pt = P.eval(a + (b - a) * i / 16);
      if (pt == 0 || (pt > 0) != (pa > 0)) return false;
    }
    return true;
  };

  // G(w) = ∫_w^{w0} r - y vanishes at w = y/u; G(w0) = -y.
  const long double dir = -(r(w0) > 0 ? 1 : -1) * (y > 0 ? 1 : -1);
  long double a = w0, acc = 0;
  long double h = 1e-2L * std::max(1.0L, std::fabs(w0));
  bool near_pole = false;
  for (int step = 0; step < 400; ++step) {
    long double b = a + dir * h;
    // Near a pole the integral diverges; either G crosses zero first or the
    // flow runs into the pole.
    while (!pole_free(a, b)) {
      near_pole = true;
      h /= 4;
      if (h <= 1e-15L * std::max(1.0L, std::fabs(a))) raise(Errc::PoleOnPath, "pole of 1/pi(1, t) between y/x and y/u");
      b = a + dir * h;
    }
    long double piece = segment(b, a);  // ∫_b^a r
    long double Gb = acc + piece - y;
    if ((Gb >= 0) == (y > 0) || Gb == 0) {
      auto G = [&](long double w) { return acc + segment(w, a) - y; };
      std::uintmax_t iters = 200;
      auto [lo, hi] = boost::math::tools::toms748_solve(G, std::min(a, b), std::max(a, b), G(std::min(a, b)),
                                                         G(std::max(a, b)),
                                                         boost::math::tools::eps_tolerance<long double>(62), iters);
      out.w = (lo + hi) / 2;
      if (out.w == 0) raise(Errc::RootFindFailure, "flow escapes through u = infinity");
      out.u = y / out.w;
      return out;
    }
    acc += piece;
    a = b;
    h *= 1.5L;
    if (std::fabs(a) > 1e15L) break;
  }
  if (near_pole) raise(Errc::PoleOnPath, "pole of 1/pi(1, t) between y/x and y/u");
  raise(Errc::RootFindFailure, "no solution of the type II time equation along the real path");
}

}  // namespace projflow
