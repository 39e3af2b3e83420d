#include "projflow/hypergeom.hpp"

#include <cmath>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

void check_type(long n, const Rat& Q) {
  if (n < 0) throw Error(Errc::ForbiddenQ, "n must be non-negative", "n", n);
  if (Q == 0) raise(Errc::ForbiddenQ, "Q = 0");
  const Rat inv = 1 / Q;
  if (is_integer(inv) && inv >= -n && inv <= -1)
    throw Error(Errc::ForbiddenQ, "1/Q = " + to_string(inv) + " hits a pole of (1 + 1/Q)_i", "Q", inv.get_num().get_si());
}

}  // namespace

Rat pochhammer(const Rat& a, int i) {
  Rat r(1);
  for (int k = 0; k < i; ++k) r *= a + k;
  return r;
}

RationalPolynomial p_nQ(long n, const Rat& Q) {
  check_type(n, Q);
  const Rat c = 1 + 1 / Q;
  std::vector<Rat> coeffs;
  for (long i = 0; i <= n; ++i)
    coeffs.push_back(pochhammer(Rat(-n), static_cast<int>(i)) / pochhammer(c, static_cast<int>(i)));
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial verify_sch_ode(const RationalPolynomial& p, long n, const Rat& Q) {
  const Poly1 x = Poly1::monomial(1);
  const Poly1 lhs = Poly1::constant(Q) * x * (Poly1::constant(1) - x) * p.derivative() +
                    (Poly1::constant(Q * n) * x + Poly1::constant(1)) * p;
  return lhs - Poly1::constant(1);
}

VectorField type_field(long n, const Rat& Q) {
  return quadratic_field(Rat(Q * (n + 1)), Rat(1 - Q), Rat(Q * n), Rat(1));
}

UnivarSeries solve_normalizing_series(const VectorField& vf, int sign, int order) {
  if (sign != 1 && sign != -1) throw Error(Errc::DomainError, "sign must be +1 or -1", "sign", sign);
  if (!vf.is_quadratic()) raise(Errc::UnsupportedShape, "normalizing series needs a pair of quadratic forms");
  const Poly1 rho = vf.rho().num().at_y_one() * Poly1::constant(1 / vf.rho().den().constant_value());
  const Poly1 pi = vf.pi().num().at_y_one() * Poly1::constant(1 / vf.pi().den().constant_value());
  const Poly1 D = Poly1::monomial(1) * rho - pi;
  if (rho.coeff(0) == 0) raise(Errc::UnsolvableConstantTerm, "ϱ(0,1) = 0 leaves f(0) undetermined");
  if (D.coeff(0) != 0) raise(Errc::UnsupportedShape, "ϖ(0,1) != 0: the recursion is not triangular");
  std::vector<Rat> f;
  for (int k = 0; k < order; ++k) {
    Rat rhs = k == 0 ? Rat(sign) : Rat(0);
    for (int j = 0; j < k; ++j) rhs -= f[static_cast<std::size_t>(j)] * rho.coeff(k - j);
    for (int m = 1; m < k; ++m) rhs -= Rat(m) * f[static_cast<std::size_t>(m)] * D.coeff(k - m + 1);
    const Rat lead = rho.coeff(0) + Rat(k) * D.coeff(1);
    if (lead == 0) {
      if (rhs != 0) throw Error(Errc::UnsolvableConstantTerm, "resonant order has no solution", "order", k);
      f.push_back(Rat(0));  // free coefficient at a resonance; pick the polynomial branch
      continue;
    }
    f.push_back(rhs / lead);
  }
  return UnivarSeries::from_coeffs(0, std::move(f));
}

AlgebraicPoint algebraic_flow_eval(long n, const Rat& Q, long double x, long double y, long double z) {
  const Poly1 P = p_nQ(n, Q);
  const Poly1 dP = P.derivative();
  if (x == 0 || y == 0 || x == y) raise(Errc::DomainError, "(x, y) lies on an invariant line");
  const long double p = to_long_double(Rat(Q.get_num()));
  const long double q = to_long_double(Rat(Q.get_den()));
  const long double nn = static_cast<long double>(n);
  const long double ea = q, eb = -nn * p - q, ec = (nn + 1) * p;  // exponents times numer(Q)
  const long double h0 = P.eval(x / y) / y;
  const long double scale = std::fabs(h0) + std::fabs(z) + 1;

  auto residual = [&](long double u, long double v, long double t, long double& g1, long double& g2) {
    g1 = ea * std::log(u / x) + eb * std::log((u - v) / (x - y)) + ec * std::log(v / y);
    g2 = P.eval(u / v) / v - h0 + t;
  };
  auto in_branch = [&](long double u, long double v) { return u / x > 0 && v / y > 0 && (u - v) / (x - y) > 0; };

  long double u = x, v = y, t = 0, step = z / 32;
  int steps = 0;
  const long double min_step = std::fabs(z) * 1e-12L;
  while (t != z) {
    long double target = (std::fabs(z - t) <= std::fabs(step)) ? z : t + step;
    long double uu = u, vv = v;
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      long double g1, g2;
      residual(uu, vv, target, g1, g2);
      const long double a11 = ea / uu + eb / (uu - vv), a12 = -eb / (uu - vv) + ec / vv;
      const long double r = uu / vv;
      const long double a21 = dP.eval(r) / (vv * vv), a22 = -dP.eval(r) * uu / (vv * vv * vv) - P.eval(r) / (vv * vv);
      const long double det = a11 * a22 - a12 * a21;
      if (det == 0 || !std::isfinite(det)) raise(Errc::BranchAmbiguity, "singular Jacobian along the continuation path");
      const long double du = (g1 * a22 - g2 * a12) / det, dv = (a11 * g2 - a21 * g1) / det;
      long double lam = 1;
      while (lam > 1e-6L && !in_branch(uu - lam * du, vv - lam * dv)) lam /= 2;
      if (!in_branch(uu - lam * du, vv - lam * dv)) break;
      uu -= lam * du;
      vv -= lam * dv;
      if (std::fabs(du) + std::fabs(dv) <= 1e-17L * (std::fabs(uu) + std::fabs(vv))) {
        ok = true;
        break;
      }
    }
    if (ok) {
      long double g1, g2;
      residual(uu, vv, target, g1, g2);
      ok = std::fabs(g1) < 1e-12L && std::fabs(g2) < 1e-12L * scale;
    }
    if (!ok) {
      step /= 2;
      if (std::fabs(step) < min_step) raise(Errc::NewtonDivergence, "continuation step underflow");
      continue;
    }
    u = uu;
    v = vv;
    t = target;
    ++steps;
  }
  AlgebraicPoint out{u, v, 0, 0, steps};
  long double g1, g2;
  residual(u, v, z, g1, g2);
  out.orbit_residual = std::fabs(g1);
  out.time_residual = std::fabs(g2) / scale;
  return out;
}

}  // namespace projflow
