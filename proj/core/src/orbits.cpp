#include "projflow/orbits.hpp"

#include <numeric>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

long to_long(const Int& z) {
  if (!z.fits_slong_p()) raise(Errc::SizeExceeded, "orbit exponent does not fit in a machine integer");
  return z.get_si();
}

}  // namespace

long genus_cyclic_cover(long alpha, long beta, long gamma) {
  if (std::gcd(std::gcd(alpha, beta), gamma) != 1)
    raise(Errc::InvalidExponents, "exponents must be coprime");
  const long n = std::labs(alpha + beta + gamma);
  if (n == 0) throw Error(Errc::InvalidExponents, "level N = 0 has no cyclic cover", "level", 0);
  long ramification = 0;
  for (long m : {alpha, beta, gamma}) ramification += n - std::gcd(n, std::labs(m));
  const long two_g_minus_2 = -2 * n + ramification;
  return two_g_minus_2 / 2 + 1;
}

OrbitForm make_orbit_form(long alpha, long beta, long gamma) {
  OrbitForm w;
  w.alpha = alpha;
  w.beta = beta;
  w.gamma = gamma;
  const long sum = alpha + beta + gamma;
  w.level = std::labs(sum);
  w.scaler = Rat(sum);
  long pos = 0, neg = 0;
  for (long m : {alpha, beta, gamma}) (m > 0 ? pos : neg) += std::labs(m);
  w.curve_degree = std::max(pos, neg);
  if (w.level > 0 && std::gcd(std::gcd(alpha, beta), gamma) == 1) w.genus = genus_cyclic_cover(alpha, beta, gamma);
  return w;
}

OrbitForm orbit_exponents(const VectorField& vf) {
  if (!vf.is_quadratic()) raise(Errc::UnsupportedShape, "orbit exponents need a pair of quadratic forms");
  const RationalFunction2 cross = vf.cross();
  if (cross.is_zero()) raise(Errc::DegenerateField, "yϖ - xϱ vanishes identically");
  const BivarPoly target = BivarPoly::monomial(2, 1) - BivarPoly::monomial(1, 2);
  const auto q = divide_exact(cross.num(), target);
  if (!cross.is_polynomial() || !q || !q->is_constant())
    raise(Errc::WrongRootConfiguration, "yϖ - xϱ is not a multiple of xy(x - y); normalize the roots first");
  const Rat kappa = q->constant_value() / cross.den().constant_value();
  const RationalFunction2& rho = vf.rho();
  const Rat r0 = rho.eval(Rat(0), Rat(1)) / kappa;
  const Rat r1 = -rho.eval(Rat(1), Rat(1)) / kappa;
  const Rat r2 = 1 - r0 - r1;

  Int l = 1;
  for (const Rat* r : {&r0, &r1, &r2}) l = lcm(l, r->get_den());
  Int a(Rat(r0 * l)), b(Rat(r1 * l)), c(Rat(r2 * l));  // exact
  Int g = gcd(gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a + b + c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return make_orbit_form(to_long(a), to_long(b), to_long(c));
}

InvarianceResult orbit_invariance_check(const VectorField& vf, const OrbitForm& w) {
  const RationalFunction2 X(BivarPoly::x()), Y(BivarPoly::y());
  const auto& pi = vf.pi();
  const auto& rho = vf.rho();
  RationalFunction2 r = RationalFunction2::constant(Rat(w.alpha)) * pi / X +
                        RationalFunction2::constant(Rat(w.beta)) * (pi - rho) / (X - Y) +
                        RationalFunction2::constant(Rat(w.gamma)) * rho / Y;
  return {r.is_zero(), r};
}

InvarianceResult orbit_invariance_gradient(const VectorField& vf, const RationalFunction2& wx,
                                           const RationalFunction2& wy) {
  RationalFunction2 r = vf.pi() * wx + vf.rho() * wy;
  return {r.is_zero(), r};
}

InvarianceResult orbit_invariance_check(const VectorField& vf, const RationalFunction2& w) {
  return orbit_invariance_gradient(vf, w.dx(), w.dy());
}

RationalFunction2 orbit_ode_residual(const VectorField& vf, const RationalFunction2& w, int n) {
  if (w.is_zero() || !w.euler_homogeneous(n))
    throw Error(Errc::HomogeneityMismatch, "W is not homogeneous of the stated degree", "W", n);
  return RationalFunction2::constant(Rat(n)) * w * vf.rho() + w.dx() * vf.cross();
}

std::string orbit_equation(const OrbitForm& w) {
  std::string out;
  auto factor = [&out](const char* base, long e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += base;
    out += '^';
    out += std::to_string(e);
  };
  factor("x", w.alpha);
  factor("(x-y)", w.beta);
  factor("y", w.gamma);
  if (out.empty()) out = "1";
  return out + " = const";
}

}  // namespace projflow
