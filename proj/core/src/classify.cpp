#include "projflow/classify.hpp"

#include <algorithm>
#include <numeric>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

struct Quad {
  Rat p0, p1, p2;  // ϖ = p0 x² + p1 xy + p2 y²
  Rat r0, r1, r2;  // ϱ = r0 x² + r1 xy + r2 y²
};

Rat poly_coeff(const RationalFunction2& f, int i, int j) { return f.num().coeff(i, j) / f.den().constant_value(); }

Quad quad_of(const VectorField& vf) {
  const auto& p = vf.pi();
  const auto& r = vf.rho();
  return {poly_coeff(p, 2, 0), poly_coeff(p, 1, 1), poly_coeff(p, 0, 2),
          poly_coeff(r, 2, 0), poly_coeff(r, 1, 1), poly_coeff(r, 0, 2)};
}

bool same_direction(const Direction& a, const Direction& b) { return a.first * b.second == a.second * b.first; }

/// Projective roots of a homogeneous form of degree d, with multiplicities.
std::vector<std::pair<Direction, int>> form_roots(const BivarPoly& f, int d, bool& all_rational) {
  std::vector<std::pair<Direction, int>> out;
  const Poly1 g = f.at_y_one();
  int total = 0;
  for (const auto& [t, m] : rational_roots(g)) {
    out.push_back({{t, Rat(1)}, m});
    total += m;
  }
  const int at_infinity = d - g.degree();
  if (at_infinity > 0) {
    out.push_back({{Rat(1), Rat(0)}, at_infinity});
    total += at_infinity;
  }
  all_rational = total == d;
  return out;
}

/// L with L e1 ∝ ra, L e2 ∝ rb and L (1, 1) ∝ rc.
Mat2 frame(const Direction& ra, const Direction& rb, const Direction& rc) {
  const Rat det = ra.first * rb.second - rb.first * ra.second;
  const Rat s = (rc.first * rb.second - rb.first * rc.second) / det;
  const Rat t = (ra.first * rc.second - rc.first * ra.second) / det;
  return {Rat(s * ra.first), Rat(t * rb.first), Rat(s * ra.second), Rat(t * rb.second)};
}

/// Invertible L with first column along r.
Mat2 column_frame(const Direction& r) {
  if (r.first != 0) return {r.first, Rat(0), r.second, Rat(1)};
  return {r.first, Rat(1), r.second, Rat(0)};
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rat(n, d);
}

bool is_bc_frame(const VectorField& vf) {
  const BivarPoly target = BivarPoly::monomial(2, 1) - BivarPoly::monomial(1, 2);
  const RationalFunction2 cross = vf.cross();
  if (cross.is_zero() || !cross.is_polynomial()) return false;
  const auto q = divide_exact(cross.num(), target);
  return q && q->is_constant();
}

// Triple root moved to y = 0: ϖ = ax² + bxy + cy², ϱ = axy + by².
void triple_normal_form(const VectorField& vf, const Direction& r, RootStructure& out) {
  Mat2 L = same_direction(r, {Rat(1), Rat(0)})   ? Mat2::identity()
           : same_direction(r, {Rat(0), Rat(1)}) ? Mat2::swap()
                                                 : column_frame(r);
  const Quad w = quad_of(conjugate_linear(vf, L));
  const Rat &a = w.p0, &b = w.p1, &c = w.p2;
  IntegralCase ic;
  if (a == 0) {
    ic.kind = IntegralKind::Unlisted;
  } else if (b != 0) {
    ic = {IntegralKind::I, Rat(c * a / (b * b))};
    L = L * Mat2::diag(1 / a, 1 / b);
  } else if (auto t = rational_sqrt(1 / (a * c))) {
    ic = {IntegralKind::II, Rat(0)};
    L = L * Mat2::diag(1 / a, *t);
  } else {
    // Shear x -> x + y makes b = a; then scale as in the b != 0 branch.
    ic = {IntegralKind::I, Rat(c / a)};
    L = L * Mat2{Rat(1), Rat(1), Rat(0), Rat(1)} * Mat2::diag(1 / a, 1 / a);
  }
  out.normal_form = ic;
  out.witness = L;
  out.conjugated = conjugate_linear(vf, L);
}

// Double root on x = 0, single root on y = 0: ϖ = ax² + bxy, ϱ = exy + by².
void double_normal_form(const VectorField& vf, const Direction& single, const Direction& twice, RootStructure& out) {
  Mat2 L{single.first, twice.first, single.second, twice.second};
  const Quad w = quad_of(conjugate_linear(vf, L));
  IntegralCase ic;
  if (w.p0 != 0 && w.p1 != 0) {
    ic = {IntegralKind::III, Rat(w.r1 / w.p0)};
    L = L * Mat2::diag(1 / w.p0, 1 / w.p1);
  }
  out.normal_form = ic;
  out.witness = L;
  out.conjugated = conjugate_linear(vf, L);
}

}  // namespace

bool binary_form_squarefree(const BivarPoly& f) {
  if (f.is_zero()) return false;
  const Poly1 g = f.at_y_one();
  const int at_infinity = f.total_degree() - g.degree();
  return at_infinity <= 1 && is_squarefree(g);
}

RootStructure multiple_root_case(const VectorField& vf) {
  if (!vf.is_quadratic()) raise(Errc::UnsupportedShape, "root structure needs a pair of quadratic forms");
  RootStructure rs;
  const RationalFunction2 cross = vf.cross();
  if (cross.is_zero()) return rs;
  rs.roots = form_roots(cross.num(), 3, rs.all_rational);
  int top = 0;
  for (const auto& [dir, m] : rs.roots) top = std::max(top, m);
  if (top == 3) {
    rs.kind = RootKind::Triple;
    triple_normal_form(vf, rs.roots.front().first, rs);
  } else if (top == 2) {
    rs.kind = RootKind::Double;
    const auto twice = std::find_if(rs.roots.begin(), rs.roots.end(), [](const auto& e) { return e.second == 2; });
    const auto once = std::find_if(rs.roots.begin(), rs.roots.end(), [](const auto& e) { return e.second == 1; });
    double_normal_form(vf, once->first, twice->first, rs);
  } else {
    rs.kind = RootKind::Squarefree;
  }
  return rs;
}

Normalized root_normalize(const VectorField& vf) {
  const RootStructure rs = multiple_root_case(vf);
  if (rs.kind != RootKind::Squarefree) raise(Errc::FewerThanThreeRoots, "yϖ - xϱ needs three distinct roots");
  if (!rs.all_rational) raise(Errc::IrrationalRoots, "yϖ - xϱ has irrational roots");
  const std::array<Direction, 3> target{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}};
  std::array<int, 3> perm{0, 1, 2};
  std::vector<std::pair<int, std::array<int, 3>>> order;
  do {
    int score = 0;
    for (int k = 0; k < 3; ++k) score += same_direction(rs.roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])].first, target[static_cast<std::size_t>(k)]);
    order.push_back({score, perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(order.begin(), order.end(), [](const auto& l, const auto& r) { return l.first > r.first; });

  auto root = [&rs](int i) { return rs.roots[static_cast<std::size_t>(i)].first; };
  for (const auto& [score, p] : order) {
    const Mat2 L = frame(root(p[0]), root(p[1]), root(p[2]));
    const VectorField w = conjugate_linear(vf, L);
    const Quad q = quad_of(w);
    if (q.p0 != 0 && q.r2 != 0) {
      const Mat2 W = L * Mat2::scalar(1 / q.r2);
      return {conjugate_linear(vf, W), W};
    }
  }
  const auto& p = order.front().second;
  const Mat2 L = frame(root(p[0]), root(p[1]), root(p[2]));
  return {conjugate_linear(vf, L), L};
}

BCForm to_BC_normal_form(const VectorField& vf) {
  if (!vf.is_quadratic() || !is_bc_frame(vf))
    raise(Errc::NotReducibleToBC, "field is not root-normalized to x = 0, y = 0, x = y");
  const Quad q = quad_of(vf);
  if (q.p0 == 0 || q.r2 == 0) raise(Errc::NotReducibleToBC, "a root line carries a zero of the field");
  return {Rat(q.p1 / q.r2), Rat(q.r1 / q.p0), Mat2::scalar(1 / q.r2)};
}

VectorField bc_field(const Rat& B, const Rat& C) {
  if (B == 1 || C == 1) raise(Errc::NotReducibleToBC, "B and C must differ from 1");
  const Rat a = (B - 1) / (C - 1);
  return quadratic_field(a, B, Rat(a * C), Rat(1));
}

bool ConjugacyTriple::satisfies_identity() const {
  if (a == 1 || b == 1 || c == 1) return false;
  return 1 / (1 - a) + 1 / (1 - b) + 1 / (1 - c) == 1;
}

ConjugacyTriple conjugacy_triple(const Rat& B, const Rat& C) {
  if (B * C == 1) raise(Errc::DegenerateProduct, "BC = 1 leaves the third parameter undefined");
  if (B == 1 || C == 1) raise(Errc::DegenerateProduct, "B and C must differ from 1");
  ConjugacyTriple t{B, C, Rat((B + C - 2) / (B * C - 1))};
  if (!t.satisfies_identity()) raise(Errc::DegenerateProduct, "conjugacy identity fails");
  return t;
}

std::optional<AlgebraicType> algebraic_type(const Rat& B, const Rat& C) {
  std::vector<Rat> e{B, C};
  if (B * C != 1) e.push_back((B + C - 2) / (B * C - 1));
  std::optional<AlgebraicType> best;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j || e[j] == 1) continue;
      const Rat n = e[j] / (1 - e[j]);
      const Rat Q = 1 - e[i];
      if (!is_integer(n) || n < 0 || Q == 0 || !n.get_num().fits_slong_p()) continue;
      const long nn = n.get_num().get_si();
      const Rat inv = 1 / Q;
      if (is_integer(inv) && inv >= -nn && inv <= -1) continue;
      AlgebraicType cand{nn, Q};
      auto key = [](const AlgebraicType& t) { return std::make_tuple(t.n, Rat(t.Q.get_num()), Rat(t.Q.get_den())); };
      if (!best || key(cand) < key(*best)) best = cand;
    }
  }
  return best;
}

std::optional<Rat> rational_flow_predicate(long n, const Rat& Q) {
  if (Q == 0) return Rat(0);
  if (n == 0 && is_integer(Q)) return abs(Q);  // (0, Q) and (0, -Q) are the same class
  return std::nullopt;
}

Classification classify(const VectorField& vf) {
  const RationalFunction2& pi = vf.pi();
  const RationalFunction2& rho = vf.rho();
  if (vf.cross().is_zero()) return {flow::RayDegenerate{}, Mat2::identity(), vf};
  if (rho.is_zero()) return {flow::AbelianII{binary_form_squarefree(pi.num())}, Mat2::identity(), vf};
  if (!vf.is_quadratic()) raise(Errc::UnsupportedShape, "only quadratic forms or ϱ = 0 fields are classified");

  // ϖ • ϱ = q(x)·w for a constant vector w: send w to e1 so that ϱ becomes 0.
  const Quad q = quad_of(vf);
  const bool proportional = q.p0 * q.r1 == q.p1 * q.r0 && q.p0 * q.r2 == q.p2 * q.r0 && q.p1 * q.r2 == q.p2 * q.r1;
  if (proportional) {
    Direction w = pi.is_zero() ? Direction{Rat(0), Rat(1)}
                               : Direction{Rat(1), Rat(0)};
    if (!pi.is_zero()) {
      const Rat lead = q.p0 != 0 ? q.p0 : (q.p1 != 0 ? q.p1 : q.p2);
      const Rat other = q.p0 != 0 ? q.r0 : (q.p1 != 0 ? q.r1 : q.r2);
      w.second = other / lead;
    }
    const Mat2 L = column_frame(w);
    const VectorField c = conjugate_linear(vf, L);
    return {flow::AbelianII{binary_form_squarefree(c.pi().num())}, L, c};
  }

  RootStructure rs = multiple_root_case(vf);
  if (rs.kind == RootKind::Double || rs.kind == RootKind::Triple)
    return {flow::Integral{*rs.normal_form}, rs.witness, *rs.conjugated};

  const Normalized nf = root_normalize(vf);
  const BCForm bc = to_BC_normal_form(nf.field);
  const Mat2 W = nf.witness * bc.witness;
  const VectorField target = conjugate_linear(vf, W);
  const OrbitForm orbit = orbit_exponents(target);
  if (auto t = algebraic_type(bc.B, bc.C)) {
    if (auto level = rational_flow_predicate(t->n, t->Q)) return {flow::Rational{*level, *t}, W, target};
    return {flow::Algebraic{*t, bc.B, bc.C, orbit}, W, target};
  }
  return {flow::AbelianI{bc.B, bc.C, orbit}, W, target};
}

std::string to_string(IntegralKind k) {
  switch (k) {
    case IntegralKind::I: return "i";
    case IntegralKind::II: return "ii";
    case IntegralKind::III: return "iii";
    case IntegralKind::Unlisted: return "unlisted";
  }
  return "?";
}

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::Squarefree: return "squarefree";
    case RootKind::Double: return "double";
    case RootKind::Triple: return "triple";
    case RootKind::IdenticallyZero: return "identically_zero";
  }
  return "?";
}

std::string tag(const FlowClass& c) {
  struct V {
    std::string operator()(const flow::RayDegenerate&) const { return "RayDegenerate"; }
    std::string operator()(const flow::AbelianI&) const { return "AbelianI"; }
    std::string operator()(const flow::AbelianII&) const { return "AbelianII"; }
    std::string operator()(const flow::Integral&) const { return "IntegralCase"; }
    std::string operator()(const flow::Algebraic&) const { return "Algebraic"; }
    std::string operator()(const flow::Rational&) const { return "RationalFlow"; }
  };
  return std::visit(V{}, c);
}

}  // namespace projflow
