#include "projflow/partial_fractions.hpp"

#include "projflow/errors.hpp"

namespace projflow {

namespace {

struct Block {
  Poly1 base;  // monic
  int power;
};

}  // namespace

RationalFunction1 PartialFractions::recombine() const {
  RationalFunction1 acc{polynomial, Poly1::constant(1)};
  auto add = [&acc](const Poly1& n, const Poly1& d) {
    acc.num = acc.num * d + n * acc.den;
    acc.den = acc.den * d;
  };
  for (const auto& t : linear) add(Poly1::constant(t.coeff), pow(Poly1::linear(t.root), t.order));
  for (const auto& t : other) add(t.numerator, pow(t.factor, t.order));
  return acc;
}

long double PartialFractions::eval(long double t) const {
  long double acc = polynomial.eval(t);
  for (const auto& term : linear) {
    long double base = t - to_long_double(term.root);
    long double d = 1;
    for (int k = 0; k < term.order; ++k) d *= base;
    acc += to_long_double(term.coeff) / d;
  }
  for (const auto& term : other) {
    long double f = term.factor.eval(t);
    long double d = 1;
    for (int k = 0; k < term.order; ++k) d *= f;
    acc += term.numerator.eval(t) / d;
  }
  return acc;
}

PartialFractions partial_fractions(const RationalFunction1& r, bool allow_nonlinear) {
  if (r.den.is_zero()) raise(Errc::ZeroDenominator, "partial fractions of x/0");
  Poly1 g = gcd(r.num, r.den);
  Poly1 num = r.num / g;
  Poly1 den = r.den / g;
  Rat lead = den.lead();
  num *= Rat(1 / lead);
  den *= Rat(1 / lead);

  PartialFractions out;
  auto [q, rem] = divmod(num, den);
  out.polynomial = q;
  if (rem.is_zero()) return out;

  std::vector<Block> blocks;
  Poly1 leftover = den;
  for (const auto& [root, mult] : rational_roots(den)) {
    blocks.push_back({Poly1::linear(root), mult});
    leftover = leftover / pow(Poly1::linear(root), mult);
  }
  if (leftover.degree() > 0) {
    if (!allow_nonlinear) {
      raise(Errc::IrrationalRoots, "denominator factor " + to_string(leftover, "t") + " has no rational roots");
    }
    auto parts = squarefree_decomposition(leftover);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].degree() > 0) blocks.push_back({parts[i], static_cast<int>(i) + 1});
  }

  for (const auto& b : blocks) {
    Poly1 F = pow(b.base, b.power);
    Poly1 cofactor = den / F;
    XGcd e = xgcd(cofactor, F);
    Poly1 n = (rem * e.s) % F;
    // Expand n in powers of the base: n = Σ c_j base^j.
    for (int j = 0; j < b.power; ++j) {
      auto [qq, c] = divmod(n, b.base);
      n = qq;
      if (c.is_zero()) continue;
      int order = b.power - j;
      if (b.base.degree() == 1) {
        out.linear.push_back({Rat(-b.base.coeff(0)), order, c.coeff(0)});
      } else {
        out.other.push_back({b.base, order, c});
      }
    }
  }
  return out;
}

bool same_function(const RationalFunction1& a, const RationalFunction1& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace projflow
