#include "projflow/rational_function.hpp"

#include "projflow/errors.hpp"

namespace projflow {

RationalFunction2::RationalFunction2(const BivarPoly& num) : num_(num), den_(BivarPoly::constant(1)) {}

RationalFunction2::RationalFunction2(const BivarPoly& num, const BivarPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) raise(Errc::ZeroDenominator, "rational function with zero denominator");
  reduce();
}

void RationalFunction2::reduce() {
  if (num_.is_zero()) {
    den_ = BivarPoly::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    BivarPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  Rat inv = 1 / den_.leading_coeff();
  if (inv != 1) {
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<int> RationalFunction2::homogeneous_degree() const {
  auto a = num_.homogeneous_degree();
  auto b = den_.homogeneous_degree();
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

bool RationalFunction2::euler_homogeneous(int d) const {
  RationalFunction2 x(BivarPoly::x()), y(BivarPoly::y());
  RationalFunction2 lhs = x * dx() + y * dy() - *this * Rat(d);
  return lhs.is_zero();
}

RationalFunction2 RationalFunction2::dx() const {
  if (is_polynomial()) return RationalFunction2(num_.dx() * Rat(1 / den_.constant_value()));
  return RationalFunction2(num_.dx() * den_ - num_ * den_.dx(), den_ * den_);
}

RationalFunction2 RationalFunction2::dy() const {
  if (is_polynomial()) return RationalFunction2(num_.dy() * Rat(1 / den_.constant_value()));
  return RationalFunction2(num_.dy() * den_ - num_ * den_.dy(), den_ * den_);
}

Rat RationalFunction2::eval(const Rat& x, const Rat& y) const {
  Rat d = den_.eval(x, y);
  if (d == 0) raise(Errc::ZeroDenominator, "evaluation at a pole");
  return num_.eval(x, y) / d;
}

long double RationalFunction2::eval(long double x, long double y) const {
  return num_.eval(x, y) / den_.eval(x, y);
}

RationalFunction2 RationalFunction2::substitute_linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
  return RationalFunction2(num_.substitute_linear(a, b, c, d), den_.substitute_linear(a, b, c, d));
}

RationalFunction2& RationalFunction2::operator+=(const RationalFunction2& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) reduce();
    else if (num_.is_zero()) den_ = BivarPoly::constant(1);
    return *this;
  }
  *this = RationalFunction2(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction2& RationalFunction2::operator-=(const RationalFunction2& o) { return *this += -o; }

RationalFunction2& RationalFunction2::operator*=(const RationalFunction2& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    if (num_.is_zero()) den_ = BivarPoly::constant(1);
    return *this;
  }
  *this = RationalFunction2(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction2& RationalFunction2::operator/=(const RationalFunction2& o) {
  if (o.is_zero()) raise(Errc::ZeroDenominator, "division by the zero function");
  *this = RationalFunction2(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction2 operator+(RationalFunction2 a, const RationalFunction2& b) { return a += b; }
RationalFunction2 operator-(RationalFunction2 a, const RationalFunction2& b) { return a -= b; }
RationalFunction2 operator-(const RationalFunction2& a) { return RationalFunction2(-a.num(), a.den()); }
RationalFunction2 operator*(RationalFunction2 a, const RationalFunction2& b) { return a *= b; }
RationalFunction2 operator/(RationalFunction2 a, const RationalFunction2& b) { return a /= b; }
RationalFunction2 operator*(RationalFunction2 a, const Rat& s) { return a *= RationalFunction2::constant(s); }
RationalFunction2 operator*(const Rat& s, RationalFunction2 a) { return a *= RationalFunction2::constant(s); }

std::string to_string(const RationalFunction2& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace projflow
