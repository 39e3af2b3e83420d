#pragma once

#include <optional>
#include <string>

#include "projflow/bivar_poly.hpp"

namespace projflow {

/// num/den in lowest terms. The denominator's leading coefficient is 1, so
/// equal functions have identical representations.
class RationalFunction2 {
 public:
  RationalFunction2() : den_(BivarPoly::constant(1)) {}
  RationalFunction2(const BivarPoly& num);  // NOLINT(google-explicit-constructor)
  RationalFunction2(const BivarPoly& num, const BivarPoly& den);
  static RationalFunction2 constant(const Rat& c) { return RationalFunction2(BivarPoly::constant(c)); }

  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Degree d with f(tx, ty) = t^d f(x, y); nullopt when not homogeneous.
  /// The zero function reports nullopt as well.
  std::optional<int> homogeneous_degree() const;
  /// Exact Euler test x f_x + y f_y = d f.
  bool euler_homogeneous(int d) const;

  RationalFunction2 dx() const;
  RationalFunction2 dy() const;
  Rat eval(const Rat& x, const Rat& y) const;
  long double eval(long double x, long double y) const;
  RationalFunction2 substitute_linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

  RationalFunction2& operator+=(const RationalFunction2& o);
  RationalFunction2& operator-=(const RationalFunction2& o);
  RationalFunction2& operator*=(const RationalFunction2& o);
  RationalFunction2& operator/=(const RationalFunction2& o);

  friend bool operator==(const RationalFunction2& a, const RationalFunction2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction2& a, const RationalFunction2& b) { return !(a == b); }

 private:
  void reduce();
  BivarPoly num_;
  BivarPoly den_;
};

RationalFunction2 operator+(RationalFunction2 a, const RationalFunction2& b);
RationalFunction2 operator-(RationalFunction2 a, const RationalFunction2& b);
RationalFunction2 operator-(const RationalFunction2& a);
RationalFunction2 operator*(RationalFunction2 a, const RationalFunction2& b);
RationalFunction2 operator/(RationalFunction2 a, const RationalFunction2& b);
RationalFunction2 operator*(RationalFunction2 a, const Rat& s);
RationalFunction2 operator*(const Rat& s, RationalFunction2 a);

std::string to_string(const RationalFunction2& f);

/// Univariate rational function used by partial fractions.
struct RationalFunction1 {
  Poly1 num;
  Poly1 den;
};

}  // namespace projflow
