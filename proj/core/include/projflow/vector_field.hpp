#pragma once

#include <functional>
#include <string>
#include <utility>

#include "projflow/rational_function.hpp"

namespace projflow {

/// 2x2 matrix [[a, b], [c, d]] acting on column vectors (x, y).
struct Mat2 {
  Rat a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  static Mat2 diag(const Rat& p, const Rat& q) { return {p, Rat(0), Rat(0), q}; }
  static Mat2 swap() { return {Rat(0), Rat(1), Rat(1), Rat(0)}; }
  static Mat2 scalar(const Rat& s) { return diag(s, s); }

  Rat det() const { return Rat(a * d - b * c); }
  Mat2 inverse() const;
  std::pair<Rat, Rat> apply(const Rat& x, const Rat& y) const { return {Rat(a * x + b * y), Rat(c * x + d * y)}; }

  friend bool operator==(const Mat2& l, const Mat2& r) { return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d; }
};

Mat2 operator*(const Mat2& l, const Mat2& r);

/// The pair (ϖ, ϱ) of 2-homogeneous rational functions.
class VectorField {
 public:
  /// The zero field of the identity flow.
  VectorField() = default;

  const RationalFunction2& pi() const { return pi_; }
  const RationalFunction2& rho() const { return rho_; }
  bool is_zero() const { return pi_.is_zero() && rho_.is_zero(); }
  bool is_polynomial() const { return pi_.is_polynomial() && rho_.is_polynomial(); }
  /// Both components are quadratic forms.
  bool is_quadratic() const;
  /// y·ϖ − x·ϱ
  RationalFunction2 cross() const;

  friend bool operator==(const VectorField& l, const VectorField& r) { return l.pi_ == r.pi_ && l.rho_ == r.rho_; }
  friend bool operator!=(const VectorField& l, const VectorField& r) { return !(l == r); }

 private:
  friend VectorField make_vector_field(const RationalFunction2& pi, const RationalFunction2& rho);
  VectorField(RationalFunction2 pi, RationalFunction2 rho) : pi_(std::move(pi)), rho_(std::move(rho)) {}
  RationalFunction2 pi_;
  RationalFunction2 rho_;
};

/// Validates both components by the exact Euler test. Throws NotHomogeneous
/// with subject "pi" or "rho" and the homogeneity degree found (absent when
/// the component is not homogeneous at all).
VectorField make_vector_field(const RationalFunction2& pi, const RationalFunction2& rho);

/// a·x² + b·xy • c·xy + d·y²
VectorField quadratic_field(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
/// General quadratic pair: ϖ = p0·x² + p1·xy + p2·y², ϱ = r0·x² + r1·xy + r2·y².
VectorField quadratic_field6(const Rat& p0, const Rat& p1, const Rat& p2, const Rat& r0, const Rat& r1, const Rat& r2);

/// Field of ℓ⁻¹∘φ∘ℓ for the linear map ℓ(x) = L·x, i.e. L⁻¹·v(L·x).
VectorField conjugate_linear(const VectorField& vf, const Mat2& L);

/// 1-BIR ℓ(x, y) = (x·A, y·A) with A 0-homogeneous.
struct BirationalMap {
  RationalFunction2 A;
  std::pair<long double, long double> apply(long double x, long double y) const {
    long double s = A.eval(x, y);
    return {x * s, y * s};
  }
};

/// η = Aϖ − A_y(xϱ − yϖ), ν = Aϱ + A_x(xϱ − yϖ).
VectorField conjugate_by_multiplier(const VectorField& vf, const RationalFunction2& A);

/// Pointwise variant for a multiplier A(x, y) = a(x/y) known only
/// numerically, with a' supplied by the caller.
std::pair<long double, long double> conjugate_by_multiplier_at(
    const VectorField& vf, const std::function<long double(long double)>& a,
    const std::function<long double(long double)>& da, long double x, long double y);

std::string to_string(const VectorField& vf);

}  // namespace projflow
