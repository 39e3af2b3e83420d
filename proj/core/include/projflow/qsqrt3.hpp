#pragma once

#include <string>

#include "projflow/rational.hpp"

namespace projflow {

/// a + b·√3 with exact rational parts.
struct QSqrt3 {
  Rat a;
  Rat b;

  QSqrt3() = default;
  QSqrt3(const Rat& a_) : a(a_) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(const Rat& a_, const Rat& b_) : a(a_), b(b_) {}
  QSqrt3(long v) : a(v) {}  // NOLINT(google-explicit-constructor)

  static QSqrt3 sqrt3() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  bool is_pure_sqrt3() const { return a == 0; }

  /// √3 ↦ −√3.
  QSqrt3 conj() const { return {a, -b}; }
  /// a² − 3b², the field norm.
  Rat norm() const;
  QSqrt3 inverse() const;
  long double to_long_double() const;

  QSqrt3& operator+=(const QSqrt3& o);
  QSqrt3& operator-=(const QSqrt3& o);
  QSqrt3& operator*=(const QSqrt3& o);
  QSqrt3& operator/=(const QSqrt3& o);
};

QSqrt3 operator+(QSqrt3 x, const QSqrt3& y);
QSqrt3 operator-(QSqrt3 x, const QSqrt3& y);
QSqrt3 operator*(QSqrt3 x, const QSqrt3& y);
QSqrt3 operator/(QSqrt3 x, const QSqrt3& y);
QSqrt3 operator-(const QSqrt3& x);
bool operator==(const QSqrt3& x, const QSqrt3& y);
bool operator!=(const QSqrt3& x, const QSqrt3& y);

/// Display form such as "1/3", "43/9072*sqrt3" or "1/2+1/6*sqrt3".
std::string to_string(const QSqrt3& v);

}  // namespace projflow
