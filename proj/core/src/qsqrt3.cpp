#include "projflow/qsqrt3.hpp"

#include <cmath>

#include "projflow/errors.hpp"

namespace projflow {

Rat QSqrt3::norm() const { return Rat(a * a - 3 * b * b); }

QSqrt3 QSqrt3::inverse() const {
  Rat n = norm();
  if (n == 0) raise(Errc::ZeroDenominator, "inverse of 0 in Q(sqrt3)");
  return {Rat(a / n), Rat(-b / n)};
}

long double QSqrt3::to_long_double() const {
  return projflow::to_long_double(a) + projflow::to_long_double(b) * std::sqrt(3.0L);
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
  a += o.a;
  b += o.b;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  Rat na = a * o.a + 3 * b * o.b;
  Rat nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  if (o.b == 0) {
    if (o.a == 0) raise(Errc::ZeroDenominator, "division by 0 in Q(sqrt3)");
    a /= o.a;
    b /= o.a;
    return *this;
  }
  return *this *= o.inverse();
}

QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }
QSqrt3 operator-(const QSqrt3& x) { return {Rat(-x.a), Rat(-x.b)}; }
bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a == y.a && x.b == y.b; }
bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }

std::string to_string(const QSqrt3& v) {
  if (v.b == 0) return to_string(v.a);
  std::string irr = to_string(v.b) + "*sqrt3";
  if (v.a == 0) return irr;
  return to_string(v.a) + (v.b > 0 ? "+" : "") + irr;
}

}  // namespace projflow
