#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projflow/rational.hpp"

namespace projflow {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rat> ascending);
  static Poly1 constant(const Rat& c);
  static Poly1 monomial(int degree, const Rat& c = Rat(1));
  /// t - root
  static Poly1 linear(const Rat& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  const Rat& lead() const;
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  Poly1 derivative() const;
  Poly1 monic() const;
  Rat eval(const Rat& t) const;
  long double eval(long double t) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1& operator*=(const Rat& s);

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rat> c_;
};

using RationalPolynomial = Poly1;

Poly1 operator+(Poly1 a, const Poly1& b);
Poly1 operator-(Poly1 a, const Poly1& b);
Poly1 operator-(const Poly1& a);
Poly1 operator*(const Poly1& a, const Poly1& b);
Poly1 operator*(Poly1 a, const Rat& s);
Poly1 operator*(const Rat& s, Poly1 a);

/// Euclidean division a = q·b + r with deg r < deg b.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
Poly1 operator/(const Poly1& a, const Poly1& b);
Poly1 operator%(const Poly1& a, const Poly1& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly1 gcd(const Poly1& a, const Poly1& b);

struct XGcd {
  Poly1 g, s, t;  // s·a + t·b = g, g monic
};
XGcd xgcd(const Poly1& a, const Poly1& b);

Poly1 pow(const Poly1& p, int k);
/// p(q(t))
Poly1 compose(const Poly1& p, const Poly1& q);

/// Yun's algorithm: returns f_1, f_2, … with p = c·∏ f_i^i, each f_i monic and
/// squarefree, pairwise coprime (entries may be 1).
std::vector<Poly1> squarefree_decomposition(const Poly1& p);
bool is_squarefree(const Poly1& p);

/// Distinct rational roots with multiplicities, ascending by root.
std::vector<std::pair<Rat, int>> rational_roots(const Poly1& p);

std::string to_string(const Poly1& p, const std::string& var = "x");

}  // namespace projflow
