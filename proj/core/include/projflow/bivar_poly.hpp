#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "projflow/poly1.hpp"
#include "projflow/rational.hpp"

namespace projflow {

/// Sparse polynomial in x, y over Q. Terms map (deg_x, deg_y) to a nonzero
/// coefficient.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rat>;

  BivarPoly() = default;
  explicit BivarPoly(Terms terms);
  static BivarPoly constant(const Rat& c);
  static BivarPoly monomial(int i, int j, const Rat& c = Rat(1));
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }
  /// y^degree · p(x/y)
  static BivarPoly homogenize(const Poly1& p, int degree);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat coeff(int i, int j) const;
  /// Constant term.
  Rat constant_value() const { return coeff(0, 0); }

  int total_degree() const;  // -1 for zero
  int min_total_degree() const;
  int degree_x() const;
  int degree_y() const;
  /// Degree if every term has the same total degree; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const;
  /// Largest monomial x^i y^j dividing every term.
  Key monomial_content() const;
  /// Coefficient of the lexicographically largest key.
  const Rat& leading_coeff() const;

  BivarPoly dx() const;
  BivarPoly dy() const;
  Rat eval(const Rat& x, const Rat& y) const;
  long double eval(long double x, long double y) const;
  /// f(a·x + b·y, c·x + d·y)
  BivarPoly substitute_linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;
  /// f(x, 1) as a polynomial in x.
  Poly1 at_y_one() const;
  /// f(t, 1) for homogeneous input, or more generally the restriction to
  /// (p t, q t) collected by powers of t.
  Poly1 on_line(const Rat& p, const Rat& q) const;
  std::size_t max_digits() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const Rat& s);

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

 private:
  void add_term(const Key& k, const Rat& c);
  Terms terms_;
};

BivarPoly operator+(BivarPoly a, const BivarPoly& b);
BivarPoly operator-(BivarPoly a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(BivarPoly a, const Rat& s);
BivarPoly operator*(const Rat& s, BivarPoly a);
BivarPoly pow(const BivarPoly& p, int k);

/// Greatest common divisor, scaled so the leading coefficient is 1.
BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);
/// a / b when b divides a exactly.
std::optional<BivarPoly> divide_exact(const BivarPoly& a, const BivarPoly& b);

std::string to_string(const BivarPoly& p, const std::string& x = "x", const std::string& y = "y");

}  // namespace projflow
