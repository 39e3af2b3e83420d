#include "projflow/bivar_poly.hpp"

#include <algorithm>
#include <vector>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

const Rat& zero_rat() {
  static const Rat z(0);
  return z;
}

// Polynomial in x whose coefficients are polynomials in y.
using Recursive = std::vector<Poly1>;

Recursive to_recursive(const BivarPoly& p) {
  Recursive r(static_cast<std::size_t>(std::max(p.degree_x(), 0)) + 1);
  std::vector<std::vector<Rat>> dense(r.size());
  for (const auto& [k, c] : p.terms()) {
    auto& row = dense[static_cast<std::size_t>(k.first)];
    if (row.size() <= static_cast<std::size_t>(k.second)) row.resize(static_cast<std::size_t>(k.second) + 1);
    row[static_cast<std::size_t>(k.second)] = c;
  }
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = Poly1(std::move(dense[i]));
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

BivarPoly from_recursive(const Recursive& r) {
  BivarPoly::Terms t;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& cs = r[i].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (cs[j] != 0) t.emplace(BivarPoly::Key{static_cast<int>(i), static_cast<int>(j)}, cs[j]);
  }
  return BivarPoly(std::move(t));
}

int rdeg(const Recursive& r) { return static_cast<int>(r.size()) - 1; }

void rtrim(Recursive& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

Poly1 rcontent(const Recursive& r) {
  Poly1 g;
  for (const auto& c : r) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Recursive rdiv_scalar(const Recursive& r, const Poly1& c) {
  Recursive out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i] / c;
  return out;
}

// Pseudo-remainder of a by b in x.
Recursive prem(Recursive a, const Recursive& b) {
  const int n = rdeg(b);
  const Poly1& lb = b.back();
  while (!a.empty() && rdeg(a) >= n) {
    const int shift = rdeg(a) - n;
    Poly1 la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    rtrim(a);
  }
  return a;
}

BivarPoly normalize_lead(BivarPoly p) {
  if (p.is_zero()) return p;
  Rat inv = 1 / p.leading_coeff();
  return p * inv;
}

BivarPoly strip_monomial(const BivarPoly& p, const BivarPoly::Key& m) {
  BivarPoly::Terms t;
  for (const auto& [k, c] : p.terms()) t.emplace(BivarPoly::Key{k.first - m.first, k.second - m.second}, c);
  return BivarPoly(std::move(t));
}

BivarPoly homogeneous_gcd(const BivarPoly& a, const BivarPoly& b) {
  auto ma = a.monomial_content();
  auto mb = b.monomial_content();
  BivarPoly ra = strip_monomial(a, ma);
  BivarPoly rb = strip_monomial(b, mb);
  Poly1 g = gcd(ra.at_y_one(), rb.at_y_one());
  BivarPoly out = BivarPoly::homogenize(g, g.degree());
  return out * BivarPoly::monomial(std::min(ma.first, mb.first), std::min(ma.second, mb.second));
}

}  // namespace

BivarPoly::BivarPoly(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) it = terms_.erase(it);
    else ++it;
  }
}

BivarPoly BivarPoly::constant(const Rat& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int i, int j, const Rat& c) {
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Key{i, j}, c);
  return p;
}

BivarPoly BivarPoly::homogenize(const Poly1& p, int degree) {
  BivarPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    Rat c = p.coeff(k);
    if (c != 0) out.terms_.emplace(Key{k, degree - k}, c);
  }
  return out;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rat BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find(Key{i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.first + kv.first.second);
  return d;
}

int BivarPoly::min_total_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& kv : terms_) d = std::min(d, kv.first.first + kv.first.second);
  return d;
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.first);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.second);
  return d;
}

std::optional<int> BivarPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = total_degree();
  return min_total_degree() == d ? std::optional<int>(d) : std::nullopt;
}

BivarPoly::Key BivarPoly::monomial_content() const {
  if (terms_.empty()) return {0, 0};
  Key m = terms_.begin()->first;
  for (const auto& kv : terms_) {
    m.first = std::min(m.first, kv.first.first);
    m.second = std::min(m.second, kv.first.second);
  }
  return m;
}

const Rat& BivarPoly::leading_coeff() const { return terms_.empty() ? zero_rat() : terms_.rbegin()->second; }

void BivarPoly::add_term(const Key& k, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly BivarPoly::dx() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) out.terms_.emplace(Key{k.first - 1, k.second}, c * k.first);
  return out;
}

BivarPoly BivarPoly::dy() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) out.terms_.emplace(Key{k.first, k.second - 1}, c * k.second);
  return out;
}

Rat BivarPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [k, c] : terms_) acc += c * pow(x, k.first) * pow(y, k.second);
  return acc;
}

long double BivarPoly::eval(long double x, long double y) const {
  long double acc = 0;
  for (const auto& [k, c] : terms_) {
    long double m = to_long_double(c);
    for (int i = 0; i < k.first; ++i) m *= x;
    for (int j = 0; j < k.second; ++j) m *= y;
    acc += m;
  }
  return acc;
}

BivarPoly BivarPoly::substitute_linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
  const BivarPoly X = monomial(1, 0, a) + monomial(0, 1, b);
  const BivarPoly Y = monomial(1, 0, c) + monomial(0, 1, d);
  std::vector<BivarPoly> xp{constant(1)}, yp{constant(1)};
  BivarPoly out;
  for (const auto& [k, coef] : terms_) {
    while (static_cast<int>(xp.size()) <= k.first) xp.push_back(xp.back() * X);
    while (static_cast<int>(yp.size()) <= k.second) yp.push_back(yp.back() * Y);
    out += xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)] * coef;
  }
  return out;
}

Poly1 BivarPoly::at_y_one() const {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1);
  for (const auto& [k, v] : terms_) c[static_cast<std::size_t>(k.first)] += v;
  return Poly1(std::move(c));
}

Poly1 BivarPoly::on_line(const Rat& p, const Rat& q) const {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(total_degree(), 0)) + 1);
  for (const auto& [k, v] : terms_) c[static_cast<std::size_t>(k.first + k.second)] += v * pow(p, k.first) * pow(q, k.second);
  return Poly1(std::move(c));
}

std::size_t BivarPoly::max_digits() const {
  std::size_t d = 0;
  for (const auto& kv : terms_) d = std::max(d, digit_count(kv.second));
  return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, Rat(-c));
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
BivarPoly operator-(const BivarPoly& a) { return a * Rat(-1); }
BivarPoly operator*(BivarPoly a, const Rat& s) { return a *= s; }
BivarPoly operator*(const Rat& s, BivarPoly a) { return a *= s; }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly::Terms t;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      BivarPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      auto [it, inserted] = t.emplace(k, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return BivarPoly(std::move(t));
}

BivarPoly pow(const BivarPoly& p, int k) {
  BivarPoly out = BivarPoly::constant(1);
  BivarPoly base = p;
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

BivarPoly gcd(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero()) return normalize_lead(b);
  if (b.is_zero()) return normalize_lead(a);
  if (a.is_constant() || b.is_constant()) return BivarPoly::constant(1);
  if (a.homogeneous_degree() && b.homogeneous_degree()) return normalize_lead(homogeneous_gcd(a, b));

  Recursive ra = to_recursive(a);
  Recursive rb = to_recursive(b);
  Poly1 ca = rcontent(ra);
  Poly1 cb = rcontent(rb);
  Poly1 cg = gcd(ca, cb);
  ra = rdiv_scalar(ra, ca);
  rb = rdiv_scalar(rb, cb);
  if (rdeg(ra) < rdeg(rb)) std::swap(ra, rb);

  Recursive g;
  if (rdeg(rb) == 0) {
    g = Recursive{Poly1::constant(1)};
  } else {
    while (true) {
      Recursive r = prem(ra, rb);
      if (r.empty()) {
        g = rb;
        break;
      }
      if (rdeg(r) == 0) {
        g = Recursive{Poly1::constant(1)};
        break;
      }
      ra = std::move(rb);
      rb = rdiv_scalar(r, rcontent(r));
    }
  }
  for (auto& c : g) c = c * cg;
  return normalize_lead(from_recursive(g));
}

std::optional<BivarPoly> divide_exact(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) raise(Errc::ZeroDenominator, "polynomial division by zero");
  if (a.is_zero()) return BivarPoly();
  if (b.is_constant()) return a * Rat(1 / b.constant_value());
  Recursive r = to_recursive(a);
  const Recursive rb = to_recursive(b);
  const int n = rdeg(rb);
  Recursive q(static_cast<std::size_t>(std::max(rdeg(r) - n, 0)) + 1);
  while (!r.empty()) {
    if (rdeg(r) < n) return std::nullopt;
    auto [lq, lr] = divmod(r.back(), rb.back());
    if (!lr.is_zero()) return std::nullopt;
    const int shift = rdeg(r) - n;
    q[static_cast<std::size_t>(shift)] += lq;
    for (int j = 0; j <= n; ++j) r[static_cast<std::size_t>(j + shift)] -= lq * rb[static_cast<std::size_t>(j)];
    rtrim(r);
  }
  rtrim(q);
  return from_recursive(q);
}

std::string to_string(const BivarPoly& p, const std::string& x, const std::string& y) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mag = to_string(abs(c));
    bool neg = c < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string mono;
    auto power = [](const std::string& v, int e) { return e == 1 ? v : v + "^" + std::to_string(e); };
    if (k.first > 0) mono += power(x, k.first);
    if (k.second > 0) mono += (mono.empty() ? "" : "*") + power(y, k.second);
    if (mono.empty()) s += mag;
    else if (mag == "1") s += mono;
    else s += mag + "*" + mono;
  }
  return s;
}

}  // namespace projflow
