#include "projflow/poly1.hpp"

#include <algorithm>
#include <map>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

const Rat& zero_rat() {
  static const Rat z(0);
  return z;
}

// Trial-division factorization of |n|. Cofactors above the trial bound are
// accepted only when provably prime.
std::vector<std::pair<Int, int>> factor(Int n) {
  std::vector<std::pair<Int, int>> out;
  n = ::abs(n);
  const unsigned long bound = 1000000;
  for (unsigned long p = 2; p <= bound && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(Int(p), e);
  }
  if (n > 1) {
    if (n >= Int(bound) * bound && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      raise(Errc::SizeExceeded, "coefficient too large to enumerate rational root candidates");
    }
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> ds{Int(1)};
  for (const auto& [p, e] : factor(n)) {
    std::size_t base = ds.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

Poly1::Poly1(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

Poly1 Poly1::constant(const Rat& c) { return Poly1(std::vector<Rat>{c}); }

Poly1 Poly1::monomial(int degree, const Rat& c) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly1(std::move(v));
}

Poly1 Poly1::linear(const Rat& root) { return Poly1(std::vector<Rat>{Rat(-root), Rat(1)}); }

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly1::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rat& Poly1::lead() const { return c_.empty() ? zero_rat() : c_.back(); }

int Poly1::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

Poly1 Poly1::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly1(std::move(d));
}

Poly1 Poly1::monic() const {
  if (c_.empty()) return {};
  Poly1 out = *this;
  Rat inv = 1 / lead();
  out *= inv;
  return out;
}

Rat Poly1::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

long double Poly1::eval(long double t) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + to_long_double(*it);
  return acc;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) { return *this = *this * o; }

Poly1& Poly1::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
Poly1 operator-(const Poly1& a) { return a * Rat(-1); }

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Poly1(std::move(out));
}

Poly1 operator*(Poly1 a, const Rat& s) { return a *= s; }
Poly1 operator*(const Rat& s, Poly1 a) { return a *= s; }

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) raise(Errc::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly1(), a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rat inv = 1 / b.lead();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rat f = r[static_cast<std::size_t>(k)] * inv;
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly1(std::move(q)), Poly1(std::move(r))};
}

Poly1 operator/(const Poly1& a, const Poly1& b) { return divmod(a, b).first; }
Poly1 operator%(const Poly1& a, const Poly1& b) { return divmod(a, b).second; }

Poly1 gcd(const Poly1& a, const Poly1& b) {
  Poly1 x = a, y = b;
  while (!y.is_zero()) {
    Poly1 r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

XGcd xgcd(const Poly1& a, const Poly1& b) {
  Poly1 r0 = a, r1 = b;
  Poly1 s0 = Poly1::constant(1), s1;
  Poly1 t0, t1 = Poly1::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly1 s2 = s0 - q * s1;
    Poly1 t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly1(), Poly1(), Poly1()};
  Rat inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly1 pow(const Poly1& p, int k) {
  Poly1 out = Poly1::constant(1);
  Poly1 base = p;
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

Poly1 compose(const Poly1& p, const Poly1& q) {
  Poly1 acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly1::constant(*it);
  return acc;
}

std::vector<Poly1> squarefree_decomposition(const Poly1& p) {
  std::vector<Poly1> out;
  if (p.degree() <= 0) return out;
  Poly1 f = p.monic();
  Poly1 a = gcd(f, f.derivative());
  Poly1 b = f / a;
  Poly1 d = f.derivative() / a - b.derivative();
  while (b.degree() > 0) {
    Poly1 ai = gcd(b, d);
    out.push_back(ai);
    b = b / ai;
    d = d / ai - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

bool is_squarefree(const Poly1& p) {
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly1& p) {
  std::vector<std::pair<Rat, int>> out;
  if (p.degree() <= 0) return out;

  Poly1 rest = p;
  int zero_mult = rest.valuation();
  if (zero_mult > 0) {
    std::vector<Rat> shifted(rest.coeffs().begin() + zero_mult, rest.coeffs().end());
    rest = Poly1(std::move(shifted));
    out.emplace_back(Rat(0), zero_mult);
  }

  // Work on the squarefree part with integer coefficients.
  Poly1 sq = rest.degree() > 0 ? rest / gcd(rest, rest.derivative()) : rest;
  if (sq.degree() > 0) {
    Int l = 1;
    for (const auto& c : sq.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Int a0 = Int(sq.coeffs().front() * l);
    Int an = Int(sq.lead() * l);
    auto num_divs = divisors(a0);
    auto den_divs = divisors(an);
    std::map<Rat, int> found;
    Poly1 work = rest;
    for (const auto& d : num_divs) {
      for (const auto& e : den_divs) {
        for (int s : {1, -1}) {
          Rat cand(Int(s * d), e);
          cand.canonicalize();
          if (found.count(cand)) continue;
          if (sq.eval(cand) != 0) continue;
          int mult = 0;
          Poly1 lin = Poly1::linear(cand);
          while (work.degree() > 0) {
            auto [q, r] = divmod(work, lin);
            if (!r.is_zero()) break;
            work = std::move(q);
            ++mult;
          }
          found[cand] = mult;
        }
      }
    }
    for (auto& kv : found) out.push_back(kv);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::string to_string(const Poly1& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat c = p.coeff(k);
    if (c == 0) continue;
    std::string mag = to_string(abs(c));
    bool neg = c < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (k == 0) {
      s += mag;
      continue;
    }
    if (mag != "1") s += mag + "*";
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace projflow
