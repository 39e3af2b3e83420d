#pragma once

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "projflow/errors.hpp"
#include "projflow/qsqrt3.hpp"
#include "projflow/rational.hpp"

namespace projflow {

/// Truncated Laurent series Σ c_k t^k known modulo t^prec. Coefficients are
/// stored from exponent `offset` upward; exponents below `offset` are zero
/// and missing entries below `prec` are zero as well. A jet with
/// prec == kExact is a Laurent polynomial known exactly.
template <class C>
class Jet {
 public:
  static constexpr int kExact = INT_MAX / 4;

  Jet() : offset_(0), prec_(kExact) {}
  Jet(int offset, std::vector<C> coeffs, int prec) : offset_(offset), c_(std::move(coeffs)), prec_(prec) {
    if (prec_ < offset_ + static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(std::max(prec_ - offset_, 0)));
    trim();
  }
  /// Known coefficients a_0, a_1, … with prec = offset + size.
  static Jet from_coeffs(int offset, std::vector<C> coeffs) {
    int prec = offset + static_cast<int>(coeffs.size());
    return Jet(offset, std::move(coeffs), prec);
  }
  static Jet constant(const C& c, int prec = kExact) { return Jet(0, {c}, prec); }
  static Jet monomial(int k, const C& c, int prec = kExact) { return Jet(k, {c}, prec); }

  int prec() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact / 2; }
  /// Lowest exponent with a nonzero coefficient; prec when all known
  /// coefficients vanish.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == C(0))) return offset_ + static_cast<int>(i);
    return prec_;
  }
  bool is_zero() const { return valuation() >= prec_; }

  C coeff(int k) const {
    if (k >= prec_) throw Error(Errc::OrderTooLow, "coefficient t^" + std::to_string(k) + " beyond truncation order");
    if (k < offset_ || k >= offset_ + static_cast<int>(c_.size())) return C(0);
    return c_[static_cast<std::size_t>(k - offset_)];
  }

  /// Coefficients for exponents lo..prec-1.
  std::vector<C> coeffs_from(int lo) const {
    std::vector<C> out;
    for (int k = lo; k < prec_; ++k) out.push_back(coeff(k));
    return out;
  }

  Jet truncated(int prec) const { return Jet(offset_, c_, std::min(prec, prec_)); }

  /// Multiply by t^k.
  Jet shifted(int k) const { return Jet(offset_ + k, c_, prec_ == kExact ? kExact : prec_ + k); }

  Jet derivative() const {
    std::vector<C> d;
    int off = offset_ - 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      int k = offset_ + static_cast<int>(i);
      d.push_back(c_[i] * C(k));
    }
    return Jet(off, std::move(d), is_exact() ? kExact : prec_ - 1);
  }

  /// Map c_k ↦ f(k, c_k).
  template <class Fn>
  Jet map(Fn f) const {
    std::vector<C> d;
    for (std::size_t i = 0; i < c_.size(); ++i) d.push_back(f(offset_ + static_cast<int>(i), c_[i]));
    return Jet(offset_, std::move(d), prec_);
  }

  friend Jet operator+(const Jet& a, const Jet& b) { return combine(a, b, 1); }
  friend Jet operator-(const Jet& a, const Jet& b) { return combine(a, b, -1); }
  friend Jet operator-(const Jet& a) { return a.map([](int, const C& c) { return C(0) - c; }); }
  friend Jet operator*(const Jet& a, const C& s) { return a.map([&s](int, const C& c) { return c * s; }); }
  friend Jet operator*(const C& s, const Jet& a) { return a * s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const int va = a.valuation(), vb = b.valuation();
    int prec = std::min(sat(va + b.prec_), sat(vb + a.prec_));
    if (a.is_exact() && b.is_exact()) prec = kExact;
    const int off = va + vb;
    if (prec <= off) return Jet(off, {}, prec);
    std::vector<C> out(static_cast<std::size_t>(std::min(prec - off, na(a, va) + na(b, vb))));
    for (int i = 0; i < na(a, va); ++i) {
      const C& ca = a.c_[static_cast<std::size_t>(va - a.offset_ + i)];
      if (ca == C(0)) continue;
      for (int j = 0; j < na(b, vb) && i + j < static_cast<int>(out.size()); ++j)
        out[static_cast<std::size_t>(i + j)] += ca * b.c_[static_cast<std::size_t>(vb - b.offset_ + j)];
    }
    return Jet(off, std::move(out), prec);
  }

  /// 1/a for a with an invertible lowest known coefficient.
  Jet inverse() const {
    const int v = valuation();
    if (v >= prec_) raise(Errc::NonInvertibleLeading, "inverse of a jet with no known nonzero coefficient");
    const C lead = coeff(v);
    const int n = is_exact() ? kDefaultInverseTerms : prec_ - v;
    std::vector<C> h(static_cast<std::size_t>(n));
    const C inv = C(1) / lead;
    h[0] = inv;
    for (int k = 1; k < n; ++k) {
      C acc(0);
      for (int j = 1; j <= k; ++j) {
        int e = v + j;
        if (e >= prec_) break;
        acc += coeff(e) * h[static_cast<std::size_t>(k - j)];
      }
      h[static_cast<std::size_t>(k)] = C(0) - acc * inv;
    }
    return Jet(-v, std::move(h), -v + n);
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }

  /// (1 + g)^r for a jet 1 + g with g of positive valuation. `r` must act on
  /// coefficients; for Rat and QSqrt3 a rational exponent is enough.
  Jet pow_rational(const Rat& r) const {
    check_unit_constant("pow_rational");
    const int n = prec_;
    std::vector<C> h(static_cast<std::size_t>(n));
    h[0] = C(1);
    for (int m = 1; m < n; ++m) {
      C acc(0);
      for (int k = 1; k <= m; ++k) {
        C fk = coeff(k);
        if (fk == C(0)) continue;
        Rat w = (r + 1) * k - m;
        acc += C(w) * fk * h[static_cast<std::size_t>(m - k)];
      }
      h[static_cast<std::size_t>(m)] = acc * C(rat(1, m));
    }
    return Jet(0, std::move(h), n);
  }

  /// exp(g) for g with positive valuation.
  Jet exp() const {
    if (offset_ < 0 || coeff(0) != C(0)) raise(Errc::NonInvertibleLeading, "exp of a jet with nonzero constant term");
    const int n = prec_;
    std::vector<C> e(static_cast<std::size_t>(n));
    e[0] = C(1);
    for (int m = 1; m < n; ++m) {
      C acc(0);
      for (int k = 1; k <= m; ++k) {
        C gk = coeff(k);
        if (gk == C(0)) continue;
        acc += C(k) * gk * e[static_cast<std::size_t>(m - k)];
      }
      e[static_cast<std::size_t>(m)] = acc * C(rat(1, m));
    }
    return Jet(0, std::move(e), n);
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    if (a.prec_ != b.prec_) return false;
    int lo = std::min(a.offset_, b.offset_);
    int hi = std::max(a.offset_ + static_cast<int>(a.c_.size()), b.offset_ + static_cast<int>(b.c_.size()));
    for (int k = lo; k < hi; ++k)
      if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
  }

 private:
  static constexpr int kDefaultInverseTerms = 64;
  static int sat(int v) { return std::min(v, kExact); }
  static int na(const Jet& a, int v) { return a.offset_ + static_cast<int>(a.c_.size()) - v; }

  void check_unit_constant(const char* what) const {
    if (is_exact()) raise(Errc::OrderTooLow, std::string(what) + " needs a truncated jet");
    if (valuation() < 0 || !(coeff(0) == C(1))) raise(Errc::NonInvertibleLeading, std::string(what) + " needs constant term 1");
  }

  static Jet combine(const Jet& a, const Jet& b, int s) {
    const int prec = std::min(a.prec_, b.prec_);
    const int lo = std::min(a.offset_, b.offset_);
    int hi = std::max(a.offset_ + static_cast<int>(a.c_.size()), b.offset_ + static_cast<int>(b.c_.size()));
    hi = std::min(hi, prec);
    std::vector<C> out;
    for (int k = lo; k < hi; ++k) {
      C va = (k >= a.offset_ && k < a.offset_ + static_cast<int>(a.c_.size())) ? a.c_[static_cast<std::size_t>(k - a.offset_)] : C(0);
      C vb = (k >= b.offset_ && k < b.offset_ + static_cast<int>(b.c_.size())) ? b.c_[static_cast<std::size_t>(k - b.offset_)] : C(0);
      out.push_back(s > 0 ? C(va + vb) : C(va - vb));
    }
    return Jet(lo, std::move(out), prec);
  }

  void trim() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == C(0)) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      offset_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
    if (c_.empty()) offset_ = std::min(offset_, prec_);
  }

  int offset_;
  std::vector<C> c_;
  int prec_;
};

using UnivarSeries = Jet<Rat>;
using LaurentJet = Jet<QSqrt3>;

}  // namespace projflow
