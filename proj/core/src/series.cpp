#include "projflow/series.hpp"

#include <algorithm>
#include <map>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

using ZSeries = std::vector<RationalFunction2>;  // coefficients of z^0, z^1, ...

ZSeries zmul(const ZSeries& a, const ZSeries& b, std::size_t n) {
  ZSeries out(n, RationalFunction2::constant(0));
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

ZSeries zinverse(const ZSeries& d, std::size_t n) {
  if (d.empty() || d[0].is_zero()) raise(Errc::NonInvertibleLeading, "series denominator vanishes at z = 0");
  const RationalFunction2 inv = RationalFunction2::constant(1) / d[0];
  ZSeries h(n, RationalFunction2::constant(0));
  h[0] = inv;
  for (std::size_t k = 1; k < n; ++k) {
    RationalFunction2 acc = RationalFunction2::constant(0);
    for (std::size_t j = 1; j <= k && j < d.size(); ++j) {
      if (d[j].is_zero()) continue;
      acc += d[j] * h[k - j];
    }
    h[k] = -(acc * inv);
  }
  return h;
}

// f(X(z), Y(z)) truncated to n terms, with cached powers.
ZSeries substitute(const BivarPoly& f, const ZSeries& X, const ZSeries& Y, std::size_t n) {
  std::map<int, ZSeries> xp, yp;
  auto power = [n](std::map<int, ZSeries>& cache, const ZSeries& base, int k) -> const ZSeries& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    ZSeries r;
    if (k == 0) {
      r.assign(n, RationalFunction2::constant(0));
      r[0] = RationalFunction2::constant(1);
    } else {
      int prev = k - 1;
      while (prev > 0 && cache.find(prev) == cache.end()) --prev;
      ZSeries cur;
      if (prev == 0) {
        cur.assign(n, RationalFunction2::constant(0));
        cur[0] = RationalFunction2::constant(1);
      } else {
        cur = cache.at(prev);
      }
      for (int e = prev; e < k; ++e) cur = zmul(cur, base, n);
      r = std::move(cur);
    }
    return cache.emplace(k, std::move(r)).first->second;
  };
  ZSeries out(n, RationalFunction2::constant(0));
  for (const auto& [key, c] : f.terms()) {
    ZSeries term = zmul(power(xp, X, key.first), power(yp, Y, key.second), n);
    for (std::size_t i = 0; i < n; ++i)
      if (!term[i].is_zero()) out[i] += term[i] * RationalFunction2::constant(c);
  }
  return out;
}

ZSeries substitute(const RationalFunction2& f, const ZSeries& X, const ZSeries& Y, std::size_t n) {
  ZSeries num = substitute(f.num(), X, Y, n);
  if (f.is_polynomial()) return num;
  return zmul(num, zinverse(substitute(f.den(), X, Y, n), n), n);
}

Rat binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(r);
}

}  // namespace

SeriesFlow SeriesFlow::from_coefficients(std::vector<RationalFunction2> u, std::vector<RationalFunction2> v) {
  if (u.size() != v.size() || u.empty()) raise(Errc::OrderTooLow, "coefficient lists must be nonempty and of equal length");
  SeriesFlow sf;
  sf.order = static_cast<int>(u.size());
  if (u.size() >= 2) sf.field = make_vector_field(u[1], v[1]);
  sf.u = std::move(u);
  sf.v = std::move(v);
  return sf;
}

SeriesFlow integrate_series(const VectorField& vf, int order, std::size_t digit_cap) {
  if (order < 2) throw Error(Errc::OrderTooLow, "integration order must be at least 2", "order", order);
  const BivarPoly& dp = vf.pi().den();
  const BivarPoly& dr = vf.rho().den();
  const BivarPoly D = dp * *divide_exact(dr, gcd(dp, dr));
  const BivarPoly a = vf.pi().num() * *divide_exact(D, dp);
  const BivarPoly b = vf.rho().num() * *divide_exact(D, dr);
  const bool poly = D.is_constant();
  const BivarPoly Dx = D.dx(), Dy = D.dy();

  SeriesFlow sf;
  sf.order = order;
  sf.field = vf;
  auto run = [&](BivarPoly P, std::vector<RationalFunction2>& out, const char* name) {
    int k = 0;  // P / D^k
    out.emplace_back(P);
    for (int i = 1; i < order; ++i) {
      BivarPoly next;
      if (poly) {
        next = P.dx() * a + P.dy() * b;
      } else {
        Rat kk(k);
        next = (P.dx() * D - kk * P * Dx) * a + (P.dy() * D - kk * P * Dy) * b;
        k += 2;
      }
      next *= rat(1, i);
      while (k > 0 && !next.is_zero()) {
        auto q = divide_exact(next, D);
        if (!q) break;
        next = std::move(*q);
        --k;
      }
      if (next.is_zero()) k = 0;
      if (next.max_digits() > digit_cap)
        throw Error(Errc::SizeExceeded, std::string("coefficient digits exceed cap in component ") + name, name,
                    static_cast<long>(i + 1));
      P = std::move(next);
      out.emplace_back(P, k == 0 ? BivarPoly::constant(1) : pow(D, k));
    }
  };
  run(BivarPoly::x(), sf.u, "u");
  run(BivarPoly::y(), sf.v, "v");
  return sf;
}

UnivarSeries restrict_to_line(const SeriesFlow& sf, const Rat& p, const Rat& q, Component c, bool normalize) {
  if (p == 0 && q == 0) raise(Errc::ZeroDirection, "direction (0, 0)");
  const auto& src = c == Component::U ? sf.u : sf.v;
  std::vector<Rat> coeffs;
  coeffs.reserve(src.size());
  for (const auto& f : src) coeffs.push_back(f.eval(p, q));
  if (!normalize) return UnivarSeries(1, std::move(coeffs), sf.order + 1);
  const Rat& lead = c == Component::U ? p : q;
  if (lead == 0)
    throw Error(Errc::DivisionByZeroLeading, "normalizing by a vanishing leading variable",
                c == Component::U ? "u" : "v");
  for (auto& r : coeffs) r /= lead;
  return UnivarSeries(0, std::move(coeffs), sf.order);
}

UnivarSeries ratio_on_line(const SeriesFlow& sf, const Rat& p, const Rat& q) {
  UnivarSeries U = restrict_to_line(sf, p, q, Component::U, false);
  UnivarSeries V = restrict_to_line(sf, p, q, Component::V, false);
  if (V.is_zero() || V.coeff(1) == 0) raise(Errc::NonInvertibleLeading, "v-restriction has zero leading coefficient");
  return U.shifted(-1) * V.shifted(-1).inverse();
}

VectorField extract_vector_field(const SeriesFlow& sf) {
  if (sf.order < 2) throw Error(Errc::OrderTooLow, "vector field needs order 2", "order", sf.order);
  return make_vector_field(sf.u_at(2), sf.v_at(2));
}

bool PdeResidual::all_zero() const { return first_nonzero() < 0; }

int PdeResidual::first_nonzero() const {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() || !v[i].is_zero()) return static_cast<int>(i) + 1;
  return -1;
}

PdeResidual pde_residual_series(const SeriesFlow& sf) {
  const RationalFunction2 X(BivarPoly::x()), Y(BivarPoly::y());
  const RationalFunction2& pi = sf.field.pi();
  const RationalFunction2& rho = sf.field.rho();
  PdeResidual r;
  auto residual = [&](const std::vector<RationalFunction2>& w, const RationalFunction2& boundary,
                      std::vector<RationalFunction2>& out) {
    out.push_back(w[0] - boundary);
    for (std::size_t n = 1; n < w.size(); ++n) {
      RationalFunction2 e = w[n - 1].dx() * pi + w[n - 1].dy() * rho;
      e -= X * w[n].dx() + Y * w[n].dy();
      e += w[n];
      out.push_back(e);
    }
  };
  residual(sf.u, X, r.u);
  residual(sf.v, Y, r.v);
  return r;
}

TranslationReport translation_check(const SeriesFlow& sf, int order) {
  if (order < 3 || order > sf.order)
    throw Error(Errc::OrderTooLow, "translation check order must lie in [3, series order]", "order", order);
  const std::size_t K = static_cast<std::size_t>(order);
  ZSeries X(sf.u.begin(), sf.u.begin() + order), Y(sf.v.begin(), sf.v.begin() + order);
  TranslationReport rep;
  for (std::size_t b = 0; b < K; ++b) {
    const std::size_t n = K - b;
    ZSeries su = substitute(sf.u[b], X, Y, n);
    ZSeries sv = substitute(sf.v[b], X, Y, n);
    for (std::size_t a = 0; a < n; ++a) {
      const int deg = static_cast<int>(a + b);
      RationalFunction2 c = RationalFunction2::constant(binomial(deg, static_cast<int>(a)));
      if (su[a] != c * sf.u[a + b] || sv[a] != c * sf.v[a + b]) {
        rep.holds = false;
        if (rep.first_failure < 0 || deg < rep.first_failure) rep.first_failure = deg;
      }
    }
  }
  return rep;
}

std::vector<RationalFunction2> expand_in_z(const std::vector<RationalFunction2>& num,
                                           const std::vector<RationalFunction2>& den, int terms) {
  const auto n = static_cast<std::size_t>(terms);
  return zmul(num, zinverse(den, n), n);
}

std::pair<long double, long double> eval_series(const SeriesFlow& sf, long double x, long double y, long double z) {
  long double su = 0, sv = 0, zp = 1;
  for (int i = 0; i < sf.order; ++i) {
    su += zp * sf.u[static_cast<std::size_t>(i)].eval(x, y);
    sv += zp * sf.v[static_cast<std::size_t>(i)].eval(x, y);
    zp *= z;
  }
  return {su, sv};
}

}  // namespace projflow
