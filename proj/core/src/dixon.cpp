#include "projflow/dixon.hpp"

#include <cmath>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

using J = LaurentJet;

const QSqrt3 kRoot3 = QSqrt3::sqrt3();

J known(int offset, const std::vector<QSqrt3>& c) { return J::from_coeffs(offset, c); }

void require_order(int order, int minimum, const char* what) {
  if (order < minimum)
    throw Error(Errc::OrderTooLow, std::string(what) + " needs order >= " + std::to_string(minimum), what, order);
}

}  // namespace

JetPair sm_cm_series(int order) {
  require_order(order, 1, "sm_cm_series");
  std::vector<QSqrt3> sm{QSqrt3(0)}, cm{QSqrt3(1)};
  for (int k = 0; k < order; ++k) {
    J s = known(0, sm), c = known(0, cm);
    QSqrt3 ds = (c * c).coeff(k), dc = (s * s).coeff(k);
    sm.push_back(ds * QSqrt3(rat(1, k + 1)));
    cm.push_back(-dc * QSqrt3(rat(1, k + 1)));
  }
  return {known(0, sm), known(0, cm)};
}

JetPair sp_cp_series(int order) {
  require_order(order, 1, "sp_cp_series");
  // 1/sm loses two orders, the quotient by cm none.
  JetPair sc = sm_cm_series(order + 2);
  const J& sm = sc.first;
  const J& cm = sc.second;
  J sp = -(sm * sm) / cm;
  J cp = (cm * cm) / sm;
  return {sp.truncated(order + 1), cp.truncated(order + 1)};
}

JetPair pq_series(int order) {
  require_order(order, 2, "pq_series");
  // p = Σ_{e≥-1} p_e u^e, q = Σ_{e≥2} q_e u^e. Matching u^{e-1}:
  //   (e - 2) q_e = [-q² + 2pq]_{e-1}  with q_e = 0 on the right,
  //   (e + 2) p_e = [-p² + pq]_{e-1}   with p_e = 0 and q_e known.
  // At e = 2 the q equation is void and the constraint 3 q_2² = 1 picks
  // q_2 = √3/3.
  std::vector<QSqrt3> p{QSqrt3(1)};                        // exponents -1, 0, …
  std::vector<QSqrt3> q{QSqrt3(0), QSqrt3(0), QSqrt3(0)};  // exponents 0, 1, 2
  q[2] = kRoot3 * QSqrt3(rat(1, 3));
  for (int e = 0; e <= order; ++e) {
    std::vector<QSqrt3> pe = p;
    pe.push_back(QSqrt3(0));
    J P = J(-1, pe, e + 1);
    if (e >= 3) {
      std::vector<QSqrt3> qe = q;
      qe.push_back(QSqrt3(0));
      J Q = J(0, qe, e + 1);
      QSqrt3 rq = ((P * Q) * QSqrt3(2) - Q * Q).coeff(e - 1);
      q.push_back(rq * QSqrt3(rat(1, e - 2)));
    }
    J Q = J(0, q, e + 1);
    QSqrt3 rp = (P * Q - P * P).coeff(e - 1);
    p.push_back(rp * QSqrt3(rat(1, e + 2)));
  }
  return {J(-1, p, order + 1), J(0, q, order + 1)};
}

JetPair delta_gamma_series(int order) {
  require_order(order, 2, "delta_gamma_series");
  // 1/(pq) costs three orders.
  JetPair pq = pq_series(order + 3);
  J w = (pq.first * pq.second).inverse() * (kRoot3 * QSqrt3(rat(1, 3)));
  J delta = w - pq.first;
  J gamma = -w - pq.first;
  return {delta.truncated(order + 1), gamma.truncated(order + 1)};
}

IdentityReport vanishes(const LaurentJet& residual) {
  IdentityReport r;
  r.known_through = residual.prec() - 1;
  int v = residual.valuation();
  r.holds = v >= residual.prec();
  if (!r.holds) r.first_failure = v;
  return r;
}

IdentityReport fermat_identity(int order) {
  JetPair sc = sm_cm_series(order);
  const J& s = sc.first;
  const J& c = sc.second;
  return vanishes(s * s * s + c * c * c - J::constant(QSqrt3(1)));
}

IdentityReport sp_cp_identity(int order) {
  JetPair sc = sp_cp_series(order);
  return vanishes(sc.first * sc.second * (sc.first - sc.second) - J::constant(QSqrt3(1)));
}

IdentityReport pq_constraint(int order) {
  JetPair pq = pq_series(order);
  const J& p = pq.first;
  const J& q = pq.second;
  return vanishes(p * p * p * q * q * (p * QSqrt3(3) - q * QSqrt3(2)) - J::constant(QSqrt3(1)));
}

IdentityReport delta_gamma_cubic(int order) {
  JetPair dg = delta_gamma_series(order);
  const J& d = dg.first;
  const J& g = dg.second;
  return vanishes(d * g * (d - g) - J::constant(kRoot3 * QSqrt3(rat(4, 9))));
}

IdentityReport odd_function_check(int order) {
  JetPair sc = sp_cp_series(order);
  J f = sc.second * QSqrt3(2) - sc.first;
  IdentityReport r;
  r.holds = true;
  r.known_through = f.prec() - 1;
  for (int k = -2; k < f.prec(); k += 2) {
    if (!f.coeff(k).is_zero()) {
      r.holds = false;
      r.first_failure = k;
      break;
    }
  }
  return r;
}

long double scaling_A() { return std::cbrt(4.0L) / std::sqrt(3.0L); }
long double scaling_B() { return -1 / (std::cbrt(2.0L) * std::sqrt(3.0L)); }

ScalingReport scaling_identity_check(int order, long double tol) {
  JetPair dg = delta_gamma_series(order);
  JetPair sc = sp_cp_series(order);
  const long double A = scaling_A(), B = scaling_B();
  ScalingReport r;
  auto check = [&](const J& lhs, const J& rhs) {
    int top = std::min(lhs.prec(), rhs.prec());
    for (int k = -1; k < top; ++k) {
      long double a = lhs.coeff(k).to_long_double();
      long double b = A * std::pow(B, static_cast<long double>(k)) * rhs.coeff(k).to_long_double();
      long double scale = std::max(std::fabs(a), std::fabs(b));
      long double rel = scale == 0 ? 0 : std::fabs(a - b) / scale;
      ++r.checked;
      if (rel > r.worst_relative) {
        r.worst_relative = rel;
        r.worst_exponent = k;
      }
      if (rel > tol && !r.first_failure) {
        r.holds = false;
        r.first_failure = k;
      }
    }
  };
  check(dg.first, sc.first);
  check(dg.second, sc.second);
  return r;
}

Pi3Report pi3_check() {
  Pi3Report r;
  const long double g = std::tgamma(1.0L / 3);
  r.pi3 = g * g / std::tgamma(2.0L / 3);
  r.pi3_pow6 = std::pow(r.pi3, 6);
  r.holds = std::fabs(r.pi3_pow6 / r.corrected - 1) < 1e-6L &&
            std::fabs(r.uncorrected_times_27 / r.corrected - 1) < 1e-12L && r.pi3 > 5.29L && r.pi3 < 5.31L;
  return r;
}

LaurentJet dixon_jet(const std::string& name, int order) {
  if (name == "sm") return sm_cm_series(order).first;
  if (name == "cm") return sm_cm_series(order).second;
  if (name == "sp") return sp_cp_series(order).first;
  if (name == "cp") return sp_cp_series(order).second;
  if (name == "p") return pq_series(order).first;
  if (name == "q") return pq_series(order).second;
  if (name == "delta") return delta_gamma_series(order).first;
  if (name == "gamma") return delta_gamma_series(order).second;
  throw Error(Errc::DomainError, "unknown jet '" + name + "'", name);
}

std::string to_string(const LaurentJet& j) {
  std::string out;
  int lo = j.valuation();
  for (int k = lo; k < j.prec(); ++k) {
    QSqrt3 c = j.coeff(k);
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    if (!c.is_rational() && !c.is_pure_sqrt3()) cs = "(" + cs + ")";
    if (!out.empty()) out += " + ";
    out += cs + "*u^" + std::to_string(k);
  }
  if (!out.empty()) out += " + ";
  out += "O(u^" + std::to_string(j.prec()) + ")";
  return out;
}

}  // namespace projflow
