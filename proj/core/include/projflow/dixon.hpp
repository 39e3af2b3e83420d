#pragma once

#include <optional>
#include <string>
#include <utility>

#include "projflow/jet.hpp"

namespace projflow {

/// Jets are returned known modulo u^{order+1} unless a quotient forces a
/// lower precision, which the jet itself records.
struct JetPair {
  LaurentJet first;
  LaurentJet second;
};

/// sm' = cm², cm' = -sm², sm(0) = 0, cm(0) = 1.
JetPair sm_cm_series(int order);
/// sp = -sm²/cm, cp = cm²/sm.
JetPair sp_cp_series(int order);
/// p' = -p² + pq, q' = -q² + 2pq with p = u^{-1} + …, q = (√3/3) u² + ….
JetPair pq_series(int order);
/// δ = √3/(3pq) - p, γ = -√3/(3pq) - p.
JetPair delta_gamma_series(int order);

/// A jet whose known coefficients all vanish, with the order up to which
/// that was established.
struct IdentityReport {
  bool holds = false;
  int known_through = -1;  // highest exponent checked
  std::optional<int> first_failure;
  explicit operator bool() const { return holds; }
};
IdentityReport vanishes(const LaurentJet& residual);

IdentityReport fermat_identity(int order);       // sm³ + cm³ - 1
IdentityReport sp_cp_identity(int order);        // sp·cp·(sp - cp) - 1
IdentityReport pq_constraint(int order);         // p³q²(3p - 2q) - 1
IdentityReport delta_gamma_cubic(int order);     // δγ(δ - γ) - 4√3/9
IdentityReport odd_function_check(int order);    // even part of 2cp - sp

/// Scaling constants of δ(u) = A sp(Bu), γ(u) = A cp(Bu).
long double scaling_A();
long double scaling_B();

struct ScalingReport {
  bool holds = true;
  long double worst_relative = 0;
  int worst_exponent = 0;
  std::optional<int> first_failure;
  int checked = 0;
  explicit operator bool() const { return holds; }
};
/// Compares [u^k]δ with A B^k [u^k]sp and [u^k]γ with A B^k [u^k]cp in long
/// double for every exponent known on both sides up to `order`.
ScalingReport scaling_identity_check(int order, long double tol = 1e-12L);

struct Pi3Report {
  long double pi3 = 0;
  long double pi3_pow6 = 0;
  long double corrected = 22162.259801148018L;
  long double uncorrected_times_27 = 820.824437079556L * 27;
  bool holds = false;
};
/// π₃ = B(1/3, 1/3) and the corrected value of π₃⁶, to 1e-6 relative.
Pi3Report pi3_check();

/// One of sm, cm, sp, cp, p, q, delta, gamma by name.
LaurentJet dixon_jet(const std::string& name, int order);

/// "c·u^k" terms joined by " + ", exact coefficients.
std::string to_string(const LaurentJet& j);

}  // namespace projflow
