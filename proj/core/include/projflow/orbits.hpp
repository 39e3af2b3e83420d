#pragma once

#include <optional>
#include <string>

#include "projflow/rational_function.hpp"
#include "projflow/vector_field.hpp"

namespace projflow {

/// First integral x^alpha (x-y)^beta y^gamma = const.
///
/// The exponents are the residue triple (r0, r1, 1 - r0 - r1) of
/// -ϱ(t,1)/(ϖ(t,1) - tϱ(t,1)) at t = 0, 1 scaled by `scaler`, reduced to
/// coprime integers with a positive sum. Since the residues sum to 1 the
/// scaler equals alpha + beta + gamma.
struct OrbitForm {
  long alpha = 0, beta = 0, gamma = 0;
  long level = 0;               // |alpha + beta + gamma|
  long curve_degree = 0;        // degree once negative exponents are cleared
  std::optional<long> genus;    // undefined when level == 0
  Rat scaler;
};

OrbitForm make_orbit_form(long alpha, long beta, long gamma);

/// Exponents for a quadratic field whose yϖ - xϱ is a nonzero multiple of
/// xy(x - y).
OrbitForm orbit_exponents(const VectorField& vf);

/// Genus of z^N = x^a (x-1)^b by Riemann-Hurwitz, N = |a + b + c|.
long genus_cyclic_cover(long alpha, long beta, long gamma);

struct InvarianceResult {
  bool holds = false;
  RationalFunction2 residual;
  explicit operator bool() const { return holds; }
};

/// α ϖ/x + β (ϖ - ϱ)/(x - y) + γ ϱ/y ≡ 0.
InvarianceResult orbit_invariance_check(const VectorField& vf, const OrbitForm& w);
/// ϖ W_x + ϱ W_y ≡ 0.
InvarianceResult orbit_invariance_check(const VectorField& vf, const RationalFunction2& w);
/// Same test for a first integral given only through its gradient.
InvarianceResult orbit_invariance_gradient(const VectorField& vf, const RationalFunction2& wx,
                                           const RationalFunction2& wy);

/// N W ϱ + W_x (yϖ - xϱ); zero iff W is a level-N first integral.
RationalFunction2 orbit_ode_residual(const VectorField& vf, const RationalFunction2& w, int n);

/// "x^a (x-y)^b y^c = const", omitting zero exponents.
std::string orbit_equation(const OrbitForm& w);

}  // namespace projflow
