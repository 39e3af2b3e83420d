#pragma once

#include <utility>

#include "projflow/jet.hpp"
#include "projflow/poly1.hpp"
#include "projflow/vector_field.hpp"

namespace projflow {

/// (a)_i = a (a+1) ... (a+i-1).
Rat pochhammer(const Rat& a, int i);

/// P_{n,Q}(x) = 2F1(-n, 1; 1 + 1/Q; x), a polynomial of degree n.
RationalPolynomial p_nQ(long n, const Rat& Q);

/// Q x (1 - x) P' + (Q n x + 1) P - 1.
RationalPolynomial verify_sch_ode(const RationalPolynomial& p, long n, const Rat& Q);

/// Power-series solution of f ϱ(x,1) + f' (x ϱ(x,1) - ϖ(x,1)) = sign, known
/// modulo x^order. Needs ϖ(0,1) = 0 so that the recursion is triangular.
UnivarSeries solve_normalizing_series(const VectorField& vf, int sign, int order);

/// The quadratic field of type (n, Q): Q(n+1)x² + (1-Q)xy • Qnxy + y².
VectorField type_field(long n, const Rat& Q);

struct AlgebraicPoint {
  long double u = 0, v = 0;
  long double orbit_residual = 0;  // log form, relative
  long double time_residual = 0;   // relative to the scale of 1/y P(x/y)
  int steps = 0;                   // continuation steps taken
};

/// Time-z value of the type-(n, Q) flow, from the orbit equation and
/// (1/v) P(u/v) = (1/y) P(x/y) - z, continued in z from the identity.
AlgebraicPoint algebraic_flow_eval(long n, const Rat& Q, long double x, long double y, long double z);

}  // namespace projflow
