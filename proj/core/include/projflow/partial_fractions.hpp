#pragma once

#include <vector>

#include "projflow/poly1.hpp"
#include "projflow/rational_function.hpp"

namespace projflow {

/// coeff / (t − root)^order
struct LinearTerm {
  Rat root;
  int order;
  Rat coeff;
};

/// numerator / factor^order with deg numerator < deg factor and factor monic,
/// squarefree and free of rational roots.
struct FactorTerm {
  Poly1 factor;
  int order;
  Poly1 numerator;
};

struct PartialFractions {
  Poly1 polynomial;
  std::vector<LinearTerm> linear;
  std::vector<FactorTerm> other;

  bool fully_linear() const { return other.empty(); }
  RationalFunction1 recombine() const;
  long double eval(long double t) const;
};

/// Decomposition of num/den over Q. Denominator factors without rational
/// roots raise IrrationalRoots unless `allow_nonlinear`, in which case they
/// are kept as FactorTerm blocks of the squarefree decomposition.
PartialFractions partial_fractions(const RationalFunction1& r, bool allow_nonlinear = false);

/// a.num·b.den == b.num·a.den
bool same_function(const RationalFunction1& a, const RationalFunction1& b);

}  // namespace projflow
