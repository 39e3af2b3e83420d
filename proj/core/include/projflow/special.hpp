#pragma once

#include <string>
#include <vector>

#include "projflow/jet.hpp"
#include "projflow/quadrature.hpp"
#include "projflow/vector_field.hpp"

namespace projflow {

/// Real fifth root.
long double r5(long double t);

/// Y(x) = 2F1(3/5, 1; 6/5; x) for x < 1: power series for |x| <= 1/2,
/// quadrature of ∫_0^1 (1 - x + x s^5)^{-3/5} ds otherwise.
QuadratureResult y_hypergeom(long double x);
QuadratureResult y_hypergeom_series(long double x);
QuadratureResult y_hypergeom_quadrature(long double x);
/// 5x(1-x)Y' + (1-3x)Y - 1 with a central difference for Y'.
long double y_ode_residual(long double x, long double h = 1e-5L);

/// α(x) = (1/5)∫_1^{1/(1-x)} t^{-3/5} (t-1)^{-4/5} dt for x <= 1, with real
/// fifth roots; α maps (-∞, 1] increasingly onto (-α(1), α(1)].
QuadratureResult alpha_integral(long double x);
long double alpha_derivative(long double x);

/// 𝐤 = α^{-1} on the real branch, and 𝐤' = 5 (1 - 𝐤)^{3/5} 𝐤^{4/5}.
long double k_invert(long double t);
long double k_derivative(long double k);

/// 𝐤(α(-1) - 4^{1/5} x) = -1 - Σ a_i x^i.
struct AbelianJet {
  std::string center_tag = "alpha(-1)";
  Rat scale_base{4};
  Rat scale_exponent{1, 5};
  std::vector<Rat> a;  // a[i-1] = a_i

  const Rat& at(int i) const { return a.at(static_cast<std::size_t>(i - 1)); }
  /// L = Σ a_i x^i known modulo x^{n+1}.
  UnivarSeries L(int n) const;
};
AbelianJet k_jet(int order);

struct SeriesComparison {
  bool equal = true;
  int first_mismatch = -1;
  UnivarSeries expected;  // from the vector-field recursion
  UnivarSeries computed;  // from the special-function side
  explicit operator bool() const { return equal; }
};

/// (1 + L)^{4/5} / (1 + L/2)^{2/5} against ϑ(x,-x)/x of 2x²-4xy • -3xy+y²,
/// coefficients 0..order.
SeriesComparison abel_cross_check(const AbelianJet& jet, int order);
SeriesComparison abel_cross_check(int order);

/// m(x) = 𝐥(x e^{1/2}) + 1 from m' = -exp(m²/2), m(0) = 0, known modulo x^{order+1}.
UnivarSeries erf_jet(int order);
/// (m - 1) m', known modulo x^{order+1}.
UnivarSeries g_series_from_erf(int order);
/// (m - 1) m' against G(x,-x)/x of x²+xy+y² • xy+y², coefficients 0..order.
SeriesComparison g_series_identity(const UnivarSeries& m, int order);
SeriesComparison g_series_identity(int order);

/// sqrt|c_k / c_{k+2}| at the highest available k.
long double radius_estimate(const UnivarSeries& s);

/// 𝐥(t) = √2 erf^{-1}(-t √2 / √(πe)) - 1 and its inverse β.
long double l_function(long double t);
long double beta_function(long double t);

struct Type2Result {
  long double u = 0;
  long double v = 0;
  long double w = 0;           // y / u
  bool closed_form = false;    // antiderivative from partial fractions
};

/// Flow of ϖ • 0 at time 1: ∫_{y/u}^{y/x} dt / ϖ(1, t) = y, v = y.
Type2Result type2_flow_eval(const VectorField& vf, long double x, long double y);

}  // namespace projflow
