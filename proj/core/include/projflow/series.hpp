#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "projflow/jet.hpp"
#include "projflow/rational_function.hpp"
#include "projflow/vector_field.hpp"

namespace projflow {

/// Truncated expansion φ(xz, yz)/z = Σ_{i=1..K} z^{i-1} (u_i, v_i).
/// u[i-1] holds u_i. For polynomial fields every entry is a polynomial; for
/// rational fields the denominator divides a power of the field's common
/// denominator.
struct SeriesFlow {
  int order = 0;
  std::vector<RationalFunction2> u;
  std::vector<RationalFunction2> v;
  VectorField field;

  const RationalFunction2& u_at(int i) const { return u.at(static_cast<std::size_t>(i - 1)); }
  const RationalFunction2& v_at(int i) const { return v.at(static_cast<std::size_t>(i - 1)); }

  /// Wrap hand-built coefficient lists; the field is read off order 2.
  static SeriesFlow from_coefficients(std::vector<RationalFunction2> u, std::vector<RationalFunction2> v);
};

inline constexpr std::size_t kDefaultDigitCap = 20000;
inline constexpr int kDefaultSeriesOrder = 12;

SeriesFlow integrate_series(const VectorField& vf, int order = kDefaultSeriesOrder,
                            std::size_t digit_cap = kDefaultDigitCap);

enum class Component { U, V };

/// Restriction to (x, y) = (p t, q t). With `normalize` the result is divided
/// by p t (component u) or q t (component v).
UnivarSeries restrict_to_line(const SeriesFlow& sf, const Rat& p, const Rat& q, Component c, bool normalize);

/// u(pt, qt) / v(pt, qt) as a formal series in t.
UnivarSeries ratio_on_line(const SeriesFlow& sf, const Rat& p, const Rat& q);

VectorField extract_vector_field(const SeriesFlow& sf);

/// Residuals of u_x(ϖ - x) + u_y(ϱ - y) + u = 0, one per homogeneous degree
/// 1..K, for both components.
struct PdeResidual {
  std::vector<RationalFunction2> u;
  std::vector<RationalFunction2> v;
  bool all_zero() const;
  /// Smallest degree with a nonzero residual, or -1.
  int first_nonzero() const;
};
PdeResidual pde_residual_series(const SeriesFlow& sf);

/// φ(x; z+w) = φ(φ(x; z); w) compared coefficientwise in (z, w) through total
/// degree K-1 (the highest degree both sides determine).
struct TranslationReport {
  bool holds = true;
  int first_failure = -1;  // total degree in (z, w)
  explicit operator bool() const { return holds; }
};
TranslationReport translation_check(const SeriesFlow& sf, int order);

/// Coefficients of z^0..z^{K-1} in the expansion of N(z)/D(z), where N and D
/// are polynomials in z with bivariate coefficients (index = power of z) and
/// D(0) is nonzero.
std::vector<RationalFunction2> expand_in_z(const std::vector<RationalFunction2>& num,
                                           const std::vector<RationalFunction2>& den, int terms);

/// Numeric value of the truncated series at (x, y) and time z.
std::pair<long double, long double> eval_series(const SeriesFlow& sf, long double x, long double y, long double z);

}  // namespace projflow
