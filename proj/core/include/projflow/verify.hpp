#pragma once

#include <string>
#include <vector>

#include "projflow/fixtures.hpp"
#include "projflow/rational.hpp"

namespace projflow {

/// Max over points and both components of |u_x(ϖ-x) + u_y(ϱ-y) + u| with
/// central differences of step h. Throws EvaluationFailure naming the point
/// when the residual is not finite.
long double fixture_pde_residual(const FixtureFlow& f, const std::vector<Point>& points, long double h = 1e-5L);

inline const std::vector<long double> kOrbitZ{-0.2L, -0.1L, -0.05L, 0.05L, 0.1L, 0.2L};

/// Max relative change of the invariant between (x, y) and φ(xz, yz)/z.
/// Requires an invariant; lets BranchEscape from the evaluator through.
long double fixture_orbit_conservation(const FixtureFlow& f, const std::vector<Point>& points,
                                       const std::vector<long double>& z_values = kOrbitZ);

struct SeriesMatch {
  bool exact = false;       // rational coefficients were compared
  bool equal = true;        // exact comparison outcome
  int first_mismatch = -1;  // series index i of u_i or v_i
  long double max_deviation = 0;  // numeric comparison, relative per coefficient
};

/// Exact expansion of φ(xz, yz)/z against integrate_series, terms 1..order.
SeriesMatch fixture_exact_series(const FixtureFlow& f, int order);

/// Taylor coefficients of t ↦ φ(pt, qt), read off a Chebyshev fit of the
/// evaluator on [-radius, radius], against the series restricted to the same
/// line; coefficients of t^1..t^order, both components.
SeriesMatch fixture_vs_series(const FixtureFlow& f, const Rat& p, const Rat& q, int order,
                              long double radius = 0.05L);

/// Taylor coefficients c_0..c_{n-1} of g near 0 from a Chebyshev fit.
std::vector<long double> taylor_fit(const std::function<long double(long double)>& g, int n, long double radius,
                                    int nodes = 24);

/// (ϖ, ϱ)(x, y) as the t² coefficient of φ(xt, yt).
Point extract_field_numeric(const FixtureFlow& f, long double x, long double y, long double radius = 0.05L);

/// φ(xz, yz)/z at z0, z0/2, z0/4 and two Richardson steps towards z = 0.
struct BoundaryReport {
  std::vector<long double> deviations;  // |φ(xz, yz)/z - (x, y)| per z
  long double extrapolated = 0;         // deviation of the extrapolated limit
  bool holds = false;
};
BoundaryReport boundary_limit_check(const FixtureFlow& f, long double x, long double y, long double z0 = 1e-2L,
                                    long double tol = 1e-8L);

/// Restrictions of the (B, C) quadratic field to the three invariant lines
/// against x/(1+(B-1)x) on y = 0, y/(1-y) on x = 0 and
/// t/(1-((BC-1)/(C-1))t) on x = y, exact through t^order.
struct LineReport {
  bool x_axis = false, y_axis = false, diagonal = false;
  explicit operator bool() const { return x_axis && y_axis && diagonal; }
};
LineReport prop_sing_lines(const Rat& B, const Rat& C, int order);

/// One row of a verification report.
struct CheckReport {
  std::string fixture;
  std::string check;
  long double max_residual = 0;
  long double tolerance = 0;
  bool pass = false;
  std::string note;  // error text when the check threw
};

/// PDE residual on the 5×5 grid, orbit conservation when an invariant is
/// attached, and the exact series match for rational fixtures.
std::vector<CheckReport> run_fixture_checks(const FixtureFlow& f);

}  // namespace projflow
