#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projflow/rational_function.hpp"
#include "projflow/vector_field.hpp"

namespace projflow {

using Point = std::pair<long double, long double>;
using PointMap = std::function<Point(long double, long double)>;
using ScalarMap = std::function<long double(long double, long double)>;

struct SamplingBox {
  long double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
};

/// Exact u, v of a flow with a rational closed form.
struct ExactFlow {
  RationalFunction2 u;
  RationalFunction2 v;
};

/// A flow known in closed form. `eval` raises BranchEscape outside the
/// branch described by `branch`.
struct FixtureFlow {
  std::string name;
  std::string formula;
  std::string branch;
  std::optional<VectorField> field;  // absent when the field is not over Q
  PointMap field_eval;                // numeric ϖ, ϱ
  PointMap eval;
  ScalarMap invariant;                // empty when no orbit invariant is attached
  std::string invariant_text;
  SamplingBox box;
  std::function<bool(long double, long double)> excluded;  // points to skip, may be empty
  std::optional<ExactFlow> exact;
  long double pde_tol = 1e-6L;
  long double orbit_tol = 1e-9L;

  bool has_invariant() const { return static_cast<bool>(invariant); }
  bool skips(long double x, long double y) const { return excluded && excluded(x, y); }
};

/// Every registered fixture, in a fixed order.
const std::vector<FixtureFlow>& fixtures();
/// Throws DomainError for an unknown name.
const FixtureFlow& fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// φ_N = x(y+1)^{N-1} • y/(y+1); the registry holds N = 3.
FixtureFlow canonical_fixture(int n);

/// n×n tensor grid over the box with the excluded points removed.
std::vector<Point> grid(const FixtureFlow& f, int n);

}  // namespace projflow
