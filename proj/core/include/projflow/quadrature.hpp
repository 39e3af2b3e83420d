#pragma once

#include <functional>

namespace projflow {

struct QuadratureResult {
  long double value = 0;
  long double error_estimate = 0;
  long nodes_used = 0;
};

/// Adaptive Gauss-Kronrod on a finite interval.
QuadratureResult integrate(const std::function<long double(long double)>& f, long double a, long double b,
                           long double rel_tol = 1e-15L);

QuadratureResult operator+(QuadratureResult a, const QuadratureResult& b);

}  // namespace projflow
