#include "projflow/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<long double, 31>;

// Boost's adaptive driver compares the error of a subinterval before
// rescaling it, so short intervals never meet a relative tolerance. The
// bisection is done here with the 31-point rule applied on [-1, 1].
QuadratureResult adaptive(const std::function<long double(long double)>& f, long double a, long double b,
                          long double abs_tol, long double rel_tol, unsigned depth, long& count) {
  const long double mid = (a + b) / 2, half = (b - a) / 2;
  long double err = 0, l1 = 0;
  long double r = GK::integrate(
      [&](long double s) {
        ++count;
        return f(mid + half * s);
      },
      -1.0L, 1.0L, 0, 0.0L, &err, &l1);
  QuadratureResult out{half * r, std::fabs(half) * err, 0};
  long double tol = std::max(abs_tol, rel_tol * std::fabs(out.value));
  if (depth == 0 || out.error_estimate <= tol) return out;
  return adaptive(f, a, mid, tol / 2, rel_tol, depth - 1, count) +
         adaptive(f, mid, b, tol / 2, rel_tol, depth - 1, count);
}

}  // namespace

QuadratureResult integrate(const std::function<long double(long double)>& f, long double a, long double b,
                           long double rel_tol) {
  QuadratureResult r;
  if (a == b) return r;
  long count = 0;
  r = adaptive(f, a, b, 0.0L, rel_tol, 15, count);
  if (!std::isfinite(r.value)) raise(Errc::EvaluationFailure, "quadrature produced a non-finite value");
  r.nodes_used = count;
  return r;
}

QuadratureResult operator+(QuadratureResult a, const QuadratureResult& b) {
  a.value += b.value;
  a.error_estimate += b.error_estimate;
  a.nodes_used += b.nodes_used;
  return a;
}

}  // namespace projflow
