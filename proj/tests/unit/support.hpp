#pragma once

#include <random>

#include "projflow/jet.hpp"
#include "projflow/parse.hpp"
#include "projflow/vector_field.hpp"

namespace projflow::testing {

inline RationalFunction2 F(const char* text) { return parse_rational_function(text); }
inline BivarPoly P(const char* text) { return parse_polynomial(text); }

inline VectorField field(const char* pi, const char* rho) { return make_vector_field(F(pi), F(rho)); }

/// Small random rationals p/q with |p| <= span, 1 <= q <= span.
class RatGen {
 public:
  explicit RatGen(unsigned seed, long span = 9) : rng_(seed), num_(-span, span), den_(1, span) {}
  Rat operator()() { return rat(num_(rng_), den_(rng_)); }
  Rat nonzero() {
    Rat r;
    do r = (*this)();
    while (r == 0);
    return r;
  }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};


/// Known coefficients of `s` starting at exponent `lo`, as strings.
inline std::vector<std::string> coeff_strings(const UnivarSeries& s, int lo, int count) {
  std::vector<std::string> out;
  for (int k = lo; k < lo + count; ++k) out.push_back(to_string(s.coeff(k)));
  return out;
}

}  // namespace projflow::testing
