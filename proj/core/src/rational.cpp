#include "projflow/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "projflow/errors.hpp"

namespace projflow {

Rat rat(long num, long den) {
  if (den == 0) raise(Errc::ZeroDenominator, "rat(" + std::to_string(num) + ", 0)");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) raise(Errc::ParseError, "empty rational");
  if (!s.empty() && s.front() == '+') s.erase(s.begin());

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    Int num;
    if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) {
      raise(Errc::ParseError, "bad decimal '" + s + "'");
    }
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  Rat r;
  if (r.set_str(s, 10) != 0) raise(Errc::ParseError, "bad rational '" + s + "'");
  if (r.get_den() == 0) raise(Errc::ZeroDenominator, "'" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) raise(Errc::ZeroDenominator, "0 to a negative power");
    Rat inv = 1 / base;
    return pow(inv, -exponent);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

int sign(const Rat& r) { return sgn(r); }

long double to_long_double(const Int& z) {
  std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  Int a = ::abs(z);
  long double out;
  if (bits <= 64) {
    Int hi = a >> 32;
    Int lo = a - (hi << 32);
    out = std::ldexp(static_cast<long double>(hi.get_ui()), 32) + static_cast<long double>(lo.get_ui());
  } else {
    std::size_t shift = bits - 64;
    Int top = a >> static_cast<mp_bitcnt_t>(shift);
    Int hi = top >> 32;
    Int lo = top - (hi << 32);
    long double m = std::ldexp(static_cast<long double>(hi.get_ui()), 32) + static_cast<long double>(lo.get_ui());
    out = std::ldexp(m, static_cast<int>(shift));
  }
  return z < 0 ? -out : out;
}

long double to_long_double(const Rat& r) {
  std::size_t nb = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
  std::size_t db = mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
  std::size_t sn = nb > 128 ? nb - 128 : 0;
  std::size_t sd = db > 128 ? db - 128 : 0;
  Int num = r.get_num() >> static_cast<mp_bitcnt_t>(sn);
  Int den = r.get_den() >> static_cast<mp_bitcnt_t>(sd);
  return std::ldexp(to_long_double(num) / to_long_double(den),
                    static_cast<int>(static_cast<long>(sn) - static_cast<long>(sd)));
}

std::size_t digit_count(const Rat& r) {
  return std::max(mpz_sizeinbase(r.get_num().get_mpz_t(), 10),
                  mpz_sizeinbase(r.get_den().get_mpz_t(), 10));
}

}  // namespace projflow
