#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permorb {

// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large: " + r.get_str());
  return r.get_num().get_si();
}

inline BigInt floor(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline BigInt ceil(const Rat& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Rat pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rat(1) / base, -e);
  }
  Rat result(1), b(base);
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// Generalized binomial coefficient top*(top-1)*...*(top-n+1)/n!.
inline Rat binom(const Rat& top, long n) {
  if (n < 0) return 0;
  Rat r(1);
  for (long i = 0; i < n; ++i) r = r * (top - i) / (i + 1);
  return r;
}

inline Rat factorial(long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q".
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("not a rational number: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace permorb
