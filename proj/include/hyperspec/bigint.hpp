#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperspec {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline BigInt zero_like(const BigInt&) { return 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline BigInt one_like(const BigInt&) { return 1; }
inline Rational one_like(const Rational&) { return 1; }

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::uint64_t to_u64(const BigInt& a) {
  if (sgn(a) < 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("value does not fit in 64 bits: " + a.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, a.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace hyperspec
