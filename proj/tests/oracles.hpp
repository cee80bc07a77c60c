#pragma once

// Slow, independent reference computations used only by the tests. None of
// these share code paths with the library routines they check.

#include <hyperspec/hyperspec.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using namespace hyperspec;

/// Every one of the q^n step sequences, tallied by endpoint.
inline std::map<CycInt, BigInt> brute_walks(unsigned n, unsigned q) {
  std::map<CycInt, BigInt> out;
  std::vector<unsigned> seq(n, 0);
  while (true) {
    std::vector<BigInt> powers(q, 0);
    for (unsigned s : seq) powers[s] += 1;
    out[CycInt::reduce(powers, q)] += 1;
    std::size_t i = 0;
    while (i < n && ++seq[i] == q) seq[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// lambda^a prod (lambda^d - c)^mult with integer c, by repeated multiplication.
inline IntPoly multiply_out(std::uint64_t a, const std::vector<CharFactor>& factors) {
  IntPoly acc = IntPoly::monomial(BigInt(1), a);
  for (const auto& f : factors) {
    IntPoly base = IntPoly::monomial(BigInt(1), f.d) - IntPoly::constant(f.c.integer_part());
    for (std::uint64_t k = 0; k < f.mult; ++k) acc = acc * base;
  }
  return acc;
}

inline std::complex<double> zeta(unsigned q, unsigned long j) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j % q) / q);
}

/// Numeric value of sum_j powers[j] zeta_q^j.
inline std::complex<double> numeric_value(const std::vector<long>& powers, unsigned q) {
  std::complex<double> z = 0.0;
  for (std::size_t j = 0; j < powers.size(); ++j) z += static_cast<double>(powers[j]) * zeta(q, j);
  return z;
}

inline CycInt random_cyc(std::mt19937_64& rng, unsigned q, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<BigInt> v(q);
  for (auto& c : v) c = dist(rng);
  return CycInt::reduce(v, q);
}

inline Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return make_rational(num(rng), den(rng));
}

/// Evaluates an integer polynomial at a complex point.
inline std::complex<double> eval(const IntPoly& p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].get_d();
  return acc;
}

}  // namespace oracle
