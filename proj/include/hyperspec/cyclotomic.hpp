#pragma once

// Exact arithmetic in Z[zeta_q], zeta_q a primitive q-th root of unity.
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{phi(q)-1}
// modulo the q-th cyclotomic polynomial, so equality of representations is
// equality of ring elements.

#include <hyperspec/bigint.hpp>
#include <hyperspec/errors.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

namespace detail {

inline std::vector<BigInt> poly_exact_div_monic(std::vector<BigInt> num,
                                                const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const BigInt c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw InvariantError("cyclotomic division left a remainder");
  }
  return quot;
}

inline std::vector<BigInt> compute_cyclotomic(unsigned q,
                                              std::map<unsigned, std::vector<BigInt>>& cache);

inline const std::vector<BigInt>& cyclotomic_locked(
    unsigned q, std::map<unsigned, std::vector<BigInt>>& cache) {
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto poly = compute_cyclotomic(q, cache);
  return cache.emplace(q, std::move(poly)).first->second;
}

// Phi_q = (x^q - 1) / prod_{d | q, d < q} Phi_d
inline std::vector<BigInt> compute_cyclotomic(unsigned q,
                                              std::map<unsigned, std::vector<BigInt>>& cache) {
  std::vector<BigInt> num(q + 1);
  num[0] = -1;
  num[q] = 1;
  for (unsigned d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    num = poly_exact_div_monic(std::move(num), cyclotomic_locked(d, cache));
  }
  return num;
}

}  // namespace detail

/// Coefficients of the q-th cyclotomic polynomial, lowest degree first.
/// Computed once per q and cached for the life of the process.
inline const std::vector<BigInt>& cyclotomic_polynomial(unsigned q) {
  if (q == 0) throw PreconditionError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<BigInt>> cache;
  std::lock_guard lock(mutex);
  return detail::cyclotomic_locked(q, cache);
}

inline unsigned euler_totient(unsigned q) {
  return static_cast<unsigned>(cyclotomic_polynomial(q).size() - 1);
}

class CycInt {
 public:
  /// Zero of Z (q = 1).
  CycInt() : q_(1), coeffs_(1) {}

  static CycInt zero(unsigned q) { return CycInt(q, std::vector<BigInt>(euler_totient(q))); }

  static CycInt from_int(unsigned q, const BigInt& value) {
    CycInt r = zero(q);
    r.coeffs_[0] = value;
    return r;
  }

  static CycInt one(unsigned q) { return from_int(q, 1); }

  /// zeta_q^j
  static CycInt zeta(unsigned q, unsigned long j) {
    std::vector<BigInt> powers(q);
    powers[j % q] = 1;
    return reduce(powers, q);
  }

  /// Canonical form of sum_j powers[j] zeta^j. The vector must have length q.
  static CycInt reduce(std::span<const BigInt> powers, unsigned q) {
    if (q == 0) throw PreconditionError("cyclotomic order must be positive");
    if (powers.size() != q) {
      throw PreconditionError("reduce expects exactly q power coefficients");
    }
    return reduce_any(std::vector<BigInt>(powers.begin(), powers.end()), q);
  }

  static CycInt reduce(std::initializer_list<long> powers, unsigned q) {
    std::vector<BigInt> v;
    for (long p : powers) v.emplace_back(p);
    return reduce(v, q);
  }

  /// Reduces a power-basis vector of any length modulo Phi_q.
  static CycInt reduce_any(std::vector<BigInt> powers, unsigned q) {
    const auto& phi = cyclotomic_polynomial(q);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = powers.size(); k-- > deg;) {
      if (powers[k] == 0) continue;
      const BigInt c = powers[k];
      for (std::size_t i = 0; i <= deg; ++i) powers[k - deg + i] -= c * phi[i];
    }
    powers.resize(deg);
    return CycInt(q, std::move(powers));
  }

  unsigned order() const { return q_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return false;
    }
    return true;
  }

  /// The rational-integer component (coefficient of 1).
  const BigInt& integer_part() const { return coeffs_[0]; }

  CycInt operator-() const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  CycInt& operator+=(const CycInt& b) {
    check_same(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }

  CycInt& operator-=(const CycInt& b) {
    check_same(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
  }

  CycInt& operator*=(const CycInt& b) {
    *this = *this * b;
    return *this;
  }

  CycInt& operator*=(const BigInt& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const BigInt& s) { return a *= s; }
  friend CycInt operator*(const BigInt& s, CycInt a) { return a *= s; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same(b);
    const std::size_t n = a.coeffs_.size();
    if (n == 1) return CycInt(a.q_, {BigInt(a.coeffs_[0] * b.coeffs_[0])});
    std::vector<BigInt> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.coeffs_[j] == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    return reduce_any(std::move(prod), a.q_);
  }

  /// Entrywise lexicographic order on coefficient vectors, index 0 first.
  friend bool operator<(const CycInt& a, const CycInt& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      const BigInt& c = coeffs_[i];
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      const BigInt mag = abs(c);
      if (i == 0) os << mag;
      else {
        if (mag != 1) os << mag << "*";
        os << "z" << q_;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  CycInt(unsigned q, std::vector<BigInt> coeffs) : q_(q), coeffs_(std::move(coeffs)) {}

  void check_same(const CycInt& b) const {
    if (q_ != b.q_) {
      throw PreconditionError("cyclotomic order mismatch: " + std::to_string(q_) + " vs " +
                              std::to_string(b.q_));
    }
  }

  unsigned q_;
  std::vector<BigInt> coeffs_;
};

inline bool is_zero(const CycInt& a) { return a.is_zero(); }
inline CycInt zero_like(const CycInt& a) { return CycInt::zero(a.order()); }
inline CycInt one_like(const CycInt& a) { return CycInt::one(a.order()); }

inline CycInt pow(CycInt base, unsigned long e) {
  CycInt acc = CycInt::one(base.order());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

/// zeta^j * a
inline CycInt rotate(const CycInt& a, unsigned long j) {
  const unsigned q = a.order();
  j %= q;
  if (j == 0) return a;
  std::vector<BigInt> powers(a.coeffs().size() + j);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) powers[i + j] = a.coeffs()[i];
  return CycInt::reduce_any(std::move(powers), q);
}

/// Complex conjugate: zeta -> zeta^{-1}.
inline CycInt conj(const CycInt& a) {
  const unsigned q = a.order();
  std::vector<BigInt> powers(q);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) powers[(q - i) % q] += a.coeffs()[i];
  return CycInt::reduce_any(std::move(powers), q);
}

/// Embeds a into Z[zeta_L] via zeta_q = zeta_L^{L/q}. Requires q | L.
inline CycInt lift(const CycInt& a, unsigned target) {
  const unsigned q = a.order();
  if (target == 0 || target % q != 0) {
    throw PreconditionError("lift target must be a multiple of the source order");
  }
  const unsigned step = target / q;
  std::vector<BigInt> powers(target);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) powers[i * step] = a.coeffs()[i];
  return CycInt::reduce_any(std::move(powers), target);
}

struct OrbitRep {
  CycInt rep;
  unsigned size;
};

/// Smallest element of {zeta^j a : 0 <= j < q} in CycInt ordering.
/// The orbit is free (size q) unless a is zero.
inline OrbitRep orbit_canonical(const CycInt& a) {
  if (a.is_zero()) return {a, 1};
  CycInt best = a;
  CycInt cur = a;
  for (unsigned j = 1; j < a.order(); ++j) {
    cur = rotate(cur, 1);
    if (cur < best) best = cur;
  }
  return {best, a.order()};
}

/// Floating-point value sum_j c_j exp(2 pi i j / q).
/// Absolute error is at most about 8 ulp times sum_j |c_j|.
inline std::complex<double> embed(const CycInt& a) {
  const unsigned q = a.order();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    if (a.coeffs()[j] == 0) continue;
    const double c = a.coeffs()[j].get_d();
    if (j == 0) {
      acc += c;
      continue;
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / q;
    acc += std::complex<double>(c * std::cos(theta), c * std::sin(theta));
  }
  return acc;
}

}  // namespace hyperspec
