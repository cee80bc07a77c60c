#pragma once

// Exact determinants by fraction-free (Bareiss) elimination.

#include <hyperspec/bigint.hpp>
#include <hyperspec/errors.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace hyperspec {

template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

/// Bareiss elimination; every intermediate division is exact. Consumes m.
inline BigInt determinant(SquareMatrix<BigInt> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    const BigInt& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool row_zero = m(i, k) == 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        // m(i,j) = (m(i,j)*pivot - m(i,k)*m(k,j)) / prev
        BigInt& x = m(i, j);
        x *= pivot;
        if (!row_zero) mpz_submul(x.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  BigInt d = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

/// Clears each row's denominators, then runs Bareiss over Z.
inline Rational determinant(const SquareMatrix<Rational>& m) {
  const std::size_t n = m.size();
  SquareMatrix<BigInt> z(n);
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt den = 1;
    for (std::size_t c = 0; c < n; ++c) den = lcm(den, m(r, c).get_den());
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = m(r, c);
      z(r, c) = v.get_num() * (den / v.get_den());
    }
    scale *= den;
  }
  return make_rational(determinant(std::move(z)), scale);
}

}  // namespace hyperspec
