#pragma once

// Closed-form factored characteristic polynomials.
//
// All-ones hypermatrix J_n^m (q = m - 1): besides the prefactor
// lambda^{(n-1) q^{n-1}}, every endpoint w of an n-step walk with steps the
// q-th roots of unity contributes to the eigenvalue xi = w^q. The multiplicity
// of xi is the total walk count into {w : w^q = xi} divided by q; the
// endpoint 0 supplies an extra (lambda - 0) factor the same way. This is the
// walk-count reading of the product formula and is what the resultant oracle
// confirms.
//
// Sunflower S(n,1,3): lambda^{(2n-2)4^n} prod_{r=0}^n (lambda^3 - r)^{C(n,r) 3^r}.

#include <hyperspec/bigint.hpp>
#include <hyperspec/cyclotomic.hpp>
#include <hyperspec/errors.hpp>
#include <hyperspec/polynomial.hpp>
#include <hyperspec/walks.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hyperspec {

inline constexpr std::uint64_t kDefaultDegreeGuard = 1'000'000;

/// (lambda^d - c)^mult
struct CharFactor {
  unsigned d = 1;
  CycInt c;
  std::uint64_t mult = 0;

  friend bool operator==(const CharFactor&, const CharFactor&) = default;
};

struct FactoredCharPoly {
  std::uint64_t total_degree = 0;
  std::uint64_t lambda_exponent = 0;
  std::vector<CharFactor> factors;

  /// Throws InvariantError unless the degrees add up, multiplicities are
  /// positive and the (d, c) keys are distinct.
  void check() const {
    std::uint64_t deg = lambda_exponent;
    std::set<std::pair<unsigned, CycInt>> keys;
    for (const auto& f : factors) {
      if (f.mult == 0) throw InvariantError("factor with zero multiplicity");
      if (f.d == 0) throw InvariantError("factor with d = 0");
      if (!keys.emplace(f.d, f.c).second) throw InvariantError("repeated factor key");
      deg += static_cast<std::uint64_t>(f.d) * f.mult;
    }
    if (deg != total_degree) {
      throw InvariantError("factor degrees sum to " + std::to_string(deg) + ", expected " +
                           std::to_string(total_degree));
    }
  }

  std::uint64_t multiplicity_sum() const {
    std::uint64_t s = 0;
    for (const auto& f : factors) s += f.mult;
    return s;
  }

  friend bool operator==(const FactoredCharPoly&, const FactoredCharPoly&) = default;
};

namespace detail {

inline std::uint64_t guarded_degree(const BigInt& degree, std::uint64_t guard) {
  if (degree > from_u64(guard)) {
    throw GuardError("characteristic polynomial degree " + degree.get_str() +
                     " exceeds guard " + std::to_string(guard));
  }
  return to_u64(degree);
}

}  // namespace detail

inline FactoredCharPoly all_ones_char_poly(unsigned n, unsigned m,
                                           std::uint64_t guard = kDefaultDegreeGuard) {
  if (n < 1) throw PreconditionError("dimension must be positive");
  if (m < 2) throw PreconditionError("order must be at least 2");
  const unsigned q = m - 1;
  const BigInt per_dim = ipow(BigInt(q), n - 1);

  FactoredCharPoly out;
  out.total_degree = detail::guarded_degree(per_dim * n, guard);
  out.lambda_exponent = to_u64(per_dim * (n - 1));

  const WalkTable walks = walk_counts(n, q);
  std::map<CycInt, BigInt> by_eigenvalue;
  for (const auto& [w, count] : walks.counts) by_eigenvalue[pow(w, q)] += count;

  for (const auto& [xi, count] : by_eigenvalue) {
    if (!mpz_divisible_ui_p(count.get_mpz_t(), q)) {
      throw InvariantError("walk count " + count.get_str() + " into eigenvalue " +
                           xi.to_string() + " is not divisible by " + std::to_string(q));
    }
    const BigInt mult = count / q;
    out.factors.push_back({1, xi, to_u64(mult)});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const CharFactor& a, const CharFactor& b) {
    return a.d != b.d ? a.d < b.d : a.c < b.c;
  });
  out.check();
  return out;
}

/// Distinct eigenvalues of J_n^m. Zero is included whenever it is a root,
/// which is every n >= 2.
inline std::set<CycInt> all_ones_spectrum_set(unsigned n, unsigned m,
                                              std::uint64_t guard = kDefaultDegreeGuard) {
  const auto f = all_ones_char_poly(n, m, guard);
  std::set<CycInt> s;
  for (const auto& fac : f.factors) s.insert(fac.c);
  if (f.lambda_exponent > 0) s.insert(CycInt::zero(m - 1));
  return s;
}

/// The all-zero hypermatrix of order m and dimension dim: lambda^{dim (m-1)^{dim-1}}.
inline FactoredCharPoly zero_char_poly(unsigned dim, unsigned m,
                                       std::uint64_t guard = kDefaultDegreeGuard) {
  if (dim < 1) throw PreconditionError("dimension must be positive");
  if (m < 2) throw PreconditionError("order must be at least 2");
  FactoredCharPoly out;
  out.total_degree = detail::guarded_degree(ipow(BigInt(m - 1), dim - 1) * dim, guard);
  out.lambda_exponent = out.total_degree;
  return out;
}

/// Single-seed, 3-uniform sunflower with n petals. The r = 0 factor is kept
/// as (lambda^3 - 0)^1 rather than folded into the lambda power.
inline FactoredCharPoly sunflower_char_poly(unsigned n, std::uint64_t guard = kDefaultDegreeGuard) {
  if (n < 1) throw PreconditionError("sunflower needs at least one petal");
  const BigInt four_n = ipow(BigInt(4), n);
  FactoredCharPoly out;
  out.total_degree = detail::guarded_degree(four_n * (2 * n + 1), guard);
  out.lambda_exponent = to_u64(four_n * (2 * n - 2));
  for (unsigned r = 0; r <= n; ++r) {
    const BigInt mult = binomial(n, r) * ipow(BigInt(3), r);
    out.factors.push_back({3, CycInt::from_int(1, r), to_u64(mult)});
  }
  out.check();
  return out;
}

/// Multiplies the factored form out over Z[zeta_q] and returns the integer
/// polynomial. Throws InvariantError if any coefficient leaves Z, which means
/// the factor list is not closed under conjugation.
inline IntPoly expand(const FactoredCharPoly& f) {
  unsigned q = 1;
  if (!f.factors.empty()) q = f.factors.front().c.order();
  std::uint64_t shift = f.lambda_exponent;
  CycPoly acc = CycPoly::constant(CycInt::one(q));
  for (const auto& fac : f.factors) {
    if (fac.c.order() != q) throw PreconditionError("factors over different cyclotomic rings");
    if (fac.c.is_zero()) {
      shift += static_cast<std::uint64_t>(fac.d) * fac.mult;
      continue;
    }
    // (lambda^d - c)^mult = sum_k C(mult, k) (-c)^{mult-k} lambda^{d k}
    std::vector<CycInt> coeffs(static_cast<std::size_t>(fac.d) * fac.mult + 1, CycInt::zero(q));
    const CycInt neg = -fac.c;
    CycInt neg_pow = CycInt::one(q);
    for (std::uint64_t j = 0; j <= fac.mult; ++j) {
      // j = mult - k
      const std::uint64_t k = fac.mult - j;
      coeffs[static_cast<std::size_t>(fac.d * k)] = neg_pow * binomial(fac.mult, k);
      if (j < fac.mult) neg_pow = neg_pow * neg;
    }
    acc = acc * CycPoly(std::move(coeffs), CycInt::zero(q));
  }
  IntPoly out = to_integer(acc).shift(static_cast<std::size_t>(shift));
  if (out.degree() != static_cast<long>(f.total_degree) || out.leading() != 1) {
    throw InvariantError("expanded polynomial is not monic of the expected degree");
  }
  return out;
}

struct AllOnesEigenpair {
  CycInt eigenvalue;
  std::vector<CycInt> vector;
};

/// x_i = zeta_q^{pattern[i]}, eigenvalue (sum x_i)^q with q = m - 1.
inline AllOnesEigenpair all_ones_eigenvector(unsigned n, unsigned m,
                                             std::span<const unsigned> pattern) {
  if (m < 2) throw PreconditionError("order must be at least 2");
  if (pattern.size() != n) throw PreconditionError("pattern length must equal the dimension");
  const unsigned q = m - 1;
  AllOnesEigenpair out;
  CycInt sum = CycInt::zero(q);
  for (unsigned j : pattern) {
    if (j >= q) throw PreconditionError("rotation exponent out of range");
    out.vector.push_back(CycInt::zeta(q, j));
    sum += out.vector.back();
  }
  out.eigenvalue = pow(sum, q);
  return out;
}

/// Point of the affine variety of the petal equations
/// x_{i,2} - l x_{i,1}^2 = 0, x_{i,1} - l x_{i,2}^2 = 0 (seed set to 1).
/// choices[i] = 0 gives the zero petal, t >= 1 gives x_{i,1} = zeta_3^{t-1} / l.
/// Output order: x_{1,1}, x_{1,2}, x_{2,1}, x_{2,2}, ...
inline std::vector<std::complex<double>> sunflower_variety_point(
    unsigned n, std::complex<double> lambda, std::span<const unsigned> choices) {
  if (lambda == 0.0) throw PreconditionError("lambda must be nonzero");
  if (choices.size() != n) throw PreconditionError("one choice per petal required");
  const std::complex<double> zeta3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::vector<std::complex<double>> x;
  x.reserve(2 * n);
  for (unsigned c : choices) {
    if (c > 3) throw PreconditionError("petal choice must be in {0,1,2,3}");
    std::complex<double> x1 = 0.0;
    if (c > 0) x1 = std::pow(zeta3, static_cast<int>(c - 1)) / lambda;
    x.push_back(x1);
    x.push_back(lambda * x1 * x1);
  }
  return x;
}

/// max over petals of |x_{i,2} - l x_{i,1}^2| and |x_{i,1} - l x_{i,2}^2|.
inline double sunflower_petal_residual(std::complex<double> lambda,
                                       std::span<const std::complex<double>> x) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    worst = std::max(worst, std::abs(x[i + 1] - lambda * x[i] * x[i]));
    worst = std::max(worst, std::abs(x[i] - lambda * x[i + 1] * x[i + 1]));
  }
  return worst;
}

/// f_0 = l - sum_i x_{i,1} x_{i,2}, the seed equation with x_0 = 1.
inline std::complex<double> sunflower_f0(std::complex<double> lambda,
                                         std::span<const std::complex<double>> x) {
  std::complex<double> v = lambda;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) v -= x[i] * x[i + 1];
  return v;
}

struct PetalFeasibility {
  BigInt solutions_per_petal;
  BigInt required_per_petal;
  bool equal = false;
};

/// k^{k-2} + 1 solutions exist per petal of a single-seed k-uniform
/// sunflower; the product-formula argument needs (k-1)^{k-1}.
inline PetalFeasibility petal_feasibility(unsigned k) {
  if (k < 2) throw PreconditionError("uniformity must be at least 2");
  PetalFeasibility out;
  out.solutions_per_petal = ipow(BigInt(k), k - 2) + 1;
  out.required_per_petal = ipow(BigInt(k - 1), k - 1);
  out.equal = out.solutions_per_petal == out.required_per_petal;
  return out;
}

}  // namespace hyperspec
