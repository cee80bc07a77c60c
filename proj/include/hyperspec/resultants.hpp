#pragma once

// Brute-force resultant oracle for eigen-systems.
//
// Both routes sample lambda = start, start+1, ... , build the numeric
// Sylvester or Macaulay matrix with exact rational entries, take exact
// determinants, and interpolate the resultant as a polynomial in lambda.
// Results are normalized monic; the discarded leading coefficient is kept.

#include <hyperspec/bigint.hpp>
#include <hyperspec/determinant.hpp>
#include <hyperspec/errors.hpp>
#include <hyperspec/hypermatrix.hpp>
#include <hyperspec/multivariate.hpp>
#include <hyperspec/polynomial.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

struct ResultantResult {
  RatPoly monic;
  /// Leading coefficient of the raw resultant: raw = leading * monic.
  Rational leading;
  std::size_t samples_used = 0;
  std::size_t samples_skipped = 0;
};

namespace detail {

inline ResultantResult finish_interpolation(std::vector<std::pair<Rational, Rational>> points,
                                            std::size_t skipped) {
  RatPoly raw = interpolate(points);
  if (raw.is_zero()) throw DegenerateResultant("resultant vanishes identically in lambda");
  ResultantResult out;
  out.leading = raw.leading();
  out.monic = make_monic(raw);
  out.samples_used = points.size();
  out.samples_skipped = skipped;
  return out;
}

/// Coefficients of a binary form as a vector: entry i multiplies x0^{d-i} x1^i.
inline std::vector<Rational> binary_coefficients(const std::map<Exponents, Rational>& terms,
                                                 unsigned degree) {
  std::vector<Rational> a(degree + 1);
  for (const auto& [e, c] : terms) a.at(e[1]) = c;
  return a;
}

inline Rational sylvester_determinant(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  const std::size_t d1 = a.size() - 1;
  const std::size_t d2 = b.size() - 1;
  SquareMatrix<Rational> m(d1 + d2);
  for (std::size_t r = 0; r < d2; ++r) {
    for (std::size_t i = 0; i <= d1; ++i) m(r, r + i) = a[i];
  }
  for (std::size_t s = 0; s < d1; ++s) {
    for (std::size_t i = 0; i <= d2; ++i) m(d2 + s, s + i) = b[i];
  }
  return determinant(m);
}

}  // namespace detail

/// Resultant of two binary forms in (x0, x1), as a monic polynomial in lambda.
/// The classical normalization gives Res(x0^a, x1^b) = 1.
inline ResultantResult sylvester_resultant(const HomogPoly& p, const HomogPoly& q,
                                           long start = 0) {
  if (p.num_vars() != 2 || q.num_vars() != 2) {
    throw PreconditionError("Sylvester resultant needs binary forms");
  }
  if (p.poly().is_zero() || q.poly().is_zero()) {
    throw DegenerateResultant("a zero form has zero resultant");
  }
  const unsigned d1 = p.degree();
  const unsigned d2 = q.degree();
  const long bound = static_cast<long>(d2) * p.poly().lambda_degree() +
                     static_cast<long>(d1) * q.poly().lambda_degree();
  std::vector<std::pair<Rational, Rational>> points;
  for (long i = 0; i <= bound; ++i) {
    const Rational t(start + i);
    const auto a = detail::binary_coefficients(p.poly().at_lambda(t), d1);
    const auto b = detail::binary_coefficients(q.poly().at_lambda(t), d2);
    points.emplace_back(t, detail::sylvester_determinant(a, b));
  }
  return detail::finish_interpolation(std::move(points), 0);
}

inline constexpr std::size_t kDefaultMacaulayGuard = 500;

/// All exponent vectors of total degree `degree` in `num_vars` variables,
/// in descending lexicographic order.
inline std::vector<Exponents> monomials_of_degree(unsigned num_vars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents cur(num_vars, 0);
  auto rec = [&](auto&& self, unsigned var, unsigned remaining) -> void {
    if (var + 1 == num_vars) {
      cur[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  if (num_vars == 0) return out;
  rec(rec, 0, degree);
  return out;
}

/// Layout of the Macaulay matrix of a system in degree d = sum(d_i - 1) + 1.
/// Row k belongs to monomial k: it is (x^alpha / x_i^{d_i}) F_i for the
/// smallest i with x_i^{d_i} | x^alpha. The reduced minor keeps the monomials
/// divisible by x_i^{d_i} for at least two i.
class MacaulayLayout {
 public:
  MacaulayLayout(std::span<const HomogPoly> system, std::size_t guard = kDefaultMacaulayGuard) {
    n_ = static_cast<unsigned>(system.size());
    if (n_ < 3) throw PreconditionError("Macaulay resultant needs at least 3 forms");
    for (const auto& f : system) {
      if (f.num_vars() != n_) throw PreconditionError("system must be square");
      if (f.degree() == 0) throw PreconditionError("forms must have positive degree");
      degrees_.push_back(f.degree());
    }
    degree_ = 1;
    for (unsigned d : degrees_) degree_ += d - 1;
    const BigInt count = binomial(degree_ + n_ - 1, n_ - 1);
    if (count > from_u64(guard)) {
      throw GuardError("Macaulay matrix would have " + count.get_str() + " columns (guard " +
                       std::to_string(guard) + ")");
    }
    monomials_ = monomials_of_degree(n_, degree_);
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
      const auto& alpha = monomials_[k];
      unsigned divisible = 0;
      std::optional<unsigned> owner;
      for (unsigned i = 0; i < n_; ++i) {
        if (alpha[i] >= degrees_[i]) {
          ++divisible;
          if (!owner) owner = i;
        }
      }
      if (!owner) throw InvariantError("monomial not covered by any x_i^{d_i}");
      owner_.push_back(*owner);
      if (divisible >= 2) reduced_minor_.push_back(k);
    }
  }

  std::size_t size() const { return monomials_.size(); }
  unsigned degree() const { return degree_; }
  const std::vector<std::size_t>& minor_indices() const { return reduced_minor_; }

  /// Full Macaulay matrix for the system specialized to numeric coefficients.
  SquareMatrix<Rational> build(const std::vector<std::map<Exponents, Rational>>& numeric) const {
    SquareMatrix<Rational> m(size());
    for (std::size_t k = 0; k < size(); ++k) {
      const unsigned i = owner_[k];
      Exponents shift = monomials_[k];
      shift[i] -= degrees_[i];
      for (const auto& [e, c] : numeric[i]) {
        Exponents target = shift;
        for (unsigned v = 0; v < n_; ++v) target[v] += e[v];
        m(k, index_.at(target)) = c;
      }
    }
    return m;
  }

  static SquareMatrix<Rational> submatrix(const SquareMatrix<Rational>& m,
                                          const std::vector<std::size_t>& idx) {
    SquareMatrix<Rational> s(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) s(r, c) = m(idx[r], idx[c]);
    }
    return s;
  }

  /// D/D' for numeric coefficients, or nullopt when D' vanishes.
  std::optional<Rational> quotient(const std::vector<std::map<Exponents, Rational>>& numeric) const {
    const auto m = build(numeric);
    const Rational minor = determinant(submatrix(m, reduced_minor_));
    if (minor == 0) return std::nullopt;
    return determinant(m) / minor;
  }

 private:
  unsigned n_ = 0;
  unsigned degree_ = 0;
  std::vector<unsigned> degrees_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
  std::vector<unsigned> owner_;
  std::vector<std::size_t> reduced_minor_;
};

inline std::vector<std::map<Exponents, Rational>> specialize(std::span<const HomogPoly> system,
                                                              const Rational& t) {
  std::vector<std::map<Exponents, Rational>> out;
  out.reserve(system.size());
  for (const auto& f : system) out.push_back(f.poly().at_lambda(t));
  return out;
}

/// Upper bound on the lambda-degree of Res: sum_i e_i prod_{j != i} d_j.
inline BigInt resultant_degree_bound(std::span<const HomogPoly> system) {
  BigInt bound = 0;
  for (std::size_t i = 0; i < system.size(); ++i) {
    BigInt term = std::max<long>(system[i].poly().lambda_degree(), 0);
    for (std::size_t j = 0; j < system.size(); ++j) {
      if (j != i) term *= system[j].degree();
    }
    bound += term;
  }
  return bound;
}

/// Single-point Macaulay quotient D(t)/D'(t); nullopt when D'(t) = 0.
inline std::optional<Rational> macaulay_quotient_at(std::span<const HomogPoly> system,
                                                    const Rational& t,
                                                    std::size_t guard = kDefaultMacaulayGuard) {
  const MacaulayLayout layout(system, guard);
  return layout.quotient(specialize(system, t));
}

/// The resultant of the top-lambda parts of the forms, i.e. the leading
/// coefficient the full resultant has when it attains the degree bound.
/// nullopt when the reduced minor of that system vanishes.
inline std::optional<Rational> macaulay_leading_constant(std::span<const HomogPoly> system,
                                                         std::size_t guard = kDefaultMacaulayGuard) {
  const MacaulayLayout layout(system, guard);
  std::vector<std::map<Exponents, Rational>> top;
  for (const auto& f : system) {
    const long e = std::max<long>(f.poly().lambda_degree(), 0);
    top.push_back(f.poly().lambda_coefficient(static_cast<std::size_t>(e)));
  }
  return layout.quotient(top);
}

inline ResultantResult macaulay_resultant(std::span<const HomogPoly> system, long start = 0,
                                          std::size_t guard = kDefaultMacaulayGuard) {
  const MacaulayLayout layout(system, guard);
  const std::size_t needed = to_u64(resultant_degree_bound(system)) + 1;
  const std::size_t max_attempts = 4 * needed + 32;
  std::vector<std::pair<Rational, Rational>> points;
  std::size_t skipped = 0;
  for (std::size_t i = 0; points.size() < needed; ++i) {
    if (i >= max_attempts) {
      throw DegenerateResultant("reduced Macaulay minor vanished at too many sample points");
    }
    const Rational t(start + static_cast<long>(i));
    auto value = layout.quotient(specialize(system, t));
    if (!value) {
      ++skipped;
      continue;
    }
    points.emplace_back(t, *value);
  }
  return detail::finish_interpolation(std::move(points), skipped);
}

/// Characteristic polynomial of a hypermatrix by brute force: resultant of
/// its eigen-system, via Sylvester (2 variables) or Macaulay (3 or more).
inline ResultantResult characteristic_polynomial_oracle(const std::vector<HomogPoly>& system,
                                                        std::size_t guard = kDefaultMacaulayGuard) {
  if (system.empty()) throw PreconditionError("empty system");
  if (system.size() == 1) {
    // One form c(lambda) x^d in one variable: its resultant is c(lambda).
    const auto& terms = system[0].terms();
    if (terms.empty()) throw DegenerateResultant("zero form");
    RatPoly c = terms.begin()->second;
    ResultantResult out;
    out.leading = c.leading();
    out.monic = make_monic(c);
    out.samples_used = 0;
    return out;
  }
  if (system.size() == 2) return sylvester_resultant(system[0], system[1]);
  return macaulay_resultant(system, 0, guard);
}

inline ResultantResult characteristic_polynomial_oracle(const Hypermatrix& a,
                                                        std::size_t guard = kDefaultMacaulayGuard) {
  return characteristic_polynomial_oracle(eigen_system(a), guard);
}

// ---------------------------------------------------------------------------
// Numeric check of the product formula for binary forms.

/// A binary form with double coefficients; coeffs[i] multiplies x0^{d-i} x1^i.
struct BinaryForm {
  std::vector<double> coeffs;
  unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
};

inline double sylvester_determinant_numeric(const BinaryForm& p, const BinaryForm& q) {
  const std::size_t d1 = p.degree();
  const std::size_t d2 = q.degree();
  const auto n = static_cast<Eigen::Index>(d1 + d2);
  if (n == 0) return 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < d2; ++r) {
    for (std::size_t i = 0; i <= d1; ++i) m(r, r + i) = p.coeffs[i];
  }
  for (std::size_t s = 0; s < d1; ++s) {
    for (std::size_t i = 0; i <= d2; ++i) m(d2 + s, s + i) = q.coeffs[i];
  }
  return m.partialPivLu().determinant();
}

/// Roots of sum_i c[i] x^i (c.back() != 0) as companion-matrix eigenvalues,
/// polished with up to two Newton steps that reduce |p|.
inline std::vector<std::complex<double>> polynomial_roots(std::span<const double> c) {
  const std::size_t d = c.size() - 1;
  if (d == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  std::vector<std::complex<double>> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    for (int it = 0; it < 2; ++it) {
      std::complex<double> f = c[d], df = 0.0;
      for (std::size_t k = d; k-- > 0;) {
        df = df * z + f;
        f = f * z + c[k];
      }
      if (std::abs(df) == 0.0) break;
      // near a multiple root f and df are rounding noise; keep z unless the step helps
      const std::complex<double> next = z - f / df;
      std::complex<double> g = c[d];
      for (std::size_t k = d; k-- > 0;) g = g * next + c[k];
      if (std::abs(g) >= std::abs(f)) break;
      z = next;
    }
    roots.push_back(z);
  }
  return roots;
}

/// Relative discrepancy between Res(F0, F1), computed directly, and
/// Res(Fbar1)^{d0} prod_{p in V(f1)} f0(p). Throws PreconditionError if
/// Fbar1 = 0 (leading x1 coefficient of F1 vanishes) and RepeatedRoots if two
/// points of V are closer than 1e-6.
inline double poisson_check_binary(const BinaryForm& f0, const BinaryForm& f1) {
  const unsigned d0 = f0.degree();
  const unsigned d1 = f1.degree();
  const double lead = f1.coeffs[d1];
  if (lead == 0.0) throw PreconditionError("Res(Fbar1) vanishes: x1^d coefficient is zero");
  const auto roots = polynomial_roots(f1.coeffs);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) < 1e-6) throw RepeatedRoots("f1 has a repeated root");
    }
  }
  std::complex<double> rhs = std::pow(lead, static_cast<int>(d0));
  for (const auto& z : roots) {
    std::complex<double> val = 0.0;
    for (std::size_t k = f0.coeffs.size(); k-- > 0;) val = val * z + f0.coeffs[k];
    rhs *= val;
  }
  const double lhs = sylvester_determinant_numeric(f0, f1);
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1.0);
}

/// Uniform integer in [lo, hi] from a 64-bit Mersenne Twister, reproducible
/// across standard libraries.
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

inline BinaryForm random_binary_form(std::mt19937_64& rng, unsigned degree, long lo, long hi) {
  BinaryForm f;
  for (unsigned i = 0; i <= degree; ++i) f.coeffs.push_back(static_cast<double>(uniform_int(rng, lo, hi)));
  return f;
}

struct PoissonReport {
  std::size_t trials = 0;
  std::size_t rejected = 0;
  double max_relative_error = 0.0;
};

/// Seeded random degree-(d0, d1) instances with coefficients in [-5, 5];
/// degenerate draws are discarded and redrawn.
inline PoissonReport poisson_trials(std::size_t trials, std::uint64_t seed, unsigned d0 = 2,
                                    unsigned d1 = 3) {
  std::mt19937_64 rng(seed);
  PoissonReport report;
  while (report.trials < trials) {
    const auto f0 = random_binary_form(rng, d0, -5, 5);
    const auto f1 = random_binary_form(rng, d1, -5, 5);
    try {
      const double err = poisson_check_binary(f0, f1);
      report.max_relative_error = std::max(report.max_relative_error, err);
      ++report.trials;
    } catch (const PreconditionError&) {
      ++report.rejected;
    } catch (const RepeatedRoots&) {
      ++report.rejected;
    }
  }
  return report;
}

}  // namespace hyperspec
