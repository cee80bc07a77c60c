#pragma once

// Dense univariate polynomials over exact coefficient rings (BigInt,
// Rational, CycInt). Index i of the coefficient vector holds the degree-i
// coefficient; the vector is trimmed so that the leading entry is nonzero.

#include <hyperspec/bigint.hpp>
#include <hyperspec/cyclotomic.hpp>
#include <hyperspec/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() : zero_(R{}) {}

  /// For cyclotomic polynomials pass a zero of the right order as `zero`,
  /// otherwise the zero polynomial carries the wrong domain tag.
  explicit Poly(std::vector<R> coeffs, R zero = R{}) : coeffs_(std::move(coeffs)), zero_(std::move(zero)) {
    if (!coeffs_.empty()) zero_ = zero_like(coeffs_.front());
    trim();
  }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}, zero_like(c)); }

  /// c * x^k
  static Poly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, zero_like(c));
    v[k] = c;
    return Poly(std::move(v), zero_like(c));
  }

  /// x - c
  static Poly linear_root(const R& c) {
    return Poly(std::vector<R>{-c, one_like(c)}, zero_like(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& zero() const { return zero_; }

  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
  const R& leading() const {
    if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& b) {
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& b) {
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly({}, a.zero_);
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (hyperspec::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (hyperspec::is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out), a.zero_);
  }

  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Multiplies every coefficient by s.
  Poly scale(const R& s) const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
  }

  /// x^k * p
  Poly shift(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<R> v(k, zero_);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v), zero_);
  }

  /// Horner evaluation.
  R operator()(const R& x) const {
    R acc = zero_;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (hyperspec::is_zero(coeffs_[i])) continue;
      if (!first) os << " + ";
      os << "(" << coeff_string(coeffs_[i]) << ")";
      if (i > 0) os << "*" << var;
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  static std::string coeff_string(const BigInt& c) { return c.get_str(); }
  static std::string coeff_string(const Rational& c) { return c.get_str(); }
  static std::string coeff_string(const CycInt& c) { return c.to_string(); }

  void trim() {
    while (!coeffs_.empty() && hyperspec::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  R zero_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;
using CycPoly = Poly<CycInt>;

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned long e) {
  Poly<R> acc = Poly<R>::constant(one_like(base.zero()));
  Poly<R> b = base;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return acc;
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(v));
}

/// Converts a polynomial with integral rational coefficients; throws
/// InvariantError if any coefficient has a nontrivial denominator.
inline IntPoly to_integer(const RatPoly& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw InvariantError("non-integral coefficient " + c.get_str());
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

inline CycPoly to_cyclotomic(const IntPoly& p, unsigned q) {
  std::vector<CycInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(CycInt::from_int(q, c));
  return CycPoly(std::move(v), CycInt::zero(q));
}

/// Requires every coefficient to lie in Z; throws InvariantError otherwise.
inline IntPoly to_integer(const CycPoly& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const CycInt& c = p.coeffs()[i];
    if (!c.is_rational()) {
      throw InvariantError("coefficient of degree " + std::to_string(i) +
                           " is not a rational integer: " + c.to_string());
    }
    v.push_back(c.integer_part());
  }
  return IntPoly(std::move(v));
}

/// Divides through by the leading coefficient. Zero stays zero.
inline RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p.scale(Rational(1) / p.leading());
}

/// Lagrange interpolation through points with distinct abscissae, via Newton
/// divided differences. The result has degree at most points.size() - 1.
inline RatPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
  const std::size_t n = points.size();
  if (n == 0) return RatPoly();
  {
    std::set<Rational> xs;
    for (const auto& [x, y] : points) {
      if (!xs.insert(x).second) throw PreconditionError("duplicate abscissa " + x.get_str());
    }
  }
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
      if (i == level) break;
    }
  }
  // Horner on the Newton form: p = dd[n-1]; p = p*(x - x_i) + dd[i].
  RatPoly p = RatPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * RatPoly::linear_root(points[i].first) + RatPoly::constant(dd[i]);
  }
  return p;
}

inline RatPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  return interpolate(std::span<const std::pair<Rational, Rational>>(points));
}

/// prod_{j=0}^{r-1} p(zeta_r^j x), computed by direct substitution over
/// Z[zeta_r]. p may be over cyclotomic(q) with q dividing r.
inline CycPoly rou_product_transform(const CycPoly& p, unsigned r) {
  if (r == 0) throw PreconditionError("transform order must be positive");
  const unsigned q = p.zero().order();
  if (r % q != 0) {
    throw PreconditionError("polynomial ring order " + std::to_string(q) +
                            " does not divide transform order " + std::to_string(r));
  }
  std::vector<CycInt> lifted;
  lifted.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) lifted.push_back(lift(c, r));
  const CycPoly base(std::move(lifted), CycInt::zero(r));

  CycPoly acc = CycPoly::constant(CycInt::one(r));
  for (unsigned j = 0; j < r; ++j) {
    std::vector<CycInt> sub;
    sub.reserve(base.coeffs().size());
    for (std::size_t k = 0; k < base.coeffs().size(); ++k) {
      sub.push_back(rotate(base.coeffs()[k], static_cast<unsigned long>(j) * k));
    }
    acc = acc * CycPoly(std::move(sub), CycInt::zero(r));
  }
  return acc;
}

/// Integer-coefficient variant; the product is Galois-invariant so the
/// result is back in Z[x].
inline IntPoly rou_product_transform(const IntPoly& p, unsigned r) {
  if (r == 0) throw PreconditionError("transform order must be positive");
  return to_integer(rou_product_transform(to_cyclotomic(p, r), r));
}

}  // namespace hyperspec
