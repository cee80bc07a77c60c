#pragma once

// Sparse multivariate polynomials in x_0..x_{N-1} whose coefficients are
// univariate rational polynomials in a parameter lambda. Eigen-systems
// lambda x_i^{m-1} - (A x^{m-1})_i live here.

#include <hyperspec/bigint.hpp>
#include <hyperspec/cyclotomic.hpp>
#include <hyperspec/errors.hpp>
#include <hyperspec/polynomial.hpp>

#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace hyperspec {

using Exponents = std::vector<unsigned>;
using LambdaPoly = RatPoly;

inline unsigned exponent_sum(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

class MultiPoly {
 public:
  using Terms = std::map<Exponents, LambdaPoly>;

  MultiPoly() = default;
  explicit MultiPoly(unsigned num_vars) : num_vars_(num_vars) {}

  unsigned num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * x^exps, merging with an existing term and dropping zeros.
  void add_term(const Exponents& exps, const LambdaPoly& coeff) {
    if (exps.size() != num_vars_) throw PreconditionError("exponent vector has wrong length");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_term(const Exponents& exps, const Rational& c) {
    add_term(exps, LambdaPoly::constant(c));
  }

  /// Largest total degree among the terms, -1 for zero.
  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, exponent_sum(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = exponent_sum(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
      if (exponent_sum(e) != d) return false;
    }
    return true;
  }

  /// Highest power of lambda appearing in any coefficient, -1 for zero.
  long lambda_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, c.degree());
    return d;
  }

  /// Specializes lambda = t.
  std::map<Exponents, Rational> at_lambda(const Rational& t) const {
    std::map<Exponents, Rational> out;
    for (const auto& [e, c] : terms_) {
      Rational v = c(t);
      if (v != 0) out.emplace(e, std::move(v));
    }
    return out;
  }

  /// The part of each coefficient multiplying lambda^k.
  std::map<Exponents, Rational> lambda_coefficient(std::size_t k) const {
    std::map<Exponents, Rational> out;
    for (const auto& [e, c] : terms_) {
      Rational v = c.coeff(k);
      if (v != 0) out.emplace(e, std::move(v));
    }
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw PreconditionError("variable count mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw PreconditionError("variable count mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw PreconditionError("variable count mismatch");
    MultiPoly r(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.num_vars_);
        for (unsigned i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      os << "(" << it->second.to_string("l") << ")";
      for (unsigned i = 0; i < num_vars_; ++i) {
        if (it->first[i] == 0) continue;
        os << "*x" << i;
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
      first = false;
    }
    return os.str();
  }

 private:
  unsigned num_vars_ = 0;
  Terms terms_;
};

/// x_i as a polynomial in num_vars variables.
inline MultiPoly variable(unsigned num_vars, unsigned i) {
  MultiPoly p(num_vars);
  Exponents e(num_vars, 0);
  e.at(i) = 1;
  p.add_term(e, Rational(1));
  return p;
}

inline MultiPoly pow(const MultiPoly& base, unsigned e) {
  MultiPoly acc(base.num_vars());
  acc.add_term(Exponents(base.num_vars(), 0), Rational(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

/// A MultiPoly whose terms all share one total degree.
class HomogPoly {
 public:
  HomogPoly(unsigned num_vars, unsigned degree) : poly_(num_vars), degree_(degree) {}

  HomogPoly(MultiPoly p, unsigned degree) : poly_(std::move(p)), degree_(degree) {
    for (const auto& [e, c] : poly_.terms()) {
      if (exponent_sum(e) != degree_) {
        throw PreconditionError("term of degree " + std::to_string(exponent_sum(e)) +
                                " in a form of degree " + std::to_string(degree_));
      }
    }
  }

  /// Infers the degree from the terms; a zero polynomial needs the explicit constructor.
  static HomogPoly from(MultiPoly p) {
    if (p.is_zero()) throw PreconditionError("degree of the zero form is ambiguous");
    const auto d = static_cast<unsigned>(exponent_sum(p.terms().begin()->first));
    return HomogPoly(std::move(p), d);
  }

  unsigned num_vars() const { return poly_.num_vars(); }
  unsigned degree() const { return degree_; }
  const MultiPoly& poly() const { return poly_; }
  const MultiPoly::Terms& terms() const { return poly_.terms(); }

  void add_term(const Exponents& exps, const LambdaPoly& coeff) {
    if (exponent_sum(exps) != degree_) throw PreconditionError("term degree mismatch");
    poly_.add_term(exps, coeff);
  }

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

  std::string to_string() const { return poly_.to_string(); }

 private:
  MultiPoly poly_;
  unsigned degree_;
};

/// Substitutes x_k = value (0 or 1) and drops x_k. With value 0 the result
/// is again a form of the same degree; with value 1 it generally is not.
inline MultiPoly dehomogenize(const MultiPoly& f, unsigned k, int value) {
  if (k >= f.num_vars()) throw PreconditionError("variable index out of range");
  if (value != 0 && value != 1) throw PreconditionError("substitution value must be 0 or 1");
  MultiPoly out(f.num_vars() - 1);
  for (const auto& [e, c] : f.terms()) {
    if (value == 0 && e[k] != 0) continue;
    Exponents reduced;
    reduced.reserve(e.size() - 1);
    for (unsigned i = 0; i < e.size(); ++i) {
      if (i != k) reduced.push_back(e[i]);
    }
    out.add_term(reduced, c);
  }
  return out;
}

inline MultiPoly dehomogenize(const HomogPoly& f, unsigned k, int value) {
  return dehomogenize(f.poly(), k, value);
}

/// Exact value of f(lambda, x) over Z[zeta_q], scaled by the least common
/// denominator of f's coefficients so that the result stays integral.
/// The scale is positive, so zero-testing is unaffected.
inline CycInt evaluate_scaled(const MultiPoly& f, const CycInt& lambda,
                              std::span<const CycInt> x) {
  if (x.size() != f.num_vars()) throw PreconditionError("point has wrong dimension");
  const unsigned q = lambda.order();
  BigInt den = 1;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& a : c.coeffs()) den = lcm(den, a.get_den());
  }
  // x_i^k cache
  std::vector<std::vector<CycInt>> powers(x.size());
  auto power = [&](std::size_t i, unsigned k) -> const CycInt& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(CycInt::one(q));
    while (row.size() <= k) row.push_back(row.back() * x[i]);
    return row[k];
  };
  CycInt acc = CycInt::zero(q);
  for (const auto& [e, c] : f.terms()) {
    CycInt coeff = CycInt::zero(q);
    CycInt lp = CycInt::one(q);
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      if (k > 0) lp = lp * lambda;
      const Rational& a = c.coeffs()[k];
      if (a == 0) continue;
      const BigInt scaled = a.get_num() * (den / a.get_den());
      coeff += lp * scaled;
    }
    CycInt mono = coeff;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) mono = mono * power(i, e[i]);
    }
    acc += mono;
  }
  return acc;
}

}  // namespace hyperspec
