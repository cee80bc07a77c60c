#pragma once

// Sparse hypermatrices, uniform hypergraphs, and the eigen-systems
// F_i = lambda x_i^{m-1} - sum A[i, j_2..j_m] x_{j_2} ... x_{j_m}.

#include <hyperspec/bigint.hpp>
#include <hyperspec/errors.hpp>
#include <hyperspec/multivariate.hpp>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hyperspec {

class Hypermatrix {
 public:
  using Index = std::vector<unsigned>;

  Hypermatrix(unsigned order, unsigned dim) : order_(order), dim_(dim) {
    if (order < 2) throw PreconditionError("hypermatrix order must be at least 2");
    if (dim < 1) throw PreconditionError("hypermatrix dimension must be positive");
  }

  static Hypermatrix all_ones(unsigned dim, unsigned order) {
    Hypermatrix a(order, dim);
    Index idx(order, 0);
    while (true) {
      a.entries_.emplace(idx, Rational(1));
      std::size_t pos = order;
      while (pos > 0 && ++idx[pos - 1] == dim) idx[--pos] = 0;
      if (pos == 0) break;
    }
    return a;
  }

  static Hypermatrix zero(unsigned dim, unsigned order) { return Hypermatrix(order, dim); }

  unsigned order() const { return order_; }
  unsigned dim() const { return dim_; }
  const std::map<Index, Rational>& entries() const { return entries_; }

  void set(const Index& idx, const Rational& v) {
    check(idx);
    if (v == 0) entries_.erase(idx);
    else entries_[idx] = v;
  }

  void add(const Index& idx, const Rational& v) {
    check(idx);
    Rational& slot = entries_[idx];
    slot += v;
    if (slot == 0) entries_.erase(idx);
  }

  Rational get(const Index& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const Hypermatrix&, const Hypermatrix&) = default;

 private:
  void check(const Index& idx) const {
    if (idx.size() != order_) throw PreconditionError("index tuple has wrong length");
    for (unsigned i : idx) {
      if (i >= dim_) throw PreconditionError("index out of range");
    }
  }

  unsigned order_;
  unsigned dim_;
  std::map<Index, Rational> entries_;
};

class Hypergraph {
 public:
  using Edge = std::vector<unsigned>;

  Hypergraph(unsigned vertex_count, unsigned k, std::vector<Edge> edges)
      : vertex_count_(vertex_count), k_(k) {
    if (k < 2) throw PreconditionError("edge size must be at least 2");
    std::set<Edge> seen;
    for (auto& e : edges) {
      if (e.size() != k) throw PreconditionError("edge does not have k vertices");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw PreconditionError("edge repeats a vertex");
      }
      if (e.back() >= vertex_count) throw PreconditionError("edge vertex out of range");
      if (!seen.insert(e).second) throw PreconditionError("duplicate edge");
      edges_.push_back(e);
    }
  }

  unsigned vertex_count() const { return vertex_count_; }
  unsigned uniformity() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Entries 1/(k-1)! at every ordering of every edge, so that row v of the
  /// eigen-system reads lambda x_v^{k-1} - sum_{e containing v} prod_{u in e-v} x_u.
  Hypermatrix adjacency() const {
    Hypermatrix a(k_, vertex_count_);
    const Rational weight(1, factorial(k_ - 1));
    for (const auto& e : edges_) {
      Edge perm = e;
      do {
        a.add(perm, weight);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return a;
  }

 private:
  unsigned vertex_count_;
  unsigned k_;
  std::vector<Edge> edges_;
};

/// Sunflower with `petals` edges of size k sharing `seeds` seed vertices.
/// Seeds are vertices 0..seeds-1; petal i occupies the next k - seeds vertices.
inline Hypergraph sunflower(unsigned petals, unsigned seeds, unsigned k) {
  if (petals == 0) throw PreconditionError("sunflower needs at least one petal");
  if (seeds == 0 || seeds >= k) throw PreconditionError("sunflower requires 0 < seeds < k");
  const unsigned petal_size = k - seeds;
  const unsigned vertices = seeds + petals * petal_size;
  std::vector<Hypergraph::Edge> edges;
  for (unsigned i = 0; i < petals; ++i) {
    Hypergraph::Edge e;
    for (unsigned s = 0; s < seeds; ++s) e.push_back(s);
    for (unsigned t = 0; t < petal_size; ++t) e.push_back(seeds + i * petal_size + t);
    edges.push_back(std::move(e));
  }
  return Hypergraph(vertices, k, std::move(edges));
}

/// lambda as a polynomial in lambda.
inline LambdaPoly lambda_monomial() { return LambdaPoly::monomial(Rational(1), 1); }

inline std::vector<HomogPoly> eigen_system(const Hypermatrix& a) {
  const unsigned n = a.dim();
  const unsigned deg = a.order() - 1;
  std::vector<HomogPoly> system;
  system.reserve(n);
  for (unsigned i = 0; i < n; ++i) system.emplace_back(n, deg);
  for (unsigned i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = deg;
    system[i].add_term(e, lambda_monomial());
  }
  for (const auto& [idx, v] : a.entries()) {
    Exponents e(n, 0);
    for (std::size_t t = 1; t < idx.size(); ++t) ++e[idx[t]];
    system[idx[0]].add_term(e, LambdaPoly::constant(-v));
  }
  return system;
}

inline std::vector<HomogPoly> eigen_system(const Hypergraph& h) {
  const unsigned n = h.vertex_count();
  const unsigned deg = h.uniformity() - 1;
  std::vector<HomogPoly> system;
  for (unsigned v = 0; v < n; ++v) {
    HomogPoly f(n, deg);
    Exponents diag(n, 0);
    diag[v] = deg;
    f.add_term(diag, lambda_monomial());
    for (const auto& e : h.edges()) {
      if (!std::binary_search(e.begin(), e.end(), v)) continue;
      Exponents mono(n, 0);
      for (unsigned u : e) {
        if (u != v) ++mono[u];
      }
      f.add_term(mono, LambdaPoly::constant(Rational(-1)));
    }
    system.push_back(std::move(f));
  }
  return system;
}

/// max_i |lambda x_i^{m-1} - sum A[i,j_2..j_m] x_{j_2}...x_{j_m}|
inline double residual(const Hypermatrix& a, std::complex<double> lambda,
                       std::span<const std::complex<double>> x) {
  if (x.size() != a.dim()) throw PreconditionError("vector dimension mismatch");
  std::vector<std::complex<double>> row(a.dim());
  for (unsigned i = 0; i < a.dim(); ++i) {
    row[i] = lambda * std::pow(x[i], static_cast<int>(a.order() - 1));
  }
  for (const auto& [idx, v] : a.entries()) {
    std::complex<double> prod = v.get_d();
    for (std::size_t t = 1; t < idx.size(); ++t) prod *= x[idx[t]];
    row[idx[0]] -= prod;
  }
  double worst = 0.0;
  for (const auto& r : row) worst = std::max(worst, std::abs(r));
  return worst;
}

/// Exact residuals over Z[zeta_q] using the eigen-system; each entry is
/// scaled by a positive integer, so the pair is an eigenpair iff all are zero.
inline std::vector<CycInt> exact_residuals(const std::vector<HomogPoly>& system,
                                           const CycInt& lambda, std::span<const CycInt> x) {
  std::vector<CycInt> out;
  out.reserve(system.size());
  for (const auto& f : system) out.push_back(evaluate_scaled(f.poly(), lambda, x));
  return out;
}

}  // namespace hyperspec
