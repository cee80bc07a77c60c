#pragma once

// Exact enumeration of n-step walks whose steps are the q-th roots of unity.
// Endpoints are canonical CycInt values; counts are exact big naturals.

#include <hyperspec/bigint.hpp>
#include <hyperspec/cyclotomic.hpp>
#include <hyperspec/errors.hpp>

#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hyperspec {

struct WalkTable {
  unsigned steps = 0;
  unsigned q = 1;
  std::map<CycInt, BigInt> counts;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
  }

  BigInt count_at(const CycInt& w) const {
    auto it = counts.find(w);
    return it == counts.end() ? BigInt(0) : it->second;
  }
};

inline constexpr std::size_t kDefaultEndpointGuard = 10'000'000;

/// counts(w) = number of step sequences in {zeta^0..zeta^{q-1}}^n summing to w,
/// built by n-fold convolution of the step set.
inline WalkTable walk_counts(unsigned n, unsigned q,
                             std::size_t max_endpoints = kDefaultEndpointGuard) {
  if (q == 0) throw PreconditionError("step-set order must be positive");
  std::vector<CycInt> steps;
  steps.reserve(q);
  for (unsigned j = 0; j < q; ++j) steps.push_back(CycInt::zeta(q, j));

  WalkTable table{n, q, {}};
  table.counts.emplace(CycInt::zero(q), BigInt(1));
  for (unsigned s = 0; s < n; ++s) {
    std::map<CycInt, BigInt> next;
    for (const auto& [w, c] : table.counts) {
      for (const auto& step : steps) next[w + step] += c;
    }
    if (next.size() > max_endpoints) {
      throw GuardError("walk table exceeds " + std::to_string(max_endpoints) + " endpoints");
    }
    table.counts = std::move(next);
  }
  return table;
}

/// n! / prod parts! when the parts are naturals summing to n, otherwise 0.
inline BigInt multinomial(long long n, std::span<const long long> parts) {
  if (n < 0) return 0;
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != n) return 0;
  BigInt r = 1;
  long long remaining = n;
  for (long long p : parts) {
    r *= binomial(static_cast<unsigned long>(remaining), static_cast<unsigned long>(p));
    remaining -= p;
  }
  return r;
}

inline BigInt multinomial(long long n, std::initializer_list<long long> parts) {
  return multinomial(n, std::span<const long long>(parts.begin(), parts.size()));
}

namespace detail {

inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

/// Rounds away floating noise below 1e-12 so exact zeros print as 0.
inline double clean(double v) { return std::abs(v) < 1e-12 ? 0.0 : v; }

}  // namespace detail

/// CSV with header re,im,count; one row per endpoint in canonical order.
inline std::string walk_table_csv(const WalkTable& table) {
  std::string out = "re,im,count\n";
  for (const auto& [w, c] : table.counts) {
    const auto z = embed(w);
    out += detail::format_double(detail::clean(z.real()));
    out += ',';
    out += detail::format_double(detail::clean(z.imag()));
    out += ',';
    out += c.get_str();
    out += '\n';
  }
  return out;
}

}  // namespace hyperspec
