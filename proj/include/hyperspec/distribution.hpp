#pragma once

// Spectral measures nu_n of J_n^m: the uniform distribution on the
// eigenvalues counted with algebraic multiplicity.

#include <hyperspec/bigint.hpp>
#include <hyperspec/cyclotomic.hpp>
#include <hyperspec/errors.hpp>
#include <hyperspec/spectra.hpp>
#include <hyperspec/walks.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

struct SpectralMeasure {
  unsigned n = 0;
  unsigned m = 0;
  std::map<CycInt, Rational> atoms;

  Rational total() const {
    Rational t = 0;
    for (const auto& [v, mass] : atoms) t += mass;
    return t;
  }

  Rational mass_at(const CycInt& v) const {
    auto it = atoms.find(v);
    return it == atoms.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const SpectralMeasure&, const SpectralMeasure&) = default;
};

/// Masses are factor multiplicities over the total degree n (m-1)^{n-1}.
/// The factored form costs only the walk count, so the degree is not guarded
/// here beyond fitting in 64 bits.
inline SpectralMeasure exact_measure(unsigned n, unsigned m,
                                     std::uint64_t guard = std::numeric_limits<std::uint64_t>::max()) {
  const auto f = all_ones_char_poly(n, m, guard);
  const BigInt total = from_u64(f.total_degree);
  SpectralMeasure out{n, m, {}};
  if (f.lambda_exponent > 0) {
    out.atoms[CycInt::zero(m - 1)] += make_rational(from_u64(f.lambda_exponent), total);
  }
  for (const auto& fac : f.factors) out.atoms[fac.c] += make_rational(from_u64(fac.mult), total);
  return out;
}

namespace detail {

inline void assign_atom(SpectralMeasure& out, const CycInt& xi, const Rational& mass) {
  if (mass == 0) return;
  auto [it, inserted] = out.atoms.emplace(xi, mass);
  if (!inserted && it->second != mass) {
    throw InvariantError("closed form assigns two masses to eigenvalue " + xi.to_string());
  }
}

inline Rational pow_rational(long base, long e) {
  if (e >= 0) return Rational(ipow(BigInt(base), static_cast<unsigned long>(e)));
  return make_rational(1, ipow(BigInt(base), static_cast<unsigned long>(-e)));
}

/// Eigenvalue (x + y sqrt(-3)) / 2 in the basis 1, zeta_3 (sqrt(-3) = 1 + 2 zeta_3).
inline CycInt eisenstein_half(const BigInt& x, const BigInt& y) {
  const BigInt sum = x + y;
  if (!mpz_even_p(sum.get_mpz_t())) throw PreconditionError("(x + y sqrt(-3))/2 is not integral");
  return CycInt::reduce_any({BigInt(sum / 2), y}, 3);
}

inline CycInt gaussian(const BigInt& x, const BigInt& y) { return CycInt::reduce_any({x, y}, 4); }

inline BigInt binom_signed(long n, long k) {
  if (k < 0 || k > n) return 0;
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

}  // namespace detail

/// The explicit masses for m = 2..5, produced by walking the endpoint
/// parameters (a, b) forward and raising the endpoint to the (m-1)-th power.
inline SpectralMeasure closed_form_measure(unsigned n, unsigned m) {
  if (n < 1) throw PreconditionError("dimension must be positive");
  if (m < 2 || m > 5) throw PreconditionError("closed forms exist only for m in {2,3,4,5}");
  const unsigned q = m - 1;
  const long nn = n;
  SpectralMeasure out{n, m, {}};
  Rational zero_mass = make_rational(nn - 1, nn);

  switch (m) {
    case 2:
      detail::assign_atom(out, CycInt::from_int(1, nn), make_rational(1, nn));
      break;
    case 3: {
      // nu(k) = 2^{-n+1} C(n, (n + sqrt k)/2) / n
      for (long s = 1; s <= nn; ++s) {
        if ((nn + s) % 2 != 0) continue;
        const Rational mass = detail::pow_rational(2, 1 - nn) *
                              Rational(detail::binom_signed(nn, (nn + s) / 2)) / nn;
        detail::assign_atom(out, CycInt::from_int(2, s * s), mass);
      }
      if (nn % 2 == 0) {
        zero_mass += detail::pow_rational(2, -nn) * Rational(detail::binom_signed(nn, nn / 2)) / nn;
      }
      break;
    }
    case 4: {
      // endpoint (a + b sqrt(-3))/2; count F(n,a,b) = multinomial(n; (n+a)/3, (2n-a+3b)/6, (2n-a-3b)/6)
      for (long a = -2 * nn; a <= 2 * nn; ++a) {
        for (long b = -2 * nn; b <= 2 * nn; ++b) {
          if (a == 0 && b == 0) continue;
          if ((nn + a) % 3 != 0 || (2 * nn - a + 3 * b) % 6 != 0 || (2 * nn - a - 3 * b) % 6 != 0) {
            continue;
          }
          const BigInt count = multinomial(
              nn, {(nn + a) / 3, (2 * nn - a + 3 * b) / 6, (2 * nn - a - 3 * b) / 6});
          if (count == 0) continue;
          const BigInt x4 = BigInt(a) * (BigInt(a) * a - BigInt(9) * b * b);
          const BigInt y4 = BigInt(3) * b * (BigInt(a) * a - BigInt(b) * b);
          if (!mpz_divisible_ui_p(x4.get_mpz_t(), 4) || !mpz_divisible_ui_p(y4.get_mpz_t(), 4)) {
            throw InvariantError("cube of an Eisenstein endpoint left the lattice");
          }
          const CycInt xi = detail::eisenstein_half(x4 / 4, y4 / 4);
          const Rational mass = detail::pow_rational(3, 1 - nn) * Rational(count) / nn;
          detail::assign_atom(out, xi, mass);
        }
      }
      if (nn % 3 == 0) {
        zero_mass += detail::pow_rational(3, -nn) *
                     Rational(multinomial(nn, {nn / 3, nn / 3, nn / 3})) / nn;
      }
      break;
    }
    case 5: {
      // endpoint a + b i; count C(n, (n+a+b)/2) C(n, (n-a+b)/2)
      for (long a = -nn; a <= nn; ++a) {
        for (long b = -nn; b <= nn; ++b) {
          if (a == 0 && b == 0) continue;
          if ((nn + a + b) % 2 != 0) continue;
          const BigInt count = detail::binom_signed(nn, (nn + a + b) / 2) *
                               detail::binom_signed(nn, (nn - a + b) / 2);
          if (count == 0) continue;
          const BigInt A(a), B(b);
          const BigInt x = A * A * A * A - 6 * A * A * B * B + B * B * B * B;
          const BigInt y = 4 * A * B * (A * A - B * B);
          const Rational mass = detail::pow_rational(4, 1 - nn) * Rational(count) / nn;
          detail::assign_atom(out, detail::gaussian(x, y), mass);
        }
      }
      if (nn % 2 == 0) {
        const BigInt c = detail::binom_signed(nn, nn / 2);
        zero_mass += detail::pow_rational(4, -nn) * Rational(c * c) / nn;
      }
      break;
    }
  }
  detail::assign_atom(out, CycInt::zero(q), zero_mass);
  return out;
}

/// Closed-form mass at the point named by integer coordinates:
/// m = 2, 3: x (y must be 0); m = 4: (x + y sqrt(-3))/2; m = 5: x + y i.
inline Rational closed_form_mass_at(unsigned n, unsigned m, long x, long y) {
  const auto measure = closed_form_measure(n, m);
  switch (m) {
    case 2:
    case 3:
      if (y != 0) return 0;
      return measure.mass_at(CycInt::from_int(m - 1, x));
    case 4:
      if ((x + y) % 2 != 0) return 0;
      return measure.mass_at(detail::eisenstein_half(x, y));
    default:
      return measure.mass_at(detail::gaussian(x, y));
  }
}

struct WalkMoments {
  Rational re_sq;
  Rational im_sq;
  Rational re_im;
};

/// E[Re(X)^2], E[Im(X)^2], E[Re(X) Im(X)] for the n-step walk X with steps
/// the q-th roots of unity (q = m - 1 >= 3), exactly. The sums are formed in
/// Z[zeta_L], L = lcm(q, 4), using Re = (w + conj w)/2 and Im = (w - conj w)/(2i).
inline WalkMoments moment_check(unsigned n, unsigned m) {
  if (m < 4) throw PreconditionError("moment identities need m - 1 >= 3");
  const unsigned q = m - 1;
  const unsigned big = std::lcm(q, 4u);
  const WalkTable walks = walk_counts(n, q);
  const CycInt minus_i = CycInt::zeta(big, 3 * big / 4);
  CycInt s_re = CycInt::zero(big), s_im = CycInt::zero(big), s_mix = CycInt::zero(big);
  for (const auto& [w, count] : walks.counts) {
    const CycInt z = lift(w, big);
    const CycInt zc = conj(z);
    const CycInt plus = z + zc;
    const CycInt minus = z - zc;
    s_re += plus * plus * count;
    s_im -= minus * minus * count;
    s_mix += minus_i * (z * z - zc * zc) * count;
  }
  for (const CycInt* s : {&s_re, &s_im, &s_mix}) {
    if (!s->is_rational()) throw InvariantError("second moment is not rational: " + s->to_string());
  }
  const BigInt denom = ipow(BigInt(q), n) * 4;
  return {make_rational(s_re.integer_part(), denom), make_rational(s_im.integer_part(), denom),
          make_rational(s_mix.integer_part(), denom)};
}

/// Sup-distance between the distribution function of Re(X)/sqrt(n) and the
/// normal distribution function with variance 1/2. Exploratory only.
inline double clt_probe(unsigned n, unsigned m) {
  if (m < 4) throw PreconditionError("the probe needs m - 1 >= 3");
  if (n < 1) throw PreconditionError("the probe needs at least one step");
  const unsigned q = m - 1;
  const WalkTable walks = walk_counts(n, q);
  const double total = walks.total().get_d();
  const double scale = std::sqrt(static_cast<double>(n));
  std::vector<std::pair<double, double>> pts;
  for (const auto& [w, count] : walks.counts) {
    pts.emplace_back(embed(w).real() / scale, count.get_d() / total);
  }
  std::sort(pts.begin(), pts.end());
  // N(0, 1/2): G(v) = erfc(-v) / 2
  auto normal_cdf = [](double v) { return 0.5 * std::erfc(-v); };
  double cdf = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < pts.size();) {
    const double v = pts[i].first;
    const double before = cdf;
    while (i < pts.size() && std::abs(pts[i].first - v) < 1e-9) cdf += pts[i++].second;
    const double g = normal_cdf(v);
    worst = std::max({worst, std::abs(before - g), std::abs(cdf - g)});
  }
  return worst;
}

/// CSV rows re,im,mass for every atom, optionally divided by sqrt(n).
inline std::string emit_scatter(const SpectralMeasure& measure, bool scaled) {
  std::string out = "re,im,mass\n";
  const double scale = scaled ? std::sqrt(static_cast<double>(measure.n)) : 1.0;
  for (const auto& [v, mass] : measure.atoms) {
    const auto z = embed(v) / scale;
    out += detail::format_double(detail::clean(z.real()));
    out += ',';
    out += detail::format_double(detail::clean(z.imag()));
    out += ',';
    out += detail::format_double(mass.get_d());
    out += '\n';
  }
  return out;
}

}  // namespace hyperspec
