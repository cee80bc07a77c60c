#include "oracles.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

using namespace hyperspec;

namespace {

IntPoly ip(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

RatPoly random_rat_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = oracle::random_rational(rng, 30);
  if (c.back() == 0) c.back() = 1;
  return RatPoly(std::move(c));
}

}  // namespace

TEST(Polynomial, ArithmeticExamples) {
  const IntPoly p = ip({0, -4, 1});
  EXPECT_EQ(p(BigInt(4)), 0);
  EXPECT_EQ(ip({-1, 1}) * ip({1, 1}), ip({-1, 0, 1}));
  // lambda - x with x = -2 over cyclotomic(2), evaluated at lambda = 0
  const CycPoly c = CycPoly::linear_root(CycInt::from_int(2, -2));
  EXPECT_EQ(c(CycInt::zero(2)), CycInt::from_int(2, 2));
}

TEST(Polynomial, TrimAndDegree) {
  EXPECT_EQ(ip({}).degree(), -1);
  EXPECT_EQ(ip({0, 0, 0}).degree(), -1);
  EXPECT_EQ(ip({1, 2, 0}).degree(), 1);
  EXPECT_THROW(ip({}).leading(), PreconditionError);
  EXPECT_EQ((ip({1, 1}) - ip({1, 1})).degree(), -1);
}

TEST(Polynomial, RingAxioms) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const RatPoly a = random_rat_poly(rng, t % 6);
    const RatPoly b = random_rat_poly(rng, (t + 2) % 7);
    const RatPoly c = random_rat_poly(rng, (t + 4) % 5);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    const Rational x = oracle::random_rational(rng, 10);
    ASSERT_EQ((a * b)(x), a(x) * b(x));
  }
}

TEST(Polynomial, InterpolateExamples) {
  std::vector<std::pair<Rational, Rational>> pts = {{0, 0}, {1, -3}, {2, -4}, {3, -3}, {4, 0}};
  EXPECT_EQ(interpolate(pts), to_rational(ip({0, -4, 1})));
  EXPECT_EQ(interpolate({{0, 1}, {1, 1}}), RatPoly::constant(Rational(1)));

  const IntPoly target = ip({0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1});
  std::vector<std::pair<Rational, Rational>> samples;
  for (long t = 0; t <= 12; ++t) samples.emplace_back(t, Rational(target(BigInt(t))));
  EXPECT_EQ(interpolate(samples), to_rational(target));
}

TEST(Polynomial, InterpolateRejectsDuplicates) {
  std::vector<std::pair<Rational, Rational>> pts = {{0, 1}, {1, 2}, {0, 3}};
  EXPECT_THROW(interpolate(pts), PreconditionError);
}

TEST(Polynomial, InterpolateRoundTrip) {
  std::mt19937_64 rng(31);
  for (int degree = 0; degree <= 20; ++degree) {
    const RatPoly p = random_rat_poly(rng, degree);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 0; i <= degree; ++i) {
      const Rational x = make_rational(3 * i - 7, 2);
      pts.emplace_back(x, p(x));
    }
    ASSERT_EQ(interpolate(pts), p) << "degree " << degree;
  }
}

TEST(Polynomial, RouTransformExamples) {
  // (x - 1)(-x - 1) = 1 - x^2
  EXPECT_EQ(rou_product_transform(ip({-1, 1}), 2), ip({1, 0, -1}));
  EXPECT_EQ(rou_product_transform(ip({0, 0, 1}), 3), ip({0, 0, 0, 0, 0, 0, 1}));

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-9, 9);
  const IntPoly p = ip({d(rng), d(rng), d(rng), 7});
  const IntPoly t = rou_product_transform(p, 4);
  EXPECT_EQ(t.degree(), 12);
  for (long i = 0; i <= t.degree(); ++i) {
    if (i % 4 != 0) {
      EXPECT_EQ(t.coeffs()[i], 0) << i;
    }
  }
  // direct substitution, numerically
  for (double x : {0.3, -1.1, 2.0}) {
    std::complex<double> prod = 1.0;
    for (unsigned j = 0; j < 4; ++j) prod *= oracle::eval(p, oracle::zeta(4, j) * x);
    EXPECT_NEAR(std::abs(prod - oracle::eval(t, x)), 0.0, 1e-6 * std::max(1.0, std::abs(prod)));
  }
}

TEST(Polynomial, RouTransformOverCyclotomicRing) {
  // p = x - zeta_3 over Z[zeta_3], r = 6: product of (zeta_6^j x - zeta_3)
  const CycPoly p = CycPoly::linear_root(CycInt::zeta(3, 1));
  const CycPoly t = rou_product_transform(p, 6);
  EXPECT_EQ(t.degree(), 6);
  for (long i = 1; i < 6; ++i) EXPECT_TRUE(t.coeffs()[i].is_zero());
  EXPECT_THROW(rou_product_transform(p, 4), PreconditionError);
}

// For p of degree r with roots beta_k, prod_j (zeta^j x - beta) =
// (-1)^{r-1} (x^r - beta^r); over r roots the signs cancel, so the transform
// is alpha^r prod_k (x^r - beta_k^r). Checked against numeric roots.
TEST(Polynomial, RouTransformFactoredForm) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> d(-9, 9);
  int checked = 0;
  while (checked < 100) {
    const unsigned r = 1 + static_cast<unsigned>(checked % 5);
    std::vector<long> c(r + 1);
    for (auto& x : c) x = d(rng);
    if (c.back() == 0) continue;
    const IntPoly p = ip(c);
    const IntPoly t = rou_product_transform(p, r);
    ASSERT_EQ(t.degree(), static_cast<long>(r * r));
    for (long i = 0; i <= t.degree(); ++i) {
      if (i % r != 0) {
        ASSERT_EQ(t.coeffs()[i], 0);
      }
    }
    std::vector<double> dc(c.begin(), c.end());
    const auto roots = polynomial_roots(dc);
    ASSERT_EQ(roots.size(), r);
    for (double x : {0.7, -0.4, 1.3}) {
      std::complex<double> factored = std::pow(std::complex<double>(dc.back()), static_cast<int>(r));
      for (const auto& beta : roots) {
        factored *= std::pow(std::complex<double>(x), static_cast<int>(r)) -
                    std::pow(beta, static_cast<int>(r));
      }
      const std::complex<double> direct = oracle::eval(t, x);
      const double scale = std::max(1.0, std::abs(direct));
      ASSERT_LE(std::abs(direct - factored) / scale, 1e-8) << "r=" << r;
    }
    ++checked;
  }
}

TEST(Polynomial, Dehomogenize) {
  // F = lambda x1^2 - (x1 + x2)^2
  const MultiPoly x1 = variable(2, 0), x2 = variable(2, 1);
  MultiPoly lam_x1sq(2);
  lam_x1sq.add_term({2, 0}, lambda_monomial());
  const MultiPoly f = lam_x1sq - pow(x1 + x2, 2);

  const MultiPoly f0 = dehomogenize(f, 1, 0);
  MultiPoly want0(1);
  want0.add_term({2}, lambda_monomial() - LambdaPoly::constant(Rational(1)));
  EXPECT_EQ(f0, want0);

  const MultiPoly f1 = dehomogenize(f, 1, 1);
  MultiPoly want1(1);
  want1.add_term({2}, lambda_monomial() - LambdaPoly::constant(Rational(1)));
  want1.add_term({1}, Rational(-2));
  want1.add_term({0}, Rational(-1));
  EXPECT_EQ(f1, want1);

  // a variable the polynomial lacks: only the variable slot disappears
  MultiPoly g(3);
  g.add_term({2, 1, 0}, Rational(5));
  MultiPoly gw(2);
  gw.add_term({2, 1}, Rational(5));
  EXPECT_EQ(dehomogenize(g, 2, 0), gw);
  EXPECT_EQ(dehomogenize(g, 2, 1), gw);
  EXPECT_THROW(dehomogenize(g, 3, 0), PreconditionError);
}

TEST(Polynomial, HomogPolyValidation) {
  HomogPoly h(2, 2);
  EXPECT_THROW(h.add_term({1, 0}, LambdaPoly::constant(Rational(1))), PreconditionError);
  EXPECT_THROW(h.add_term({1, 1, 0}, LambdaPoly::constant(Rational(1))), PreconditionError);
  h.add_term({1, 1}, LambdaPoly::constant(Rational(1)));
  h.add_term({1, 1}, LambdaPoly::constant(Rational(-1)));
  EXPECT_TRUE(h.poly().is_zero());
}
