#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hyperspec;

namespace {

RatPoly rp(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return RatPoly(std::move(v));
}

HomogPoly form(unsigned vars, unsigned degree, std::vector<std::pair<Exponents, long>> terms) {
  HomogPoly h(vars, degree);
  for (const auto& [e, c] : terms) h.add_term(e, LambdaPoly::constant(Rational(c)));
  return h;
}

}  // namespace

TEST(Resultants, SunflowerGraphs) {
  auto h = sunflower(1, 1, 3);
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edges().size(), 1u);

  h = sunflower(2, 1, 3);
  EXPECT_EQ(h.vertex_count(), 5u);
  EXPECT_EQ(h.edges(), (std::vector<Hypergraph::Edge>{{0, 1, 2}, {0, 3, 4}}));

  h = sunflower(3, 2, 4);
  EXPECT_EQ(h.vertex_count(), 8u);
  EXPECT_EQ(h.edges().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      std::vector<unsigned> common;
      std::set_intersection(h.edges()[i].begin(), h.edges()[i].end(), h.edges()[j].begin(),
                            h.edges()[j].end(), std::back_inserter(common));
      EXPECT_EQ(common, (std::vector<unsigned>{0, 1}));
    }
  }
  EXPECT_THROW(sunflower(2, 3, 3), PreconditionError);
  EXPECT_THROW(sunflower(2, 0, 3), PreconditionError);
}

TEST(Resultants, HypergraphValidation) {
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1, 1}}), PreconditionError);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1, 3}}), PreconditionError);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1}}), PreconditionError);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1, 2}, {2, 1, 0}}), PreconditionError);
}

TEST(Resultants, EigenSystemExamples) {
  const auto lam = lambda_monomial();
  const auto one = LambdaPoly::constant(Rational(1));

  // J_2^3: lambda x1^2 - (x1 + x2)^2
  const auto j = eigen_system(Hypermatrix::all_ones(2, 3));
  ASSERT_EQ(j.size(), 2u);
  HomogPoly f1(2, 2), f2(2, 2);
  f1.add_term({2, 0}, lam - one);
  f1.add_term({1, 1}, -(one + one));
  f1.add_term({0, 2}, -one);
  f2.add_term({2, 0}, -one);
  f2.add_term({1, 1}, -(one + one));
  f2.add_term({0, 2}, lam - one);
  EXPECT_EQ(j[0], f1);
  EXPECT_EQ(j[1], f2);

  // S(1,1,3): lambda x0^2 - x1 x2, lambda x1^2 - x0 x2, lambda x2^2 - x0 x1
  const auto s = eigen_system(sunflower(1, 1, 3));
  HomogPoly s0(3, 2), s1(3, 2), s2(3, 2);
  s0.add_term({2, 0, 0}, lam);
  s0.add_term({0, 1, 1}, -one);
  s1.add_term({0, 2, 0}, lam);
  s1.add_term({1, 0, 1}, -one);
  s2.add_term({0, 0, 2}, lam);
  s2.add_term({1, 1, 0}, -one);
  EXPECT_EQ(s, (std::vector<HomogPoly>{s0, s1, s2}));
  // the adjacency hypermatrix route gives the same system
  EXPECT_EQ(eigen_system(sunflower(1, 1, 3).adjacency()), s);

  const auto z = eigen_system(Hypermatrix::zero(2, 3));
  HomogPoly z0(2, 2), z1(2, 2);
  z0.add_term({2, 0}, lam);
  z1.add_term({0, 2}, lam);
  EXPECT_EQ(z, (std::vector<HomogPoly>{z0, z1}));
}

TEST(Resultants, SylvesterExamples) {
  const auto j3 = eigen_system(Hypermatrix::all_ones(2, 3));
  EXPECT_EQ(sylvester_resultant(j3[0], j3[1]).monic, rp({0, 0, 0, -4, 1}));

  const auto j2 = eigen_system(Hypermatrix::all_ones(2, 2));
  EXPECT_EQ(sylvester_resultant(j2[0], j2[1]).monic, rp({0, -2, 1}));

  const auto unit = sylvester_resultant(form(2, 2, {{{2, 0}, 1}}), form(2, 2, {{{0, 2}, 1}}));
  EXPECT_EQ(unit.monic, rp({1}));
  EXPECT_EQ(unit.leading, 1);

  EXPECT_THROW(sylvester_resultant(form(2, 1, {{{1, 0}, 1}}), form(2, 1, {{{1, 0}, 2}})),
               DegenerateResultant);
}

TEST(Resultants, SylvesterAgainstProductOfRoots) {
  // Res(a (x0 - r1 x1)(x0 - r2 x1), b (x0 - s x1)) is a^1 b^2 prod (r_i - s) up to sign
  const HomogPoly p = form(2, 2, {{{2, 0}, 3}, {{1, 1}, -3 * (1 + 2)}, {{0, 2}, 3 * 2}});
  const HomogPoly q = form(2, 1, {{{1, 0}, 5}, {{0, 1}, -5 * 4}});
  const auto r = sylvester_resultant(p, q);
  EXPECT_EQ(r.monic, rp({1}));
  EXPECT_EQ(abs(r.leading), Rational(3 * 25 * (1 - 4) * (2 - 4)));
}

TEST(Resultants, MacaulayExamples) {
  const auto s = characteristic_polynomial_oracle(eigen_system(sunflower(1, 1, 3)));
  EXPECT_EQ(s.monic, rp({0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1}));

  const auto j = characteristic_polynomial_oracle(Hypermatrix::all_ones(3, 3));
  EXPECT_EQ(j.monic, to_rational(expand(all_ones_char_poly(3, 3))));

  const auto z = characteristic_polynomial_oracle(Hypermatrix::zero(3, 3));
  EXPECT_EQ(z.monic, RatPoly::monomial(Rational(1), 12));
}

TEST(Resultants, MacaulayLayoutShape) {
  const auto sys = eigen_system(sunflower(1, 1, 3));
  const MacaulayLayout layout(sys);
  EXPECT_EQ(layout.degree(), 4u);
  EXPECT_EQ(layout.size(), 15u);
  // monomials of degree 4 in 3 variables divisible by two of x0^2, x1^2, x2^2
  EXPECT_EQ(layout.minor_indices().size(), 3u);

  // a pure-power system gives the identity matrix
  std::vector<HomogPoly> pure;
  for (unsigned i = 0; i < 3; ++i) {
    Exponents e(3, 0);
    e[i] = 2;
    pure.push_back(form(3, 2, {{e, 1}}));
  }
  const auto q = macaulay_quotient_at(pure, Rational(0));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, 1);
}

TEST(Resultants, MacaulayGuard) {
  EXPECT_THROW(characteristic_polynomial_oracle(Hypermatrix::all_ones(6, 3)), GuardError);
  EXPECT_THROW(MacaulayLayout(eigen_system(Hypermatrix::all_ones(2, 3))), PreconditionError);
}

TEST(Resultants, OracleDegreeAndShiftStability) {
  for (auto [n, m] : {std::pair{3u, 2u}, {4u, 2u}, {3u, 3u}, {3u, 4u}}) {
    const auto sys = eigen_system(Hypermatrix::all_ones(n, m));
    const auto a = macaulay_resultant(sys, 0);
    const auto b = macaulay_resultant(sys, 1);
    EXPECT_EQ(a.monic, b.monic);
    EXPECT_EQ(a.leading, b.leading);
    EXPECT_EQ(a.monic.degree(), static_cast<long>(n * std::pow(m - 1, n - 1)));
  }
  const auto sys = eigen_system(Hypermatrix::all_ones(2, 4));
  EXPECT_EQ(sylvester_resultant(sys[0], sys[1], 0).monic, sylvester_resultant(sys[0], sys[1], 1).monic);
}

TEST(Resultants, EigenSystemNormalizationIsMonic) {
  // the top-lambda part of every eigen-system is lambda x_i^{m-1}, whose
  // resultant is 1, so the raw oracle output is already monic
  for (auto [n, m] : {std::pair{2u, 3u}, {3u, 3u}, {3u, 2u}}) {
    const auto r = characteristic_polynomial_oracle(Hypermatrix::all_ones(n, m));
    EXPECT_EQ(r.leading, 1);
  }
  const auto sys = eigen_system(sunflower(1, 1, 3));
  EXPECT_EQ(macaulay_leading_constant(sys), Rational(1));
}

TEST(Resultants, SingleVariable) {
  Hypermatrix a(3, 1);
  a.set({0, 0, 0}, Rational(5));
  EXPECT_EQ(characteristic_polynomial_oracle(a).monic, rp({-5, 1}));
}

TEST(Resultants, Determinants) {
  SquareMatrix<BigInt> m(3);
  const long v[3][3] = {{0, 2, 1}, {3, 0, 4}, {5, 6, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v[r][c];
  // 0*(0-24) - 2*(0-20) + 1*(18-0) = 58
  EXPECT_EQ(determinant(m), 58);

  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + t % 6;
    SquareMatrix<Rational> a(n);
    Eigen::MatrixXd d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) = oracle::random_rational(rng, 9);
        d(r, c) = a(r, c).get_d();
      }
    const double want = d.determinant();
    EXPECT_NEAR(determinant(a).get_d(), want, 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST(Resultants, PoissonExamples) {
  const BinaryForm f0{{1, -1}}, f1{{1, -2}};
  EXPECT_LE(poisson_check_binary(f0, f1), 1e-12);

  const auto report = poisson_trials(100, 0);
  EXPECT_EQ(report.trials, 100u);
  EXPECT_LE(report.max_relative_error, 1e-6);

  const BinaryForm no_lead{{1, 1, 0}};
  EXPECT_THROW(poisson_check_binary(f0, no_lead), PreconditionError);
  const BinaryForm double_root{{1, -2, 1}};
  EXPECT_THROW(poisson_check_binary(f0, double_root), RepeatedRoots);
}

TEST(Resultants, PoissonTrialsAreReproducible) {
  const auto a = poisson_trials(50, 7);
  const auto b = poisson_trials(50, 7);
  EXPECT_EQ(a.max_relative_error, b.max_relative_error);
  EXPECT_EQ(a.rejected, b.rejected);
}
