#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hyperspec;

TEST(Walks, TwoStepsOnALine) {
  const auto t = walk_counts(2, 2);
  EXPECT_EQ(t.counts.size(), 3u);
  EXPECT_EQ(t.count_at(CycInt::from_int(2, 2)), 1);
  EXPECT_EQ(t.count_at(CycInt::from_int(2, 0)), 2);
  EXPECT_EQ(t.count_at(CycInt::from_int(2, -2)), 1);
}

TEST(Walks, TwoStepsOnTheTriangle) {
  const auto t = walk_counts(2, 3);
  EXPECT_EQ(t.total(), 9);
  for (unsigned j = 0; j < 3; ++j) {
    EXPECT_EQ(t.count_at(CycInt::from_int(3, 2) * CycInt::zeta(3, j)), 1);
    EXPECT_EQ(t.count_at(-CycInt::zeta(3, j)), 2);
  }
  EXPECT_EQ(t.counts.size(), 6u);
}

TEST(Walks, ZeroSteps) {
  for (unsigned q = 1; q <= 6; ++q) {
    const auto t = walk_counts(0, q);
    ASSERT_EQ(t.counts.size(), 1u);
    EXPECT_EQ(t.count_at(CycInt::zero(q)), 1);
  }
}

TEST(Walks, Multinomial) {
  EXPECT_EQ(multinomial(4, {2, 2}), 6);
  EXPECT_EQ(multinomial(2, {1, 1, 0}), 2);
  EXPECT_EQ(multinomial(3, {1, 1, 2}), 0);
  EXPECT_EQ(multinomial(3, {-1, 2, 2}), 0);
  EXPECT_EQ(multinomial(0, {}), 1);
  EXPECT_EQ(multinomial(30, {10, 10, 10}), BigInt("5550996791340"));
}

TEST(Walks, MatchesBruteForceEnumeration) {
  for (unsigned q = 1; q <= 6; ++q) {
    for (unsigned n = 0; n <= 7; ++n) {
      if (std::pow(q, n) > 300000) continue;
      EXPECT_EQ(walk_counts(n, q).counts, oracle::brute_walks(n, q)) << n << "," << q;
    }
  }
}

TEST(Walks, MatchesCompositionFormula) {
  // counts(w) = sum over compositions s with reduce(s) = w of n!/prod s_j!
  const unsigned n = 6, q = 4;
  std::map<CycInt, BigInt> want;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; a + b <= n; ++b)
      for (long c = 0; a + b + c <= n; ++c) {
        const long d = n - a - b - c;
        want[CycInt::reduce({a, b, c, d}, q)] += multinomial(n, {a, b, c, d});
      }
  EXPECT_EQ(walk_counts(n, q).counts, want);
}

TEST(Walks, Invariants) {
  for (unsigned q = 1; q <= 7; ++q) {
    for (unsigned n = 1; n <= 8; ++n) {
      const auto t = walk_counts(n, q);
      EXPECT_EQ(t.total(), ipow(BigInt(q), n));
      for (const auto& [w, c] : t.counts) {
        EXPECT_EQ(t.count_at(rotate(w, 1)), c);
        EXPECT_LE(std::abs(embed(w)), n + 1e-9);
        if (!w.is_zero()) {
          BigInt orbit = 0;
          for (unsigned j = 0; j < q; ++j) orbit += t.count_at(rotate(w, j));
          EXPECT_EQ(orbit, c * q);
        }
      }
      const BigInt zero = t.count_at(CycInt::zero(q));
      EXPECT_TRUE(mpz_divisible_ui_p(zero.get_mpz_t(), q)) << n << "," << q;
    }
  }
}

TEST(Walks, RealPartMarginalsForSmallOrders) {
  // q = 2: endpoint k has count C(n, (n+k)/2).
  for (unsigned n = 1; n <= 12; ++n) {
    const auto t = walk_counts(n, 2);
    for (long k = -static_cast<long>(n); k <= static_cast<long>(n); ++k) {
      const BigInt want = (n + k) % 2 == 0 ? binomial(n, (n + k) / 2) : BigInt(0);
      EXPECT_EQ(t.count_at(CycInt::from_int(2, k)), want);
    }
  }
  // q = 3: a steps of 1, b of zeta, c of zeta^2 land at (a - c) + (b - c) zeta;
  // summing over fixed real part 2a - b - c against the trinomial count.
  for (unsigned n = 1; n <= 9; ++n) {
    const auto t = walk_counts(n, 3);
    std::map<long, BigInt> by_real_times_two;
    for (const auto& [w, c] : t.counts) {
      const long x = w.coeffs()[0].get_si(), y = w.coeffs()[1].get_si();
      by_real_times_two[2 * x - y] += c;
    }
    std::map<long, BigInt> want;
    for (long a = 0; a <= n; ++a)
      for (long b = 0; a + b <= n; ++b) {
        const long c = n - a - b;
        want[2 * a - b - c] += multinomial(n, {a, b, c});
      }
    EXPECT_EQ(by_real_times_two, want) << n;
  }
}

TEST(Walks, EndpointGuard) {
  EXPECT_THROW(walk_counts(40, 7, 1000), GuardError);
  EXPECT_THROW(walk_counts(3, 0), PreconditionError);
}

TEST(Walks, CsvEmission) {
  const std::string csv = walk_table_csv(walk_counts(2, 2));
  EXPECT_EQ(csv, "re,im,count\n-2,0,1\n0,0,2\n2,0,1\n");
}
