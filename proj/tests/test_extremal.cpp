#include <random>

#include <gtest/gtest.h>

#include "modeg/embedding.hpp"
#include "modeg/kronecker.hpp"
#include "modeg/mahler.hpp"
#include "modeg/periodicity.hpp"
#include "modeg/suites.hpp"
#include "oracles.hpp"

using namespace modeg;

namespace {

int oracle_degree(const SymmetricProfile& F, std::int64_t m) {
  const auto alpha = oracle::mahler(F, m);
  int d = 0;
  for (int l = 0; l <= F.arity(); ++l) {
    if (alpha[l] != 0) d = l;
  }
  return d;
}

/// Least deg_m over non-constant profiles on n bits, by the oracle.
int oracle_min_degree(int n, std::int64_t m) {
  int best = n + 1;
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << (n + 1)); ++bits) {
    best = std::min(best, oracle_degree(SymmetricProfile::from_bits(n, bits), m));
  }
  return best;
}

BigInt big_pow(std::int64_t b, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST(Periodicity, Examples) {
  EXPECT_TRUE(is_periodic(families::nae(3), 3));
  EXPECT_FALSE(is_periodic(families::nae(4), 3));
  EXPECT_TRUE(is_periodic(families::nae(4), 5));
  EXPECT_EQ(base_period(families::nae(3), 3), 3);
  EXPECT_EQ(base_period(families::nae(4), 3), 9);
  EXPECT_EQ(base_period(families::constant(4, true), 3), 1);
  const auto rep = period_report(families::parity(4), 2);
  EXPECT_EQ(rep.base_period, 2);
  EXPECT_EQ(rep.periods, (std::vector<std::int64_t>{2, 4}));
}

TEST(Periodicity, BasePeriodIsLeast) {
  for (int n = 0; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
      const auto F = SymmetricProfile::from_bits(n, bits);
      for (std::int64_t m : {2, 3, 5}) {
        const std::int64_t bp = base_period(F, m);
        ASSERT_TRUE(is_periodic(F, bp));
        if (bp > 1) ASSERT_FALSE(is_periodic(F, bp / m));
        if (n <= 8) ASSERT_EQ(bp, oracle::base_period(F, m));
      }
    }
  }
}

TEST(Periodicity, DoublePeriodicExamples) {
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    EXPECT_TRUE(periodicity_lemma_check(SymmetricProfile::from_bits(4, bits), 2, 3));
  }
  for (std::uint64_t bits = 0; bits < 128; ++bits) {
    EXPECT_TRUE(periodicity_lemma_check(SymmetricProfile::from_bits(6, bits), 3, 5));
  }
  EXPECT_THROW(periodicity_lemma_check(SymmetricProfile::from_bits(2, 1), 2, 3), std::invalid_argument);
  EXPECT_THROW(periodicity_lemma_check(SymmetricProfile::from_bits(6, 1), 2, 4), std::invalid_argument);
  EXPECT_TRUE(verify_periodicity_lemma(3, 4, 12).pass);
}

TEST(Threshold, Examples) {
  const auto a = threshold_n(3, 2);
  EXPECT_EQ(a.mu, 1);
  EXPECT_EQ(a.value, 4);
  const auto b = threshold_n(2, 4);
  EXPECT_EQ(b.mu, 2);
  EXPECT_EQ(b.value, 9);
  const auto c = threshold_n(2, 3);
  EXPECT_EQ(c.mu, 1);
  EXPECT_EQ(c.value, 3);
  EXPECT_TRUE(threshold_n(2, 2).clamped);
  EXPECT_THROW(threshold_n(2, 1), std::domain_error);
}

TEST(PkBound, Examples) {
  const auto a = verify_pk_bound(2, 2, 3);
  EXPECT_EQ(a.min_observed, 2);
  EXPECT_EQ(oracle_degree(families::parity(3), 4), 2);
  EXPECT_EQ(verify_pk_bound(3, 1, 2).min_observed, 2);
  EXPECT_EQ(verify_pk_bound(2, 4, 9).min_observed, 4);
  EXPECT_TRUE(verify_pk_bound(2, 4, 9).pass);
  EXPECT_TRUE(verify_pk_bound(3, 2, 4).pass);
}

TEST(PkBound, TwoThreeAtThresholdMatchesOracle) {
  // At n = 3 the minimum over Z_8 is 2, attained by NAE_3, which sits below
  // (p-1)k = 3; the suite must report this rather than hide it.
  const auto r = verify_pk_bound(2, 3, 3);
  EXPECT_EQ(r.min_observed, oracle_min_degree(3, 8));
  EXPECT_EQ(r.min_observed, 2);
  EXPECT_EQ(oracle_degree(families::nae(3), 8), 2);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(MinDegree, MatchesOracle) {
  for (int n = 1; n <= 9; ++n) {
    for (std::int64_t m : {2, 3, 4, 6, 8, 9, 10}) {
      ASSERT_EQ(min_degree_search(n, m).min_observed, oracle_min_degree(n, m)) << n << " " << m;
    }
  }
}

TEST(Lowdeg, Examples) {
  EXPECT_TRUE(verify_lowdeg(2, 1, 1, 6).pass);
  EXPECT_TRUE(verify_lowdeg(3, 1, 1, 8).pass);
  const auto r = verify_lowdeg(2, 2, 2, 7);
  EXPECT_TRUE(r.pass);
  ASSERT_TRUE(r.min_observed.has_value());
  EXPECT_GE(*r.min_observed, 4);
}

TEST(Lowdeg, HoldsByOracle) {
  for (int n = 1; n <= 9; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
      const auto F = SymmetricProfile::from_bits(n, bits);
      for (auto [p, k, t] : {std::tuple{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 2}}) {
        std::int64_t pt = 1;
        for (int i = 0; i < t; ++i) pt *= p;
        std::int64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (oracle_degree(F, pk) <= pt - 1) ASSERT_EQ(oracle::base_period(F, p) <= pt, true) << F.to_text();
      }
    }
  }
}

TEST(PqBound, Examples) {
  const auto a = verify_pq_bound(2, 3, 14);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.bound, Rational::make(4, 1));
  EXPECT_GE(*a.min_observed, 4);
  EXPECT_EQ(*a.min_observed, oracle_min_degree(14, 6));
  EXPECT_GE(*verify_pq_bound(2, 3, 7).min_observed, 2);
  const auto c = verify_pq_bound(3, 5, 10);
  EXPECT_TRUE(c.pass);
  EXPECT_GE(*c.min_observed, 4);
}

TEST(PeriodBound, HoldsByOracle) {
  for (std::int64_t p : {2, 3}) {
    for (int n = 1; n <= 10; ++n) {
      for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << (n + 1)); ++bits) {
        const auto F = SymmetricProfile::from_bits(n, bits);
        const std::int64_t lhs = 2 * p * oracle_degree(F, p);
        const std::int64_t rhs = std::min<std::int64_t>(p * n, 2 * (p - 1) * oracle::base_period(F, p));
        ASSERT_GE(lhs, rhs) << F.to_text();
      }
    }
    EXPECT_TRUE(verify_period_bound(p, 10).pass);
  }
}

TEST(Relations, Examples) {
  const auto a = relation_checks(2, 3, families::parity(8));
  EXPECT_EQ(a.deg_p, 1);
  EXPECT_EQ(a.deg_q, 8);
  EXPECT_TRUE(a.li_sun);
  EXPECT_TRUE(a.gopalan);
  const auto b = relation_checks(3, 2, families::mod(6, 0, 3));
  EXPECT_TRUE(b.li_sun);
  EXPECT_TRUE(b.gopalan);
  EXPECT_THROW(relation_checks(2, 3, families::constant(4, false)), std::invalid_argument);
  EXPECT_THROW(relation_checks(3, 3, families::parity(4)), std::invalid_argument);
  EXPECT_TRUE(verify_relations(2, 3, 12).pass);
}

TEST(Kronecker, Examples) {
  const auto sols = kronecker_search(6, 5, Rational::make(999, 1000), 5);
  ASSERT_FALSE(sols.empty());
  EXPECT_EQ(sols.front().l, 1);
  ASSERT_EQ(sols.front().factors.size(), 2U);
  EXPECT_EQ(sols.front().factors[0].ratio_num, 8);
  EXPECT_EQ(sols.front().factors[0].ratio_den, 5);
  EXPECT_EQ(sols.front().factors[1].ratio_num, 9);
  EXPECT_EQ(sols.front().factors[1].ratio_den, 5);
  for (std::int64_t m : {2, 3, 6, 10, 30, 42}) {
    for (std::int64_t q : {5, 7, 11, 13}) {
      if (m % q == 0) continue;
      EXPECT_TRUE(make_solution(m, q, 1).accepted) << m << " " << q;
    }
  }
  EXPECT_THROW(kronecker_search(12, 5, Rational::make(1, 2), 10), std::invalid_argument);
  EXPECT_THROW(kronecker_search(6, 3, Rational::make(1, 2), 10), std::invalid_argument);
}

TEST(Kronecker, SolutionsPassExactCheck) {
  const auto eps = Rational::make(3, 10);
  const auto sols = kronecker_search(6, 5, eps, 2000);
  ASSERT_FALSE(sols.empty());
  for (const auto& s : sols) {
    for (const auto& f : s.factors) {
      const BigInt pr = big_pow(f.prime, f.r);
      const BigInt ql = big_pow(5, s.l);
      ASSERT_TRUE(pr > ql);
      ASSERT_TRUE(pr / f.prime <= ql);
      ASSERT_TRUE(big_pow(f.prime, f.r * eps.den) < big_pow(5, s.l * eps.den) * big_pow(f.prime, eps.num));
    }
  }
  // Every l in range that passes the exact check must be found.
  std::size_t expected = 0;
  for (std::int64_t l = 1; l <= 2000; ++l) expected += make_solution(6, 5, l, eps).accepted ? 1 : 0;
  EXPECT_EQ(sols.size(), expected);
}

TEST(Construction, SixFiveOne) {
  const auto c = construct_low_degree(6, 5, 1);
  EXPECT_EQ(c.profile, families::exact(10, 5));
  ASSERT_EQ(c.factors.size(), 2U);
  EXPECT_EQ(c.factors[0].power, 8);
  EXPECT_TRUE(c.factors[0].periodic);
  EXPECT_EQ(c.factors[0].degree_bound, 7);
  EXPECT_EQ(c.factors[1].power, 9);
  EXPECT_TRUE(c.factors[1].periodic);
  EXPECT_EQ(c.factors[1].degree_bound, 8);
  EXPECT_EQ(c.degree_bound, 8);
  ASSERT_TRUE(c.brute_degree.has_value());
  EXPECT_EQ(*c.brute_degree, oracle_degree(c.profile, 6));
  EXPECT_LE(*c.brute_degree, 8);
  EXPECT_LE(oracle_degree(c.profile, 2), 7);
  EXPECT_LE(oracle_degree(c.profile, 3), 8);
  EXPECT_TRUE(c.consistent);
}

TEST(Construction, LargerAndRejected) {
  const auto c = construct_low_degree(6, 5, 2);
  EXPECT_EQ(c.profile.arity(), 50);
  EXPECT_EQ(c.factors[0].power, 32);
  EXPECT_EQ(c.factors[1].power, 27);
  EXPECT_EQ(c.degree_bound, 31);
  EXPECT_TRUE(c.consistent);
  auto bad = make_solution(6, 5, 1);
  bad.factors[0].r = 2;
  bad.factors[0].ratio_num = 4;
  EXPECT_THROW(construct_low_degree(bad), std::invalid_argument);
  EXPECT_THROW(construct_low_degree(6, 5, 5), std::out_of_range);
}

TEST(Embedding, Examples) {
  const auto a = embed_symmetric_search(families::and_fn(4).expand());
  EXPECT_EQ(a.restriction.kept_count(), 4);
  EXPECT_EQ(a.profile.to_text(), "s:00001");
  TruthTable f(3);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const bool x1 = x & 1U;
    const bool x2 = (x >> 1) & 1U;
    const bool x3 = (x >> 2) & 1U;
    f.set(x, x1 != (x2 && x3));
  }
  const auto b = embed_symmetric_search(f);
  EXPECT_GE(b.restriction.kept_count(), 2);
  const auto g = restrict(f, b.restriction);
  const auto prof = symmetric_profile(g);
  ASSERT_TRUE(std::holds_alternative<SymmetricProfile>(prof));
  EXPECT_EQ(std::get<SymmetricProfile>(prof), b.profile);
  EXPECT_FALSE(b.profile.is_constant());
  EXPECT_THROW(embed_symmetric_search(TruthTable(3)), std::invalid_argument);
}

TEST(Embedding, MatchesExhaustiveOptimumSmall) {
  // For n <= 3 compare the kept size against a direct search over all
  // restrictions.
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (std::uint64_t{1} << n)); ++code) {
      TruthTable f(n);
      for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, (code >> x) & 1U);
      if (!is_non_degenerate(f)) continue;
      int best = 0;
      for (std::uint32_t kept = 1; kept < (1U << n); ++kept) {
        const std::uint32_t free_mask = ((1U << n) - 1) & ~kept;
        for (std::uint32_t asg = free_mask;; asg = (asg - 1) & free_mask) {
          std::vector<int> ks;
          std::vector<std::pair<int, int>> fx;
          for (int i = 0; i < n; ++i) {
            if ((kept >> i) & 1U) {
              ks.push_back(i + 1);
            } else {
              fx.emplace_back(i + 1, (asg >> i) & 1U);
            }
          }
          const auto r = symmetric_profile(restrict(f, Restriction::make(n, ks, fx)));
          if (std::holds_alternative<SymmetricProfile>(r) && !std::get<SymmetricProfile>(r).is_constant()) {
            best = std::max(best, static_cast<int>(ks.size()));
          }
          if (asg == 0) break;
        }
      }
      ASSERT_EQ(embed_symmetric_search(f).restriction.kept_count(), best) << f.to_text();
    }
  }
}

TEST(Simon, Examples) {
  EXPECT_TRUE(simon_check(families::or_fn(8).expand()));
  EXPECT_TRUE(simon_check(families::parity(4).expand()));
  EXPECT_THROW(simon_check(TruthTable(4)), std::invalid_argument);
  EXPECT_TRUE(verify_simon(4).pass);
}

TEST(Suites, SmallGridsPass) {
  EXPECT_TRUE(verify_wilson(2, 1, 3, 8).pass);
  EXPECT_TRUE(verify_wilson(3, 2, 2, 10).pass);
  EXPECT_TRUE(verify_mod_degree(3, 1, 2).pass);
  EXPECT_TRUE(verify_mod_degree(2, 2, 3).pass);
  const std::vector<std::int64_t> ms{6, 12};
  EXPECT_TRUE(verify_crt(ms, 20, 8, 1).pass);
  EXPECT_TRUE(verify_embedding(3, 30, 8, 2).pass);
}

TEST(Suites, DeterministicAcrossJobs) {
  SuiteOptions one;
  SuiteOptions four;
  four.jobs = 4;
  EXPECT_EQ(to_json(verify_pq_bound(2, 3, 12, one)).dump(), to_json(verify_pq_bound(2, 3, 12, four)).dump());
  EXPECT_EQ(to_json(verify_pk_bound(2, 3, 3, one)).dump(), to_json(verify_pk_bound(2, 3, 3, four)).dump());
  EXPECT_EQ(to_json(verify_lowdeg(2, 2, 2, 11, one)).dump(), to_json(verify_lowdeg(2, 2, 2, 11, four)).dump());
  EXPECT_EQ(to_json(min_degree_search(11, 10, one)).dump(), to_json(min_degree_search(11, 10, four)).dump());
}

TEST(Suites, OutOfCaps) {
  EXPECT_THROW(verify_pk_bound(2, 3, 21), std::out_of_range);
  EXPECT_THROW(verify_pq_bound(2, 3, 19), std::out_of_range);
}
