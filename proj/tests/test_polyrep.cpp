#include <random>
#include <set>

#include <gtest/gtest.h>

#include "modeg/polyrep.hpp"
#include "oracles.hpp"

using namespace modeg;

namespace {

TruthTable table_of(int n, std::uint64_t code) {
  TruthTable f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, (code >> x) & 1U);
  return f;
}

TruthTable random_table(int n, std::mt19937_64& rng) {
  TruthTable f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, rng() & 1U);
  return f;
}

}  // namespace

TEST(MultilinearCoeffs, Examples) {
  // Subsets as bitmasks: {1} = 1, {2} = 2, {1,2} = 3.
  EXPECT_EQ(multilinear_coeffs(families::or_fn(2).expand()).coeffs(), (std::vector<std::int64_t>{0, 1, 1, -1}));
  EXPECT_EQ(multilinear_coeffs(families::constant(2, true).expand()).coeffs(),
            (std::vector<std::int64_t>{1, 0, 0, 0}));
  const auto par2 = families::parity(2).expand();
  EXPECT_EQ(multilinear_coeffs(par2).coeffs(), oracle::interpolation_coeffs(par2));
  EXPECT_EQ(multilinear_coeffs(par2).coeffs(), (std::vector<std::int64_t>{0, 1, 1, -2}));
}

TEST(MultilinearCoeffs, MatchesInterpolationFormula) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_table(1 + static_cast<int>(rng() % 7), rng);
    ASSERT_EQ(multilinear_coeffs(f).coeffs(), oracle::interpolation_coeffs(f)) << f.to_text();
  }
}

TEST(ReduceMod, Examples) {
  const auto or2 = multilinear_coeffs(families::or_fn(2).expand());
  EXPECT_EQ(reduce_mod(or2, Modulus(5)).coeffs(), (std::vector<std::int64_t>{0, 1, 1, 4}));
  EXPECT_EQ(reduce_mod(multilinear_coeffs(families::parity(2).expand()), Modulus(2)).coeffs(),
            (std::vector<std::int64_t>{0, 1, 1, 0}));
  const MultilinearPoly zero(3, std::vector<std::int64_t>(8, 0));
  EXPECT_EQ(reduce_mod(zero, Modulus(7)).degree(), 0);
}

TEST(Degree, ParityExamples) {
  for (int n = 1; n <= 10; ++n) {
    const auto f = families::parity(n).expand();
    EXPECT_EQ(degree(f, Modulus(2)), 1);
    EXPECT_EQ(degree(f, Modulus(3)), n);
    EXPECT_EQ(degree(f), n);
  }
  EXPECT_EQ(degree(families::or_fn(2).expand(), Modulus(5)), 2);
  EXPECT_EQ(degree(families::constant(4, true).expand(), Modulus(6)), 0);
}

TEST(DegreeViaCrt, Examples) {
  EXPECT_EQ(degree_via_crt(families::parity(3).expand(), Modulus(6)), 3);
  for (std::int64_t m : {2, 6, 12, 45}) {
    EXPECT_EQ(degree_via_crt(families::constant(3, true).expand(), Modulus(m)), 0);
  }
}

TEST(DegreeViaCrt, RandomAgreesWithDirectAndOracle) {
  std::mt19937_64 rng(5);
  const std::vector<Modulus> ms{Modulus(6), Modulus(12), Modulus(15), Modulus(45)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_table(1 + static_cast<int>(rng() % 10), rng);
    const auto direct = degrees(f, ms);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      ASSERT_EQ(degree_via_crt(f, ms[i]), direct[i]);
      ASSERT_EQ(direct[i], degree(f, ms[i]));
      if (f.arity() <= 8) ASSERT_EQ(direct[i], oracle::degree(f, ms[i].value()));
    }
  }
}

TEST(EvaluatePoly, Examples) {
  const auto p = multilinear_coeffs(families::or_fn(2).expand());
  EXPECT_EQ(evaluate_poly(p, "11"), 1);
  EXPECT_EQ(evaluate_poly(p, "00"), 0);
  EXPECT_EQ(evaluate_poly(p, "10"), 1);
  EXPECT_THROW(evaluate_poly(p, "1"), std::invalid_argument);
  const auto q = reduce_mod(p, Modulus(5));
  EXPECT_EQ(evaluate_poly(q, "11"), 1);
  EXPECT_EQ(evaluate_poly(p, "11", 7), 1);
}

TEST(EvaluatePoly, RoundTripExhaustiveSmall) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (std::uint64_t{1} << n)); ++code) {
      const auto f = table_of(n, code);
      const auto p = multilinear_coeffs(f);
      for (std::uint64_t x = 0; x < f.size(); ++x) ASSERT_EQ(evaluate_poly(p, x), f[x]);
    }
  }
}

TEST(EvaluatePoly, RoundTripRandom) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_table(1 + static_cast<int>(rng() % 10), rng);
    const auto p = multilinear_coeffs(f);
    for (std::int64_t m : {2, 6, 9}) {
      const auto pm = reduce_mod(p, Modulus(m));
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        ASSERT_EQ(evaluate_poly(p, x), f[x]);
        ASSERT_EQ(evaluate_poly(pm, x), f[x]);
      }
    }
  }
}

TEST(MultilinearCoeffs, InjectiveOnSmallArity) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<std::int64_t>> seen;
    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t code = 0; code < tables; ++code) {
      seen.insert(multilinear_coeffs(table_of(n, code)).coeffs());
    }
    EXPECT_EQ(seen.size(), tables);
  }
}

TEST(Degree, MonotoneUnderRestriction) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto f = random_table(n, rng);
    std::vector<int> kept;
    std::vector<std::pair<int, int>> fixed;
    for (int i = 1; i <= n; ++i) {
      if (rng() % 2) {
        kept.push_back(i);
      } else {
        fixed.emplace_back(i, static_cast<int>(rng() & 1U));
      }
    }
    const auto g = restrict(f, Restriction::make(n, kept, fixed));
    for (std::int64_t m = 2; m <= 12; ++m) {
      ASSERT_GE(degree(f, Modulus(m)), degree(g, Modulus(m)));
      ASSERT_LE(degree(f, Modulus(m)), degree(f));
    }
  }
}

TEST(PolyJson, OrderedTerms) {
  const auto j = to_json(multilinear_coeffs(families::or_fn(2).expand()));
  EXPECT_EQ(j.dump(), R"({"n":2,"mod":null,"terms":[{"vars":[1],"coef":1},{"vars":[2],"coef":1},{"vars":[1,2],"coef":-1}]})");
  const auto k = to_json(reduce_mod(multilinear_coeffs(families::or_fn(2).expand()), Modulus(5)));
  EXPECT_EQ(k["mod"], 5);
  EXPECT_EQ(k["terms"][2]["coef"], 4);
}
