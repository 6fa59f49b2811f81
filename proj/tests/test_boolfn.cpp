#include <bit>
#include <random>
#include <variant>

#include <gtest/gtest.h>

#include "modeg/boolfn.hpp"

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

SymmetricProfile profile_of(const TruthTable& f) {
  auto r = symmetric_profile(f);
  EXPECT_TRUE(std::holds_alternative<SymmetricProfile>(r));
  return std::get<SymmetricProfile>(r);
}

}  // namespace

TEST(Evaluate, Examples) {
  const auto or2 = families::or_fn(2).expand();
  EXPECT_TRUE(or2.evaluate("10"));
  EXPECT_FALSE(or2.evaluate("00"));
  EXPECT_TRUE(families::parity(3).expand().evaluate("111"));
  EXPECT_THROW(or2.evaluate("1"), std::invalid_argument);
}

TEST(Evaluate, FirstCharacterIsX1) {
  // f(x) = x_1 on two variables.
  TruthTable f(2);
  f.set(1, true);
  f.set(3, true);
  EXPECT_TRUE(f.evaluate("10"));
  EXPECT_FALSE(f.evaluate("01"));
}

TEST(TextFormat, RoundTrip) {
  EXPECT_EQ(TruthTable::from_text("2:E"), families::or_fn(2).expand());
  EXPECT_EQ(families::or_fn(2).expand().to_text(), "2:E");
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 9; ++n) {
    const auto f = random_table(n, rng);
    EXPECT_EQ(TruthTable::from_text(f.to_text()), f);
  }
  EXPECT_THROW(TruthTable::from_text("2:1F"), std::invalid_argument);
  EXPECT_THROW(TruthTable::from_text("2:G"), std::invalid_argument);
  EXPECT_EQ(SymmetricProfile::from_text("s:0110"), families::nae(3));
  EXPECT_THROW(SymmetricProfile::from_text("s:012"), std::invalid_argument);
}

TEST(SymmetricProfile, Examples) {
  EXPECT_EQ(profile_of(families::nae(3).expand()).to_text(), "s:0110");
  EXPECT_EQ(profile_of(families::parity(4).expand()).to_text(), "s:01010");
  TruthTable x1(2);
  x1.set(1, true);
  x1.set(3, true);
  const auto r = symmetric_profile(x1);
  ASSERT_TRUE(std::holds_alternative<AsymmetryWitness>(r));
  const auto w = std::get<AsymmetryWitness>(r);
  EXPECT_EQ(std::popcount(w.x), std::popcount(w.y));
  EXPECT_NE(x1[w.x], x1[w.y]);
}

TEST(SymmetricProfile, RoundTripAllSmall) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
      const auto F = SymmetricProfile::from_bits(n, bits);
      ASSERT_EQ(profile_of(F.expand()), F);
      ASSERT_EQ(F.to_bits(), bits);
    }
  }
}

TEST(DumbBits, Examples) {
  TruthTable x1(2);
  x1.set(1, true);
  x1.set(3, true);
  EXPECT_EQ(dumb_bits(x1), (std::vector<int>{2}));
  EXPECT_TRUE(dumb_bits(families::or_fn(3).expand()).empty());
  EXPECT_EQ(dumb_bits(TruthTable(2)), (std::vector<int>{1, 2}));
}

TEST(DumbBits, NonDegenerateMeansEveryBitSensitive) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (std::uint64_t{1} << n)); ++code) {
      const auto f = table_of(n, code);
      if (!dumb_bits(f).empty()) continue;
      for (int i = 0; i < n; ++i) {
        bool sensitive = false;
        for (std::uint64_t x = 0; x < f.size() && !sensitive; ++x) {
          sensitive = f[x] != f[x ^ (std::uint64_t{1} << i)];
        }
        ASSERT_TRUE(sensitive) << f.to_text() << " bit " << i + 1;
      }
    }
  }
}

TEST(Restrict, Examples) {
  const auto or3 = families::or_fn(3).expand();
  const std::vector<int> kept{1, 2};
  const std::vector<std::pair<int, int>> one{{3, 1}};
  const std::vector<std::pair<int, int>> zero{{3, 0}};
  EXPECT_EQ(restrict(or3, Restriction::make(3, kept, one)), families::constant(2, true).expand());
  EXPECT_EQ(restrict(or3, Restriction::make(3, kept, zero)), families::or_fn(2).expand());
  EXPECT_EQ(restrict(families::parity(3).expand(), Restriction::make(3, kept, one)),
            families::parity(2).complement().expand());
  EXPECT_THROW(Restriction::make(3, kept, std::vector<std::pair<int, int>>{}), std::invalid_argument);
}

TEST(Restrict, ComposesWithCombinedRestriction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto f = random_table(n, rng);
    // First fix a random subset, then fix some of the survivors.
    std::vector<int> kept1;
    std::vector<std::pair<int, int>> fixed1;
    for (int i = 1; i <= n; ++i) {
      if (rng() % 3 == 0) {
        fixed1.emplace_back(i, static_cast<int>(rng() & 1U));
      } else {
        kept1.push_back(i);
      }
    }
    const auto g = restrict(f, Restriction::make(n, kept1, fixed1));
    std::vector<int> kept2;
    std::vector<std::pair<int, int>> fixed2;
    std::vector<int> kept_all;
    auto fixed_all = fixed1;
    for (std::size_t j = 0; j < kept1.size(); ++j) {
      if (rng() % 2 == 0) {
        const int v = static_cast<int>(rng() & 1U);
        fixed2.emplace_back(static_cast<int>(j) + 1, v);
        fixed_all.emplace_back(kept1[j], v);
      } else {
        kept2.push_back(static_cast<int>(j) + 1);
        kept_all.push_back(kept1[j]);
      }
    }
    const auto h = restrict(g, Restriction::make(static_cast<int>(kept1.size()), kept2, fixed2));
    EXPECT_EQ(h, restrict(f, Restriction::make(n, kept_all, fixed_all)));
  }
}

TEST(Sensitivity, Examples) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(sensitivity(families::or_fn(n).expand()), n);
    EXPECT_EQ(sensitivity_at(families::or_fn(n).expand(), 0), n);
    EXPECT_EQ(sensitivity(families::parity(n).expand()), n);
    EXPECT_EQ(sensitivity(families::constant(n, true).expand()), 0);
  }
}

TEST(Sensitivity, SymmetricShortcutMatchesTable) {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
      const auto F = SymmetricProfile::from_bits(n, bits);
      ASSERT_EQ(sensitivity(F), sensitivity(F.expand())) << F.to_text();
    }
  }
}

TEST(Build, Examples) {
  EXPECT_EQ(families::mod(4, 1, 3).to_text(), "s:01001");
  EXPECT_EQ(families::nae(4).to_text(), "s:01110");
  EXPECT_EQ(families::exact(10, 5).to_text(), "s:00000100000");
  const std::vector<std::int64_t> p{4, 1, 3};
  EXPECT_EQ(build(Family::Mod, p), families::mod(4, 1, 3));
  EXPECT_THROW(families::mod(1, 0, 3), std::invalid_argument);
  EXPECT_THROW(families::exact(3, 4), std::invalid_argument);
  EXPECT_THROW(build(Family::Parity, std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST(InputBits, RoundTrip) {
  EXPECT_EQ(input_to_bits(1, 3), "100");
  EXPECT_EQ(bits_to_input("001"), 4U);
  for (std::uint64_t x = 0; x < 64; ++x) EXPECT_EQ(bits_to_input(input_to_bits(x, 6)), x);
}
