#pragma once

#include <cstdint>
#include <vector>

#include "modeg/boolfn.hpp"

namespace modeg {

/// F(a) == F(b) whenever 0 <= a, b <= n and period | a - b.
bool is_periodic(const SymmetricProfile& F, std::int64_t period);

/// Least power of m (m^0 = 1 included) that is a period of F.
std::int64_t base_period(const SymmetricProfile& F, std::int64_t m);

struct PeriodReport {
  int arity = 0;
  std::int64_t base = 0;
  /// Every l in [1, n] that is a period.
  std::vector<std::int64_t> periods;
  std::int64_t base_period = 1;
};

PeriodReport period_report(const SymmetricProfile& F, std::int64_t m);

/// True iff F being a- and b-periodic forces F constant. Requires
/// gcd(a, b) = 1 and n >= a + b - 2 (std::invalid_argument otherwise).
bool periodicity_lemma_check(const SymmetricProfile& F, std::int64_t a,
                             std::int64_t b);

struct Threshold {
  std::int64_t value = 0;
  int mu = 0;
  /// Set when ceil(log_p((p-1)k - 1)) came out as 0 and mu was raised to 1.
  bool clamped = false;
};

/// (k-1) phi(p^mu) + p^mu - 1 with mu = ceil(log_p((p-1)k - 1)), mu >= 1.
/// Throws std::domain_error when (p-1)k < 2, where the formula is undefined.
Threshold threshold_n(std::int64_t p, int k);

}  // namespace modeg
