#include "modeg/periodicity.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "modeg/zmod.hpp"

namespace modeg {

bool is_periodic(const SymmetricProfile& F, std::int64_t period) {
  if (period < 1) throw std::invalid_argument("is_periodic: period must be >= 1");
  const std::int64_t n = F.arity();
  for (std::int64_t a = period; a <= n; ++a) {
    if (F[a] != F[a - period]) return false;
  }
  return true;
}

std::int64_t base_period(const SymmetricProfile& F, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("base_period: m must be >= 2");
  std::int64_t l = 1;
  // Any l > n is a period, so this stops by m * (n + 1).
  while (!is_periodic(F, l)) l *= m;
  return l;
}

PeriodReport period_report(const SymmetricProfile& F, std::int64_t m) {
  PeriodReport r;
  r.arity = F.arity();
  r.base = m;
  for (std::int64_t l = 1; l <= F.arity(); ++l) {
    if (is_periodic(F, l)) r.periods.push_back(l);
  }
  r.base_period = base_period(F, m);
  return r;
}

bool periodicity_lemma_check(const SymmetricProfile& F, std::int64_t a,
                             std::int64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("periodicity lemma: periods must be >= 1");
  if (std::gcd(a, b) != 1) {
    throw std::invalid_argument("periodicity lemma: gcd(a, b) must be 1");
  }
  if (F.arity() < a + b - 2) {
    throw std::invalid_argument("periodicity lemma: needs n >= a + b - 2, got n = " +
                                std::to_string(F.arity()));
  }
  if (is_periodic(F, a) && is_periodic(F, b)) return F.is_constant();
  return true;
}

Threshold threshold_n(std::int64_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("threshold_n: p must be prime");
  if (k < 1) throw std::invalid_argument("threshold_n: k must be >= 1");
  const std::int64_t arg = (p - 1) * k - 1;
  if (arg < 1) {
    throw std::domain_error("threshold_n: (p-1)k - 1 = " + std::to_string(arg) +
                            " has no logarithm");
  }
  Threshold th;
  std::int64_t power = 1;
  while (power < arg) {
    power *= p;
    ++th.mu;
  }
  if (th.mu == 0) {
    th.mu = 1;
    th.clamped = true;
  }
  th.value = (k - 1) * euler_phi(p, th.mu) + checked_pow(p, th.mu) - 1;
  return th;
}

}  // namespace modeg
