#pragma once

// Simultaneous approximation search and the low-degree EXACT construction
// for square-free moduli.

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "modeg/boolfn.hpp"
#include "modeg/report.hpp"
#include "modeg/zmod.hpp"

namespace modeg {

constexpr std::int64_t kMaxKroneckerL = 1'000'000;
constexpr std::int64_t kMaxConstructionArity = 4096;
constexpr std::int64_t kMaxBruteForceArity = 512;

struct KroneckerFactor {
  std::int64_t prime = 0;
  /// Least r with prime^r > q^l.
  std::int64_t r = 0;
  /// prime^r / q^l in lowest terms.
  BigInt ratio_num;
  BigInt ratio_den;
};

struct KroneckerSolution {
  std::int64_t m = 0;
  std::int64_t q = 0;
  Rational eps;
  std::int64_t l = 0;
  std::vector<KroneckerFactor> factors;
  /// 1 < prime^r / q^l < prime^eps for every factor, checked exactly.
  bool accepted = false;
};

/// Exact exponents and ratios for a given l; `accepted` is evaluated
/// against eps.
KroneckerSolution make_solution(std::int64_t m, std::int64_t q, std::int64_t l,
                                Rational eps = Rational::make(1, 1));

/// Every l in [1, lmax] whose fractional parts l log q / log p_i all lie in
/// (1 - eps, 1). Candidates come from a floating-point scan and are kept only
/// after the exact check. Requires m square-free >= 2, q prime not dividing
/// m, 0 < eps < 1 and lmax <= 10^6.
std::vector<KroneckerSolution> kronecker_search(std::int64_t m, std::int64_t q, Rational eps,
                                                std::int64_t lmax);

struct FactorCertificate {
  std::int64_t prime = 0;
  std::int64_t r = 0;
  std::int64_t power = 0;
  bool periodic = false;
  /// deg_prime(f) <= power - 1.
  std::int64_t degree_bound = 0;
  std::optional<int> brute_degree;
};

struct Construction {
  std::int64_t m = 0;
  std::int64_t q = 0;
  std::int64_t l = 0;
  SymmetricProfile profile;
  std::vector<FactorCertificate> factors;
  /// max over factors of power - 1, bounding deg_m(f).
  std::int64_t degree_bound = 0;
  std::optional<int> brute_degree;
  /// Certificate premises hold and no brute-force degree exceeds its bound.
  bool consistent = false;
};

/// EXACT(q^l) on n = 2 q^l bits with its degree certificate. Degrees are
/// brute-forced when n <= 512. Throws std::out_of_range above n = 4096 and
/// std::invalid_argument when some prime^r <= q^l.
Construction construct_low_degree(const KroneckerSolution& sol);
Construction construct_low_degree(std::int64_t m, std::int64_t q, std::int64_t l);

nlohmann::ordered_json to_json(const KroneckerSolution& s);
nlohmann::ordered_json to_json(const Construction& c);

}  // namespace modeg
