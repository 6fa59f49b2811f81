#pragma once

// Exhaustive verification suites. Symmetric profiles on n bits are
// enumerated as (n+1)-bit integers in ascending order; parallel chunks are
// merged deterministically, so reports do not depend on the job count.

#include <cstdint>
#include <optional>
#include <span>

#include "modeg/boolfn.hpp"
#include "modeg/report.hpp"

namespace modeg {

struct SuiteOptions {
  unsigned jobs = 1;
  /// Cap on the number of extremal witnesses kept in a report.
  std::size_t max_witnesses = 8;
};

constexpr int kMaxPkBoundArity = 20;
constexpr int kMaxLowdegArity = 18;
constexpr int kMaxPqBoundArity = 18;
constexpr int kMaxEnumArity = 20;

/// Minimum deg_m over all non-trivial symmetric profiles on n bits.
VerificationReport min_degree_search(int n, std::int64_t m, const SuiteOptions& opts = {});

/// deg_{p^k} >= (p-1)k at n >= threshold_n(p, k), attained by a p-periodic
/// profile. Below the threshold, or where the threshold is undefined or
/// clamped, the minimum is reported without being asserted.
VerificationReport verify_pk_bound(std::int64_t p, int k, int n, const SuiteOptions& opts = {});

/// deg_{p^k} <= p^t - 1 implies p^t-periodic; and, when
/// n >= (k-1)phi(p^t) + p^t - 1, pi_p = p^t implies
/// deg_{p^k} >= (k-2)phi(p^t) + p^t.
VerificationReport verify_lowdeg(std::int64_t p, int k, int t, int n,
                                 const SuiteOptions& opts = {});

/// 2p deg_p >= min{p n, 2(p-1) pi_p}. min_observed is the least slack.
VerificationReport verify_period_bound(std::int64_t p, int n, const SuiteOptions& opts = {});

/// deg_{pq} >= n (p-1)(q-1) / (2(p-1)(q-1) + (p-1) + (q-1)), together with
/// the period bound for p and for q.
VerificationReport verify_pq_bound(std::int64_t p, std::int64_t q, int n,
                                   const SuiteOptions& opts = {});

struct RelationCheck {
  int deg_p = 0;
  int deg_q = 0;
  /// deg_q >= n / (ceil(log2 p) deg_p p^(2 deg_p)).
  bool gopalan = false;
  /// p deg_p + q deg_q > n.
  bool li_sun = false;
};

/// Throws std::invalid_argument for a constant F or p == q.
RelationCheck relation_checks(std::int64_t p, std::int64_t q, const SymmetricProfile& F);

VerificationReport verify_relations(std::int64_t p, std::int64_t q, int n,
                                    const SuiteOptions& opts = {});

/// Every a- and b-periodic profile on n bits is constant.
VerificationReport verify_periodicity_lemma(std::int64_t a, std::int64_t b, int n,
                                            const SuiteOptions& opts = {});

/// Wilson's divisibility pattern and degree bound over Z_{p^k} for all
/// p^t-periodic profiles on n bits.
VerificationReport verify_wilson(std::int64_t p, int t, int k, int n,
                                 const SuiteOptions& opts = {});

/// deg_{p^k}(MOD_n^{a,p^t}) = (k-1)phi(p^t) + p^t - 1 for every residue a and
/// d <= n <= d + p^t, with the shift identity and top coefficient checks.
VerificationReport verify_mod_degree(std::int64_t p, int t, int k);

/// Simon's sensitivity bound for all non-degenerate tables with 2 <= n <= max_n.
VerificationReport verify_simon(int max_n);

/// degree_via_crt == degree for `count` random tables with n <= max_n and
/// every table with n <= 3, for each modulus.
VerificationReport verify_crt(std::span<const std::int64_t> moduli, int count, int max_n,
                              std::uint64_t seed);

/// Tensor identity, det(C), binomial submatrix invertibility and the
/// A_p v witness over the fixed desk-scale grid.
VerificationReport verify_matrices();

}  // namespace modeg
