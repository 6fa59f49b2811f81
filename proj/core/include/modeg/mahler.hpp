#pragma once

// Mahler expansions of symmetric functions over Z_m.
//
// For a profile F on {0..n} and modulus m, the expansion has length
// d + 1 with d = max{n, m-1}. F is padded with zeros on n < t < m when
// n < m - 1, and alpha_j is the j-th forward difference of the padded
// profile at 0, so sum_j alpha_j C(t, j) reproduces the padded values.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modeg/boolfn.hpp"
#include "modeg/zmod.hpp"

namespace modeg {

struct MahlerExpansion {
  std::int64_t modulus = 0;
  int arity = 0;
  /// Coefficients alpha_0..alpha_d in [0, modulus).
  std::vector<std::int64_t> coeffs;

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  /// max{l <= arity : alpha_l != 0}, 0 if none. This is deg_m of the
  /// symmetric function.
  int degree() const;
  /// sum_j alpha_j C(t, j) mod m.
  std::int64_t evaluate(std::int64_t t) const;
};

/// Forward differences of the values, reduced into [0, m), in O(len^2).
std::vector<std::int64_t> forward_differences(std::span<const std::int64_t> values,
                                              std::int64_t m);

MahlerExpansion mahler_expand(const SymmetricProfile& F, const Modulus& m);
int mahler_degree(const SymmetricProfile& F, const Modulus& m);

/// Exact integer Mahler coefficients Delta^j F(0), j = 0..n.
std::vector<BigInt> integer_mahler(const SymmetricProfile& F);
/// deg(f) over Z for a symmetric f.
int integer_degree(const SymmetricProfile& F);

/// (k-1) phi(p^t) + p^t - 1, the degree of MOD^{a,p^t} over Z_{p^k}.
std::int64_t mod_degree(std::int64_t p, int t, int k);

struct ModCoefficients {
  /// Mahler expansion of MOD_n^{a,p^t} over Z_{p^k}.
  std::vector<std::int64_t> coeffs;
  /// The degree d from mod_degree.
  std::int64_t degree = 0;
  /// alpha_l^{(a)} = sum_i C(-a, i) alpha_{i+l}^{(0)} for every l <= n.
  bool shift_identity_holds = false;
  /// alpha_d^{(a)} == alpha_d^{(0)}.
  bool top_coefficient_matches = false;
};

/// Requires p prime, t, k >= 1, 0 <= a < p^t, n >= mod_degree(p, t, k).
ModCoefficients mod_mahler_coeffs(std::int64_t a, std::int64_t p, int t, int k,
                                  int n);

struct WilsonCheck {
  bool divisibility_holds = true;
  bool degree_bound_holds = true;
  int degree = 0;
  std::int64_t degree_bound = 0;
  /// First (l, j) with p^j not dividing alpha_l although l >= j phi + p^t.
  std::optional<std::pair<int, int>> violation;

  bool holds() const { return divisibility_holds && degree_bound_holds; }
};

/// Checks the divisibility pattern and degree bound for a p^t-periodic
/// profile over Z_{p^k}. Coefficients are taken from the periodic
/// extension of F (residues above n filled with 0 when p^t > n + 1), out to
/// index max{n, p^k - 1, k phi(p^t) + p^t}. Throws std::invalid_argument if
/// F is not p^t-periodic.
WilsonCheck wilson_divisibility(const SymmetricProfile& F, std::int64_t p,
                                int t, int k);

}  // namespace modeg
