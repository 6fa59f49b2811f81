#pragma once

// The unique multilinear polynomial of a Boolean function over Z and Z_m.

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "modeg/boolfn.hpp"
#include "modeg/zmod.hpp"

namespace modeg {

/// Dense coefficient array: coeffs()[S] is c_S for the subset S given as a
/// bitmask (bit i-1 for x_i). Over Z_m the coefficients lie in [0, m).
class MultilinearPoly {
 public:
  MultilinearPoly(int arity, std::vector<std::int64_t> coeffs,
                  std::optional<std::int64_t> modulus = std::nullopt);

  int arity() const { return arity_; }
  const std::optional<std::int64_t>& modulus() const { return modulus_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(std::uint64_t subset) const { return coeffs_[subset]; }

  /// Largest |S| with c_S != 0; 0 for the zero polynomial.
  int degree() const;

  friend bool operator==(const MultilinearPoly&,
                         const MultilinearPoly&) = default;

 private:
  int arity_;
  std::vector<std::int64_t> coeffs_;
  std::optional<std::int64_t> modulus_;
};

/// Integer coefficients by the in-place subset Moebius transform, O(n 2^n).
MultilinearPoly multilinear_coeffs(const TruthTable& f);

/// Coefficients reduced into [0, m).
MultilinearPoly reduce_mod(const MultilinearPoly& p, const Modulus& m);

/// deg(f) over Z.
int degree(const TruthTable& f);
/// deg_m(f).
int degree(const TruthTable& f, const Modulus& m);
/// deg_m(f) for several moduli from one transform.
std::vector<int> degrees(const TruthTable& f, const std::vector<Modulus>& ms);

/// max over prime-power components p^e of m of deg_{p^e}(f).
int degree_via_crt(const TruthTable& f, const Modulus& m);

/// Sum of c_S over S inside the support of x, reduced by the polynomial's
/// own modulus if it has one.
std::int64_t evaluate_poly(const MultilinearPoly& p, std::uint64_t x);
/// As above, x spelled x_1 ... x_n, optionally reduced mod m.
std::int64_t evaluate_poly(const MultilinearPoly& p, std::string_view bits,
                           std::optional<std::int64_t> m = std::nullopt);

/// {"n", "mod", "terms": [{"vars", "coef"}]}, zero terms omitted, terms
/// ordered by (|vars|, vars lexicographic).
nlohmann::ordered_json to_json(const MultilinearPoly& p);

}  // namespace modeg
