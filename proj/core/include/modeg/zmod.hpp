#pragma once

// Exact modular and binomial arithmetic.
//
// Everything here is pure. Binomials are evaluated in arbitrary precision
// before any reduction, residues live in [0, m).

#include <cstdint>
#include <ostream>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace modeg {

using BigInt = boost::multiprecision::mpz_int;
/// Wide intermediate for products of two int64 residues.
__extension__ typedef __int128 Int128;

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::ostream& operator<<(std::ostream& os, const PrimePower& pp);

/// Deterministic trial division.
bool is_prime(std::int64_t n);

/// Canonical factorization with primes ascending. factorize(1) is empty.
/// Throws std::invalid_argument for m <= 0.
std::vector<PrimePower> factorize(std::int64_t m);

/// phi(p^t) = p^t - p^(t-1) for t >= 1, and 1 for t = 0.
std::int64_t euler_phi(std::int64_t p, int t);

/// base^exp, throwing std::overflow_error if the result leaves int64.
std::int64_t checked_pow(std::int64_t base, int exp);

/// Euclidean remainder in [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t mod_floor(const BigInt& a, std::int64_t m);

/// C(a, j) = a(a-1)...(a-j+1)/j! for any integer a and j >= 0.
BigInt generalized_binom(const BigInt& a, std::int64_t j);

/// C(a, j) reduced into [0, m).
std::int64_t generalized_binom(const BigInt& a, std::int64_t j, std::int64_t m);

/// C(n, k) mod p via base-p digits. Throws std::invalid_argument when p is
/// not prime.
std::int64_t lucas_binom(std::uint64_t n, std::uint64_t k, std::int64_t p);

/// An integer m >= 2 together with its factorization.
class Modulus {
 public:
  explicit Modulus(std::int64_t value);

  std::int64_t value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_prime_power() const { return factors_.size() == 1; }
  bool is_square_free() const;

  /// The prime-power components p^e, ascending by p.
  std::vector<std::int64_t> components() const;

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.value_ == b.value_;
  }

 private:
  std::int64_t value_;
  std::vector<PrimePower> factors_;
};

/// Element of Z_m, kept normalized.
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

}  // namespace modeg
