#pragma once

// Boolean functions as truth tables and symmetric profiles.
//
// Conventions: variables are x_1..x_n. An input is an integer x whose bit
// (i-1) holds x_i, so table index 1 means x_1 = 1 and all others 0. Bit
// strings spell x_1 first: "10" on two variables is x_1 = 1, x_2 = 0.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace modeg {

class TruthTable {
 public:
  static constexpr int kMaxArity = 24;

  /// All-zero function on `arity` variables, 0 <= arity <= 24.
  explicit TruthTable(int arity);

  /// Parses the `n:HEX` form: HEX is the table as one hexadecimal integer
  /// whose bit x is f(x).
  static TruthTable from_text(std::string_view text);
  std::string to_text() const;

  int arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool operator[](std::uint64_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  void set(std::uint64_t x, bool value);

  /// Evaluates on a bit string spelled x_1 x_2 ... x_n.
  bool evaluate(std::string_view bits) const;

  bool is_constant() const;
  std::uint64_t count_ones() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int arity_;
  std::vector<std::uint64_t> words_;
};

/// Univariate version F of a symmetric function: F(w) is the value on inputs
/// of Hamming weight w.
class SymmetricProfile {
 public:
  SymmetricProfile() = default;
  explicit SymmetricProfile(std::vector<std::uint8_t> values);

  /// Profile whose bit w is F(w), arity n (needs n <= 62).
  static SymmetricProfile from_bits(int arity, std::uint64_t bits);
  /// Parses `s:BITSTRING` (index 0 = weight 0).
  static SymmetricProfile from_text(std::string_view text);
  std::string to_text() const;

  int arity() const { return static_cast<int>(values_.size()) - 1; }
  std::uint8_t operator[](std::size_t w) const { return values_[w]; }
  std::span<const std::uint8_t> values() const { return values_; }
  bool is_constant() const;

  /// Inverse of from_bits.
  std::uint64_t to_bits() const;

  /// The truth table f(x) = F(|x|). Throws if arity exceeds 24.
  TruthTable expand() const;

  /// Complement 1 - F.
  SymmetricProfile complement() const;

  friend bool operator==(const SymmetricProfile&,
                         const SymmetricProfile&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// Two inputs of equal weight on which f differs.
struct AsymmetryWitness {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
};

std::variant<SymmetricProfile, AsymmetryWitness> symmetric_profile(
    const TruthTable& f);

/// Keeps the variables in `kept` free and fixes the rest. Both masks use
/// bit (i-1) for x_i; `assignment` bits outside the fixed set must be 0.
struct Restriction {
  int arity = 0;
  std::uint32_t kept = 0;
  std::uint32_t assignment = 0;

  /// Builds from 1-based kept indices and (index, value) pairs.
  static Restriction make(int arity, std::span<const int> kept,
                          std::span<const std::pair<int, int>> fixed);

  int kept_count() const;
  std::vector<int> kept_indices() const;
  /// Throws std::invalid_argument if kept and assignment do not partition.
  void validate() const;
};

TruthTable restrict(const TruthTable& f, const Restriction& r);

/// 1-based indices of variables f does not depend on.
std::vector<int> dumb_bits(const TruthTable& f);
bool is_non_degenerate(const TruthTable& f);

int sensitivity(const TruthTable& f);
int sensitivity_at(const TruthTable& f, std::uint64_t x);
/// Sensitivity of the symmetric function with profile F, in O(n).
int sensitivity(const SymmetricProfile& F);

/// Formats x as a bit string x_1 ... x_n.
std::string input_to_bits(std::uint64_t x, int arity);
std::uint64_t bits_to_input(std::string_view bits);

enum class Family { Constant, Or, And, Parity, Nae, Mod, Exact };

/// Named symmetric families. Parameter lists:
///   Constant(n, v), Or(n), And(n), Parity(n), Nae(n),
///   Mod(n, c, m) with m >= 2, n >= m - 1, 0 <= c < m,
///   Exact(n, w) with 0 <= w <= n.
SymmetricProfile build(Family kind, std::span<const std::int64_t> params);

namespace families {
SymmetricProfile constant(int n, bool value);
SymmetricProfile or_fn(int n);
SymmetricProfile and_fn(int n);
SymmetricProfile parity(int n);
SymmetricProfile nae(int n);
SymmetricProfile mod(int n, std::int64_t c, std::int64_t m);
SymmetricProfile exact(int n, int w);
}  // namespace families

}  // namespace modeg
