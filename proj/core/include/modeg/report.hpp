#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modeg/zmod.hpp"

namespace modeg {

inline constexpr const char* kSchemaVersion = "1";

/// Exact non-negative-denominator fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  /// a >= this, with a an integer.
  bool le(std::int64_t a) const;
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);

struct VerificationReport {
  std::string claim;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t examined = 0;
  std::optional<std::int64_t> min_observed;
  std::optional<std::int64_t> max_observed;
  Rational bound;
  /// Extremal instances, ascending by their enumeration key, capped.
  std::vector<std::string> witnesses;
  bool pass = true;
  /// First counterexample in enumeration order, if any.
  std::optional<std::string> counterexample;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const Rational& r);

/// One line per report: "PASS claim ..." or "FAIL claim ...".
std::string summary_line(const VerificationReport& r);

}  // namespace modeg
