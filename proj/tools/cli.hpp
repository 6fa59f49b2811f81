#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modeg/boolfn.hpp"

namespace modeg::cli {

enum ExitCode : int {
  kPass = 0,
  kAssertionFailed = 1,
  kUsage = 2,
  kUnknownSuite = 3,
  kOutOfCaps = 4,
  kIoError = 5,
};

using Function = std::variant<TruthTable, SymmetricProfile>;

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// `n:HEX`, `s:BITS`, or a builder such as `parity(4)`, `nae(3)`,
/// `mod(6,0,3)`, `exact(10,5)`, `or(2)`, `and(3)`.
Function parse_function(std::string_view spec);

struct Command {
  std::string verb;
  /// Function spec, suite name, search kind or matrix kind.
  std::string target;
  std::map<std::string, std::string> params;
  std::string format = "json";
  /// Empty for standard output.
  std::string out;
};

struct Outcome {
  int exit_code = kPass;
  std::string output;
};

/// Runs a parsed command. Parameter problems are reported through the
/// returned exit code, never thrown.
Outcome run(const Command& cmd);

/// Full command-line entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace modeg::cli
