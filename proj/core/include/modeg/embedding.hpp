#pragma once

// Searching for restrictions that turn a Boolean function into a
// non-trivial symmetric one.

#include <cstdint>
#include <optional>
#include <string>

#include "modeg/boolfn.hpp"
#include "modeg/report.hpp"

namespace modeg {

constexpr int kMaxEmbedArity = 14;
constexpr int kMaxExhaustiveEmbedArity = 8;

struct Embedding {
  Restriction restriction;
  SymmetricProfile profile;
  /// "greedy" or "exhaustive", whichever produced the kept set.
  std::string method;
};

/// Largest restriction found whose result is symmetric and non-constant.
/// Grows kept sets greedily from every base input (sensitive bits first) and,
/// for n <= 8, also searches all (S, sigma) exhaustively. The result is
/// re-verified. Throws std::invalid_argument for degenerate f or n > 14.
Embedding embed_symmetric_search(const TruthTable& f);

/// s(f) >= log2(n)/2 - log2(log2(n))/2 + 1/2. Requires f non-degenerate and
/// n >= 2.
bool simon_check(const TruthTable& f);

/// Embedding search over every non-degenerate table with n <= exhaustive_n
/// and `count` random non-degenerate tables with 2 <= n <= max_n.
VerificationReport verify_embedding(int exhaustive_n, int count, int max_n, std::uint64_t seed);

}  // namespace modeg
