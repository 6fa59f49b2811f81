#pragma once

// Enumeration of symmetric profiles on n bits as (n+1)-bit integers (bit w
// holds F(w)), with Mahler coefficients maintained incrementally.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace modeg {

/// alpha_0..alpha_n of the profile over Z_m, updated in O(n) per flipped bit.
/// Only the degree-relevant coefficients l <= n are kept.
class IncrementalMahler {
 public:
  IncrementalMahler(int n, std::int64_t m);

  void reset(std::uint64_t bits);
  /// Moves from the current profile to `bits`, flipping only changed entries.
  void advance_to(std::uint64_t bits);
  void flip(int w);

  int degree() const;
  std::uint64_t bits() const { return bits_; }
  const std::vector<std::int64_t>& coeffs() const { return alpha_; }

 private:
  int n_;
  std::int64_t m_;
  std::uint64_t bits_ = 0;
  std::vector<std::int64_t> alpha_;
  // column_[w][j] = (-1)^(j-w) C(j, w) mod m for j >= w.
  std::vector<std::vector<std::int64_t>> column_;
};

/// Bit-level periodicity test on an (n+1)-bit profile.
inline bool bits_periodic(std::uint64_t bits, int n, std::int64_t period) {
  if (period > n) return true;
  const int span = n + 1 - static_cast<int>(period);
  const std::uint64_t mask = (std::uint64_t{1} << span) - 1;
  return ((bits ^ (bits >> period)) & mask) == 0;
}

/// Least power of m that is a period of the (n+1)-bit profile.
inline std::int64_t bits_base_period(std::uint64_t bits, int n, std::int64_t m) {
  std::int64_t l = 1;
  while (!bits_periodic(bits, n, l)) l *= m;
  return l;
}

/// Splits [lo, hi) into a fixed number of contiguous chunks, runs
/// work(chunk_lo, chunk_hi) on up to `jobs` threads and returns the results
/// in chunk order. The split does not depend on `jobs`.
template <class Result>
std::vector<Result> run_chunked(
    std::uint64_t lo, std::uint64_t hi, unsigned jobs,
    const std::function<Result(std::uint64_t, std::uint64_t)>& work) {
  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t total = hi > lo ? hi - lo : 0;
  const std::uint64_t chunks = total == 0 ? 0 : std::min<std::uint64_t>(kChunks, total);
  std::vector<Result> results(chunks);
  if (chunks == 0) return results;
  auto bound = [&](std::uint64_t c) { return lo + total * c / chunks; };
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      results[c] = work(bound(c), bound(c + 1));
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace modeg
