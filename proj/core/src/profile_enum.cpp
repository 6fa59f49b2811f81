#include "modeg/profile_enum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace modeg {

IncrementalMahler::IncrementalMahler(int n, std::int64_t m)
    : n_(n), m_(m), alpha_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0 || n > 62) throw std::invalid_argument("IncrementalMahler: n must be in [0, 62]");
  if (m < 2) throw std::invalid_argument("IncrementalMahler: modulus must be >= 2");
  // Pascal's triangle mod m, then signs.
  std::vector<std::vector<std::int64_t>> binom(
      static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int j = 0; j <= n; ++j) {
    binom[j][0] = 1 % m;
    for (int w = 1; w <= j; ++w) {
      binom[j][w] = (binom[j - 1][w - 1] + (w < j ? binom[j - 1][w] : 0)) % m;
    }
  }
  column_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int w = 0; w <= n; ++w) {
    for (int j = w; j <= n; ++j) {
      const std::int64_t b = binom[j][w];
      column_[w][j] = ((j - w) % 2 == 0 || b == 0) ? b : m - b;
    }
  }
}

void IncrementalMahler::reset(std::uint64_t bits) {
  std::fill(alpha_.begin(), alpha_.end(), 0);
  bits_ = 0;
  advance_to(bits);
}

void IncrementalMahler::advance_to(std::uint64_t bits) {
  std::uint64_t diff = bits ^ bits_;
  while (diff != 0) {
    const int w = std::countr_zero(diff);
    flip(w);
    diff &= diff - 1;
  }
}

void IncrementalMahler::flip(int w) {
  const bool adding = !((bits_ >> w) & 1U);
  bits_ ^= std::uint64_t{1} << w;
  const auto& col = column_[w];
  for (int j = w; j <= n_; ++j) {
    if (col[j] == 0) continue;
    std::int64_t v = adding ? alpha_[j] + col[j] : alpha_[j] - col[j];
    if (v >= m_) v -= m_;
    if (v < 0) v += m_;
    alpha_[j] = v;
  }
}

int IncrementalMahler::degree() const {
  for (int l = n_; l > 0; --l) {
    if (alpha_[l] != 0) return l;
  }
  return 0;
}

}  // namespace modeg
