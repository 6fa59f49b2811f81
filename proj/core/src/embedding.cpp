#include "modeg/embedding.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <variant>

namespace modeg {

namespace {

// Whether f on {base with the S bits free} depends only on the S-weight and
// is non-constant there.
bool symmetric_on(const TruthTable& f, std::uint64_t base, std::uint64_t s) {
  const int size = std::popcount(s);
  std::vector<int> cls(static_cast<std::size_t>(size) + 1, -1);
  const std::uint64_t fixed = base & ~s;
  std::uint64_t z = 0;
  do {
    const int w = std::popcount(z);
    const int v = f[fixed | z];
    if (cls[w] < 0) {
      cls[w] = v;
    } else if (cls[w] != v) {
      return false;
    }
    z = (z - s) & s;
  } while (z != 0);
  bool zero = false;
  bool one = false;
  for (int v : cls) (v ? one : zero) = true;
  return zero && one;
}

struct Best {
  std::uint64_t kept = 0;
  std::uint64_t base = 0;
  const char* method = "greedy";
};

void greedy(const TruthTable& f, Best& best) {
  const int n = f.arity();
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (std::popcount(best.kept) == n) return;
    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
      if (f[x] != f[x ^ (std::uint64_t{1} << i)]) order.push_back(i);
    }
    if (order.empty()) continue;
    for (int i = 0; i < n; ++i) {
      if (f[x] == f[x ^ (std::uint64_t{1} << i)]) order.push_back(i);
    }
    std::uint64_t s = 0;
    for (int i : order) {
      const std::uint64_t t = s | (std::uint64_t{1} << i);
      if (symmetric_on(f, x, t)) s = t;
    }
    if (std::popcount(s) > std::popcount(best.kept)) best = {s, x & ~s, "greedy"};
  }
}

void exhaustive(const TruthTable& f, Best& best) {
  const int n = f.arity();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (int size = n; size > std::popcount(best.kept); --size) {
    for (std::uint64_t s = 0; s <= all; ++s) {
      if (std::popcount(s) != size) continue;
      const std::uint64_t rest = all & ~s;
      std::uint64_t sigma = 0;
      do {
        if (symmetric_on(f, sigma, s)) {
          best = {s, sigma, "exhaustive"};
          return;
        }
        sigma = (sigma - rest) & rest;
      } while (sigma != 0);
    }
  }
}

TruthTable random_table(int n, std::mt19937_64& rng) {
  TruthTable f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, rng() & 1U);
  return f;
}

}  // namespace

Embedding embed_symmetric_search(const TruthTable& f) {
  const int n = f.arity();
  if (n < 1 || n > kMaxEmbedArity) {
    throw std::invalid_argument("embed: arity must be in [1, " + std::to_string(kMaxEmbedArity) + "]");
  }
  if (!is_non_degenerate(f)) throw std::invalid_argument("embed: function is degenerate");
  Best best;
  greedy(f, best);
  if (n <= kMaxExhaustiveEmbedArity) exhaustive(f, best);

  Embedding e;
  e.restriction.arity = n;
  e.restriction.kept = static_cast<std::uint32_t>(best.kept);
  e.restriction.assignment = static_cast<std::uint32_t>(best.base);
  e.method = best.method;
  const auto g = restrict(f, e.restriction);
  auto prof = symmetric_profile(g);
  if (!std::holds_alternative<SymmetricProfile>(prof) || std::get<SymmetricProfile>(prof).is_constant()) {
    throw std::logic_error("embed: restriction failed re-verification");
  }
  e.profile = std::get<SymmetricProfile>(prof);
  return e;
}

bool simon_check(const TruthTable& f) {
  const int n = f.arity();
  if (n < 2) throw std::invalid_argument("simon: needs n >= 2");
  if (!is_non_degenerate(f)) throw std::invalid_argument("simon: function is degenerate");
  const double ln = std::log2(static_cast<double>(n));
  const double bound = 0.5 * ln - 0.5 * std::log2(ln) + 0.5;
  return sensitivity(f) >= bound - 1e-12;
}

VerificationReport verify_embedding(int exhaustive_n, int count, int max_n, std::uint64_t seed) {
  if (exhaustive_n < 0 || exhaustive_n > 4) throw std::out_of_range("verify_embedding: exhaustive_n must be <= 4");
  if (max_n < 2 || max_n > kMaxEmbedArity) throw std::out_of_range("verify_embedding: max_n out of range");
  VerificationReport r;
  r.claim = "embedding";
  r.params = {{"exhaustive_n", exhaustive_n}, {"count", count}, {"max_n", max_n}, {"seed", seed}};
  r.bound = Rational::make(1, 1);
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  auto check = [&](const TruthTable& f) {
    ++r.examined;
    std::int64_t size = 0;
    try {
      size = embed_symmetric_search(f).restriction.kept_count();
    } catch (const std::logic_error&) {
      size = 0;
    }
    if (!lo || size < *lo) lo = size;
    if (!hi || size > *hi) hi = size;
    if (size < 1 && r.pass) {
      r.pass = false;
      r.counterexample = f.to_text();
    }
  };
  std::uint64_t exhaustive_tables = 0;
  for (int n = 1; n <= exhaustive_n; ++n) {
    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t code = 0; code < tables; ++code) {
      TruthTable f(n);
      for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, (code >> x) & 1U);
      if (!is_non_degenerate(f)) continue;
      ++exhaustive_tables;
      check(f);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> arity(2, max_n);
  for (int i = 0; i < count; ++i) {
    const int n = arity(rng);
    TruthTable f = random_table(n, rng);
    while (!is_non_degenerate(f)) f = random_table(n, rng);
    check(f);
  }
  r.min_observed = lo;
  r.max_observed = hi;
  r.details["exhaustive_tables"] = exhaustive_tables;
  r.details["random_tables"] = count;
  return r;
}

}  // namespace modeg
