#include "modeg/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace modeg {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

int parse_arity(std::string_view text, std::string_view what) {
  if (text.empty() || text.size() > 3) {
    throw std::invalid_argument(std::string(what) + ": bad arity '" +
                                std::string(text) + "'");
  }
  int n = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string(what) + ": bad arity '" +
                                  std::string(text) + "'");
    }
    n = n * 10 + (c - '0');
  }
  return n;
}

}  // namespace

// ---------------------------------------------------------------- TruthTable

TruthTable::TruthTable(int arity) : arity_(arity) {
  if (arity < 0 || arity > kMaxArity) {
    throw std::invalid_argument("truth table arity must be in [0, 24], got " +
                                std::to_string(arity));
  }
  words_.assign(std::max<std::uint64_t>(1, size() / 64), 0);
}

void TruthTable::set(std::uint64_t x, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (x & 63);
  if (value) {
    words_[x >> 6] |= mask;
  } else {
    words_[x >> 6] &= ~mask;
  }
}

TruthTable TruthTable::from_text(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("truth table: expected 'n:HEX'");
  }
  const int n = parse_arity(text.substr(0, colon), "truth table");
  TruthTable t(n);
  const std::string_view hex = text.substr(colon + 1);
  if (hex.empty()) throw std::invalid_argument("truth table: empty hex body");
  // Least significant digit is the last character.
  const std::size_t digits = hex.size();
  for (std::size_t k = 0; k < digits; ++k) {
    const int v = hex_value(hex[digits - 1 - k]);
    if (v < 0) {
      throw std::invalid_argument("truth table: bad hex digit at position " +
                                  std::to_string(colon + 1 + digits - 1 - k));
    }
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const std::uint64_t x = 4 * k + static_cast<std::uint64_t>(b);
      if (x >= t.size()) {
        throw std::invalid_argument("truth table: hex sets bit " +
                                    std::to_string(x) + " beyond 2^" +
                                    std::to_string(n));
      }
      t.set(x, true);
    }
  }
  return t;
}

std::string TruthTable::to_text() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::uint64_t digits = std::max<std::uint64_t>(1, size() / 4);
  std::string out = std::to_string(arity_) + ":";
  out.reserve(out.size() + digits);
  for (std::uint64_t k = digits; k-- > 0;) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t x = 4 * k + static_cast<std::uint64_t>(b);
      if (x < size() && (*this)[x]) v |= 1 << b;
    }
    out.push_back(kDigits[v]);
  }
  return out;
}

bool TruthTable::evaluate(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(arity_)) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(arity_) +
                                " bits, got " + std::to_string(bits.size()));
  }
  return (*this)[bits_to_input(bits)];
}

bool TruthTable::is_constant() const {
  const std::uint64_t ones = count_ones();
  return ones == 0 || ones == size();
}

std::uint64_t TruthTable::count_ones() const {
  std::uint64_t c = 0;
  if (size() < 64) {
    const std::uint64_t mask = (std::uint64_t{1} << size()) - 1;
    return static_cast<std::uint64_t>(std::popcount(words_[0] & mask));
  }
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

// ---------------------------------------------------------- SymmetricProfile

SymmetricProfile::SymmetricProfile(std::vector<std::uint8_t> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("symmetric profile needs at least one value");
  }
  for (auto v : values_) {
    if (v > 1) throw std::invalid_argument("symmetric profile entries are 0/1");
  }
}

SymmetricProfile SymmetricProfile::from_bits(int arity, std::uint64_t bits) {
  if (arity < 0 || arity > 62) {
    throw std::invalid_argument("from_bits: arity out of range");
  }
  std::vector<std::uint8_t> v(static_cast<std::size_t>(arity) + 1);
  for (int w = 0; w <= arity; ++w) v[w] = (bits >> w) & 1U;
  return SymmetricProfile(std::move(v));
}

std::uint64_t SymmetricProfile::to_bits() const {
  if (arity() > 62) throw std::out_of_range("to_bits: arity above 62");
  std::uint64_t b = 0;
  for (int w = 0; w <= arity(); ++w) b |= std::uint64_t{values_[w]} << w;
  return b;
}

SymmetricProfile SymmetricProfile::from_text(std::string_view text) {
  if (text.substr(0, 2) != "s:") {
    throw std::invalid_argument("symmetric profile: expected 's:BITSTRING'");
  }
  const std::string_view body = text.substr(2);
  if (body.empty()) {
    throw std::invalid_argument("symmetric profile: empty bit string");
  }
  std::vector<std::uint8_t> v;
  v.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1') {
      throw std::invalid_argument("symmetric profile: bad character at position " +
                                  std::to_string(i + 2));
    }
    v.push_back(body[i] == '1');
  }
  return SymmetricProfile(std::move(v));
}

std::string SymmetricProfile::to_text() const {
  std::string s = "s:";
  for (auto v : values_) s.push_back(v ? '1' : '0');
  return s;
}

bool SymmetricProfile::is_constant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](std::uint8_t v) { return v == values_.front(); });
}

TruthTable SymmetricProfile::expand() const {
  TruthTable t(arity());
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    if (values_[std::popcount(x)]) t.set(x, true);
  }
  return t;
}

SymmetricProfile SymmetricProfile::complement() const {
  std::vector<std::uint8_t> v(values_);
  for (auto& b : v) b ^= 1U;
  return SymmetricProfile(std::move(v));
}

std::variant<SymmetricProfile, AsymmetryWitness> symmetric_profile(
    const TruthTable& f) {
  const int n = f.arity();
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n) + 1);
  std::vector<std::int64_t> first(static_cast<std::size_t>(n) + 1, -1);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const int w = std::popcount(x);
    if (first[w] < 0) {
      first[w] = static_cast<std::int64_t>(x);
      values[w] = f[x];
    } else if (values[w] != f[x]) {
      return AsymmetryWitness{static_cast<std::uint64_t>(first[w]), x};
    }
  }
  return SymmetricProfile(std::move(values));
}

// --------------------------------------------------------------- Restriction

Restriction Restriction::make(int arity, std::span<const int> kept,
                              std::span<const std::pair<int, int>> fixed) {
  Restriction r;
  r.arity = arity;
  for (int i : kept) {
    if (i < 1 || i > arity) throw std::invalid_argument("restriction: bad index");
    if (r.kept >> (i - 1) & 1U) {
      throw std::invalid_argument("restriction: duplicate kept index");
    }
    r.kept |= 1U << (i - 1);
  }
  std::uint32_t fixed_mask = 0;
  for (auto [i, v] : fixed) {
    if (i < 1 || i > arity) throw std::invalid_argument("restriction: bad index");
    if (v != 0 && v != 1) throw std::invalid_argument("restriction: value not 0/1");
    if ((fixed_mask >> (i - 1)) & 1U) {
      throw std::invalid_argument("restriction: index fixed twice");
    }
    fixed_mask |= 1U << (i - 1);
    if (v) r.assignment |= 1U << (i - 1);
  }
  if (arity < 0 || arity > TruthTable::kMaxArity) {
    throw std::invalid_argument("restriction: arity out of range");
  }
  const std::uint32_t all = (1U << arity) - 1;
  if ((fixed_mask & r.kept) != 0 || (fixed_mask | r.kept) != all) {
    throw std::invalid_argument(
        "restriction: kept set and assignment must partition [n]");
  }
  return r;
}

int Restriction::kept_count() const { return std::popcount(kept); }

std::vector<int> Restriction::kept_indices() const {
  std::vector<int> out;
  for (int i = 0; i < arity; ++i) {
    if ((kept >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

void Restriction::validate() const {
  if (arity < 0 || arity > TruthTable::kMaxArity) {
    throw std::invalid_argument("restriction: arity out of range");
  }
  const std::uint32_t all = (1U << arity) - 1;
  if ((kept & ~all) != 0 || (assignment & ~all) != 0) {
    throw std::invalid_argument("restriction: index beyond arity");
  }
  if ((assignment & kept) != 0) {
    throw std::invalid_argument("restriction: kept variable also assigned");
  }
}

TruthTable restrict(const TruthTable& f, const Restriction& r) {
  if (r.arity != f.arity()) {
    throw std::invalid_argument("restrict: arity mismatch");
  }
  r.validate();
  const std::vector<int> idx = r.kept_indices();
  TruthTable g(static_cast<int>(idx.size()));
  for (std::uint64_t y = 0; y < g.size(); ++y) {
    std::uint64_t x = r.assignment;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if ((y >> j) & 1U) x |= std::uint64_t{1} << (idx[j] - 1);
    }
    g.set(y, f[x]);
  }
  return g;
}

// ------------------------------------------------------------------ measures

std::vector<int> dumb_bits(const TruthTable& f) {
  std::vector<int> out;
  for (int i = 0; i < f.arity(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    bool dumb = true;
    for (std::uint64_t x = 0; x < f.size() && dumb; ++x) {
      if (!(x & bit) && f[x] != f[x | bit]) dumb = false;
    }
    if (dumb) out.push_back(i + 1);
  }
  return out;
}

bool is_non_degenerate(const TruthTable& f) { return dumb_bits(f).empty(); }

int sensitivity_at(const TruthTable& f, std::uint64_t x) {
  int s = 0;
  for (int i = 0; i < f.arity(); ++i) {
    if (f[x] != f[x ^ (std::uint64_t{1} << i)]) ++s;
  }
  return s;
}

int sensitivity(const TruthTable& f) {
  int best = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    best = std::max(best, sensitivity_at(f, x));
  }
  return best;
}

int sensitivity(const SymmetricProfile& F) {
  // At weight w, the w one-bits flip to weight w-1 and the n-w zero-bits to w+1.
  const int n = F.arity();
  int best = 0;
  for (int w = 0; w <= n; ++w) {
    int s = 0;
    if (w > 0 && F[w] != F[w - 1]) s += w;
    if (w < n && F[w] != F[w + 1]) s += n - w;
    best = std::max(best, s);
  }
  return best;
}

std::string input_to_bits(std::uint64_t x, int arity) {
  std::string s(static_cast<std::size_t>(arity), '0');
  for (int i = 0; i < arity; ++i) {
    if ((x >> i) & 1U) s[i] = '1';
  }
  return s;
}

std::uint64_t bits_to_input(std::string_view bits) {
  if (bits.size() > 64) throw std::invalid_argument("bit string too long");
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      x |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string: bad character at position " +
                                  std::to_string(i));
    }
  }
  return x;
}

// ------------------------------------------------------------------ families

namespace families {

namespace {
std::vector<std::uint8_t> blank(int n) {
  if (n < 0) throw std::invalid_argument("family: arity must be >= 0");
  return std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1, 0);
}
}  // namespace

SymmetricProfile constant(int n, bool value) {
  auto v = blank(n);
  std::fill(v.begin(), v.end(), value ? 1 : 0);
  return SymmetricProfile(std::move(v));
}

SymmetricProfile or_fn(int n) {
  auto v = blank(n);
  for (int w = 1; w <= n; ++w) v[w] = 1;
  return SymmetricProfile(std::move(v));
}

SymmetricProfile and_fn(int n) {
  auto v = blank(n);
  v[n] = 1;
  return SymmetricProfile(std::move(v));
}

SymmetricProfile parity(int n) {
  auto v = blank(n);
  for (int w = 0; w <= n; ++w) v[w] = w & 1;
  return SymmetricProfile(std::move(v));
}

SymmetricProfile nae(int n) {
  auto v = blank(n);
  for (int w = 1; w < n; ++w) v[w] = 1;
  return SymmetricProfile(std::move(v));
}

SymmetricProfile mod(int n, std::int64_t c, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("mod: modulus must be >= 2");
  if (c < 0 || c >= m) throw std::invalid_argument("mod: residue outside [0, m)");
  if (n < m - 1) throw std::invalid_argument("mod: needs n >= m - 1");
  auto v = blank(n);
  for (int w = 0; w <= n; ++w) v[w] = (w % m == c);
  return SymmetricProfile(std::move(v));
}

SymmetricProfile exact(int n, int w) {
  if (w < 0 || w > n) throw std::invalid_argument("exact: weight outside [0, n]");
  auto v = blank(n);
  v[w] = 1;
  return SymmetricProfile(std::move(v));
}

}  // namespace families

SymmetricProfile build(Family kind, std::span<const std::int64_t> params) {
  auto need = [&](std::size_t count, const char* name) {
    if (params.size() != count) {
      throw std::invalid_argument(std::string(name) + ": expected " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  auto arity = [&](std::int64_t n) {
    if (n < 0 || n > 1 << 20) throw std::invalid_argument("family: arity out of range");
    return static_cast<int>(n);
  };
  switch (kind) {
    case Family::Constant:
      need(2, "constant");
      if (params[1] != 0 && params[1] != 1) {
        throw std::invalid_argument("constant: value must be 0 or 1");
      }
      return families::constant(arity(params[0]), params[1] == 1);
    case Family::Or:
      need(1, "or");
      return families::or_fn(arity(params[0]));
    case Family::And:
      need(1, "and");
      return families::and_fn(arity(params[0]));
    case Family::Parity:
      need(1, "parity");
      return families::parity(arity(params[0]));
    case Family::Nae:
      need(1, "nae");
      return families::nae(arity(params[0]));
    case Family::Mod:
      need(3, "mod");
      return families::mod(arity(params[0]), params[1], params[2]);
    case Family::Exact:
      need(2, "exact");
      if (params[1] < 0 || params[1] > params[0]) {
        throw std::invalid_argument("exact: weight outside [0, n]");
      }
      return families::exact(arity(params[0]), static_cast<int>(params[1]));
  }
  throw std::invalid_argument("build: unknown family");
}

}  // namespace modeg
