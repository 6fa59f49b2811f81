#include "modeg/zmod.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace modeg {

std::ostream& operator<<(std::ostream& os, const PrimePower& pp) {
  return os << pp.prime << '^' << pp.exponent;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::int64_t m) {
  if (m <= 0) {
    throw std::invalid_argument("factorize: m must be >= 1, got " +
                                std::to_string(m));
  }
  std::vector<PrimePower> out;
  for (std::int64_t d = 2; d <= m / d; ++d) {
    if (m % d != 0) continue;
    PrimePower pp{d, 0};
    while (m % d == 0) {
      m /= d;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 &&
        (r > std::numeric_limits<std::int64_t>::max() / base ||
         r < std::numeric_limits<std::int64_t>::min() / base)) {
      throw std::overflow_error("checked_pow: overflow");
    }
    r *= base;
  }
  return r;
}

std::int64_t euler_phi(std::int64_t p, int t) {
  if (!is_prime(p)) {
    throw std::invalid_argument("euler_phi: " + std::to_string(p) +
                                " is not prime");
  }
  if (t < 0) throw std::invalid_argument("euler_phi: t must be >= 0");
  if (t == 0) return 1;
  return checked_pow(p, t) - checked_pow(p, t - 1);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_floor(const BigInt& a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  BigInt r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

BigInt generalized_binom(const BigInt& a, std::int64_t j) {
  if (j < 0) throw std::invalid_argument("generalized_binom: j must be >= 0");
  if (a < 0) {
    // C(-b, j) = (-1)^j C(b + j - 1, j)
    BigInt b = -a;
    BigInt r = generalized_binom(b + j - 1, j);
    return (j % 2 == 0) ? r : BigInt(-r);
  }
  if (a < j) return 0;
  BigInt r = 1;
  for (std::int64_t i = 0; i < j; ++i) {
    r *= (a - i);
    r /= (i + 1);  // exact: r is C(a, i+1) after this step
  }
  return r;
}

std::int64_t generalized_binom(const BigInt& a, std::int64_t j, std::int64_t m) {
  return mod_floor(generalized_binom(a, j), m);
}

std::int64_t lucas_binom(std::uint64_t n, std::uint64_t k, std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("lucas_binom: " + std::to_string(p) +
                                " is not prime");
  }
  const auto up = static_cast<std::uint64_t>(p);
  std::int64_t r = 1;
  while (k > 0 || n > 0) {
    const auto nd = static_cast<std::int64_t>(n % up);
    const auto kd = static_cast<std::int64_t>(k % up);
    if (kd > nd) return 0;
    r = (r * generalized_binom(BigInt(nd), kd, p)) % p;
    n /= up;
    k /= up;
  }
  return r;
}

Modulus::Modulus(std::int64_t value) : value_(value) {
  if (value < 2) {
    throw std::invalid_argument("modulus must be >= 2, got " +
                                std::to_string(value));
  }
  factors_ = factorize(value);
}

bool Modulus::is_square_free() const {
  for (const auto& f : factors_) {
    if (f.exponent > 1) return false;
  }
  return true;
}

std::vector<std::int64_t> Modulus::components() const {
  std::vector<std::int64_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(checked_pow(f.prime, f.exponent));
  return out;
}

Residue::Residue(std::int64_t value, std::int64_t modulus)
    : value_(mod_floor(value, modulus)), modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("residue modulus must be >= 2");
}

namespace {
void require_same(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("residue modulus mismatch");
  }
}
}  // namespace

Residue Residue::operator+(const Residue& o) const {
  require_same(*this, o);
  return {static_cast<std::int64_t>(
              (static_cast<Int128>(value_) + o.value_) % modulus_),
          modulus_};
}

Residue Residue::operator-(const Residue& o) const {
  require_same(*this, o);
  return {value_ - o.value_, modulus_};
}

Residue Residue::operator*(const Residue& o) const {
  require_same(*this, o);
  return {static_cast<std::int64_t>(
              (static_cast<Int128>(value_) * o.value_) % modulus_),
          modulus_};
}

Residue Residue::operator-() const { return {-value_, modulus_}; }

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus() << ')';
}

}  // namespace modeg
