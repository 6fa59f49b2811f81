#include "modeg/mahler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "modeg/periodicity.hpp"

namespace modeg {

int MahlerExpansion::degree() const {
  const int top = std::min(arity, truncation());
  for (int l = top; l > 0; --l) {
    if (coeffs[l] != 0) return l;
  }
  return 0;
}

std::int64_t MahlerExpansion::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const std::int64_t b = generalized_binom(BigInt(t), static_cast<std::int64_t>(j), modulus);
    acc = static_cast<std::int64_t>(
        (static_cast<Int128>(coeffs[j]) * b + acc) % modulus);
  }
  return acc;
}

std::vector<std::int64_t> forward_differences(std::span<const std::int64_t> values,
                                              std::int64_t m) {
  std::vector<std::int64_t> a(values.begin(), values.end());
  for (auto& v : a) v = mod_floor(v, m);
  const std::size_t len = a.size();
  for (std::size_t j = 1; j < len; ++j) {
    for (std::size_t i = len - 1; i >= j; --i) {
      a[i] -= a[i - 1];
      if (a[i] < 0) a[i] += m;
    }
  }
  return a;
}

MahlerExpansion mahler_expand(const SymmetricProfile& F, const Modulus& m) {
  const int n = F.arity();
  const std::int64_t mv = m.value();
  const std::int64_t d = std::max<std::int64_t>(n, mv - 1);
  if (d > (1 << 24)) throw std::invalid_argument("mahler_expand: expansion too long");
  std::vector<std::int64_t> padded(static_cast<std::size_t>(d) + 1, 0);
  for (int t = 0; t <= n; ++t) padded[t] = F[t];
  return {mv, n, forward_differences(padded, mv)};
}

int mahler_degree(const SymmetricProfile& F, const Modulus& m) {
  // Only alpha_l with l <= n matter, and those never see the padding.
  const int n = F.arity();
  std::vector<std::int64_t> values(F.values().begin(), F.values().end());
  const auto a = forward_differences(values, m.value());
  for (int l = n; l > 0; --l) {
    if (a[l] != 0) return l;
  }
  return 0;
}

std::vector<BigInt> integer_mahler(const SymmetricProfile& F) {
  std::vector<BigInt> a(F.values().begin(), F.values().end());
  const std::size_t len = a.size();
  for (std::size_t j = 1; j < len; ++j) {
    for (std::size_t i = len - 1; i >= j; --i) a[i] -= a[i - 1];
  }
  return a;
}

int integer_degree(const SymmetricProfile& F) {
  const auto a = integer_mahler(F);
  for (int l = F.arity(); l > 0; --l) {
    if (a[l] != 0) return l;
  }
  return 0;
}

std::int64_t mod_degree(std::int64_t p, int t, int k) {
  if (t < 1 || k < 1) throw std::invalid_argument("mod_degree: t and k must be >= 1");
  return (k - 1) * euler_phi(p, t) + checked_pow(p, t) - 1;
}

ModCoefficients mod_mahler_coeffs(std::int64_t a, std::int64_t p, int t, int k,
                                  int n) {
  if (!is_prime(p)) throw std::invalid_argument("mod_mahler_coeffs: p must be prime");
  if (t < 1 || k < 1) {
    throw std::invalid_argument("mod_mahler_coeffs: t and k must be >= 1");
  }
  const std::int64_t period = checked_pow(p, t);
  if (a < 0 || a >= period) {
    throw std::invalid_argument("mod_mahler_coeffs: residue outside [0, p^t)");
  }
  const std::int64_t d = mod_degree(p, t, k);
  if (n < d) {
    throw std::invalid_argument("mod_mahler_coeffs: n = " + std::to_string(n) +
                                " below (k-1)phi(p^t)+p^t-1 = " + std::to_string(d));
  }
  const Modulus m(checked_pow(p, k));
  const auto shifted = mahler_expand(families::mod(n, a, period), m);
  const auto base = mahler_expand(families::mod(n, 0, period), m);

  ModCoefficients out;
  out.coeffs = shifted.coeffs;
  out.degree = d;
  out.top_coefficient_matches = shifted.coeffs[d] == base.coeffs[d];

  // Vandermonde shift, checked on the padding-independent range l <= n.
  out.shift_identity_holds = true;
  std::vector<std::int64_t> neg_binom(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) neg_binom[i] = generalized_binom(BigInt(-a), i, m.value());
  for (int l = 0; l <= n && out.shift_identity_holds; ++l) {
    Int128 acc = 0;
    for (int i = 0; i + l <= n; ++i) {
      acc = (acc + static_cast<Int128>(neg_binom[i]) * base.coeffs[i + l]) % m.value();
    }
    if (static_cast<std::int64_t>(acc) != shifted.coeffs[l]) out.shift_identity_holds = false;
  }
  return out;
}

WilsonCheck wilson_divisibility(const SymmetricProfile& F, std::int64_t p,
                                int t, int k) {
  if (!is_prime(p)) throw std::invalid_argument("wilson_divisibility: p must be prime");
  if (t < 1 || k < 1) {
    throw std::invalid_argument("wilson_divisibility: t and k must be >= 1");
  }
  const std::int64_t period = checked_pow(p, t);
  if (!is_periodic(F, period)) {
    throw std::invalid_argument("wilson_divisibility: profile " + F.to_text() +
                                " is not " + std::to_string(period) + "-periodic");
  }
  const int n = F.arity();
  const std::int64_t pk = checked_pow(p, k);
  const std::int64_t phi = euler_phi(p, t);
  const std::int64_t last = std::max<std::int64_t>({n, pk - 1, k * phi + period});
  if (last > (1 << 22)) throw std::invalid_argument("wilson_divisibility: too large");

  std::vector<std::int64_t> ext(static_cast<std::size_t>(last) + 1);
  for (std::int64_t i = 0; i <= last; ++i) {
    const std::int64_t r = i % period;
    ext[i] = r <= n ? F[static_cast<std::size_t>(r)] : 0;
  }
  const auto alpha = forward_differences(ext, pk);

  WilsonCheck out;
  out.degree = mahler_degree(F, Modulus(pk));
  out.degree_bound = mod_degree(p, t, k);
  out.degree_bound_holds = out.degree <= out.degree_bound;
  std::int64_t pj = 1;
  for (int j = 1; j <= k && out.divisibility_holds; ++j) {
    pj *= p;
    for (std::int64_t l = j * phi + period; l <= last; ++l) {
      if (alpha[l] % pj != 0) {
        out.divisibility_holds = false;
        out.violation = std::make_pair(static_cast<int>(l), j);
        break;
      }
    }
  }
  return out;
}

}  // namespace modeg
