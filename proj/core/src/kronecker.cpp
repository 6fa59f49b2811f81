#include "modeg/kronecker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "modeg/mahler.hpp"
#include "modeg/periodicity.hpp"

namespace modeg {

namespace {

BigInt big_pow(std::int64_t base, std::int64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

void check_setup(std::int64_t m, std::int64_t q) {
  const Modulus mod(m);
  if (!mod.is_square_free()) throw std::invalid_argument("kronecker: m must be square-free");
  if (!is_prime(q)) throw std::invalid_argument("kronecker: q must be prime");
  if (m % q == 0) throw std::invalid_argument("kronecker: q must not divide m");
}

}  // namespace

KroneckerSolution make_solution(std::int64_t m, std::int64_t q, std::int64_t l, Rational eps) {
  check_setup(m, q);
  if (l < 1) throw std::invalid_argument("kronecker: l must be >= 1");
  if (eps.num <= 0 || eps.num > eps.den) throw std::invalid_argument("kronecker: eps must lie in (0, 1]");
  KroneckerSolution s;
  s.m = m;
  s.q = q;
  s.eps = eps;
  s.l = l;
  s.accepted = true;
  const BigInt ql = big_pow(q, l);
  const Modulus mod(m);
  for (const auto& pp : mod.factors()) {
    KroneckerFactor f;
    f.prime = pp.prime;
    // Start from the floating estimate and correct it exactly.
    auto r = static_cast<std::int64_t>(std::floor(static_cast<double>(l) * std::log(static_cast<double>(q)) /
                                                  std::log(static_cast<double>(pp.prime))));
    r = std::max<std::int64_t>(r - 1, 0);
    BigInt pr = big_pow(pp.prime, r);
    while (pr <= ql) {
      pr *= pp.prime;
      ++r;
    }
    while (r > 0 && pr / pp.prime > ql) {
      pr /= pp.prime;
      --r;
    }
    f.r = r;
    // p^r and q^l are coprime, so the ratio is already reduced.
    f.ratio_num = pr;
    f.ratio_den = ql;
    // p^(r b) < q^(l b) p^a  <=>  p^r / q^l < p^(a/b).
    const BigInt lhs = big_pow(pp.prime, r * eps.den);
    const BigInt rhs = big_pow(q, l * eps.den) * big_pow(pp.prime, eps.num);
    if (!(pr > ql && lhs < rhs)) s.accepted = false;
    s.factors.push_back(std::move(f));
  }
  return s;
}

std::vector<KroneckerSolution> kronecker_search(std::int64_t m, std::int64_t q, Rational eps,
                                                std::int64_t lmax) {
  check_setup(m, q);
  if (eps.num <= 0 || eps.num >= eps.den) throw std::invalid_argument("kronecker: eps must lie in (0, 1)");
  if (lmax < 1 || lmax > kMaxKroneckerL) {
    throw std::out_of_range("kronecker: lmax must be in [1, " + std::to_string(kMaxKroneckerL) + "]");
  }
  std::vector<double> slope;
  const Modulus mod(m);
  for (const auto& pp : mod.factors()) {
    slope.push_back(std::log(static_cast<double>(q)) / std::log(static_cast<double>(pp.prime)));
  }
  const double e = static_cast<double>(eps.num) / static_cast<double>(eps.den);
  // Generous slack: anything near the boundary goes to the exact check.
  const double margin = 1e-6;
  std::vector<KroneckerSolution> out;
  for (std::int64_t l = 1; l <= lmax; ++l) {
    bool candidate = true;
    for (double a : slope) {
      const double x = static_cast<double>(l) * a;
      const double frac = x - std::floor(x);
      if (frac <= 1.0 - e - margin && frac >= margin) {
        candidate = false;
        break;
      }
    }
    if (!candidate) continue;
    auto s = make_solution(m, q, l, eps);
    if (s.accepted) out.push_back(std::move(s));
  }
  return out;
}

Construction construct_low_degree(const KroneckerSolution& sol) {
  check_setup(sol.m, sol.q);
  const BigInt ql = big_pow(sol.q, sol.l);
  if (2 * ql > kMaxConstructionArity) {
    throw std::out_of_range("construct: n = 2 q^l exceeds " + std::to_string(kMaxConstructionArity));
  }
  const auto qlv = static_cast<std::int64_t>(ql);
  const int n = static_cast<int>(2 * qlv);
  Construction c;
  c.m = sol.m;
  c.q = sol.q;
  c.l = sol.l;
  c.profile = families::exact(n, static_cast<int>(qlv));
  c.consistent = true;
  const bool brute = n <= kMaxBruteForceArity;
  for (const auto& f : sol.factors) {
    if (f.ratio_num <= ql) {
      throw std::invalid_argument("construct: " + std::to_string(f.prime) + "^" + std::to_string(f.r) +
                                  " does not exceed q^l");
    }
    FactorCertificate fc;
    fc.prime = f.prime;
    fc.r = f.r;
    fc.power = static_cast<std::int64_t>(f.ratio_num);
    fc.periodic = is_periodic(c.profile, fc.power);
    fc.degree_bound = fc.power - 1;
    if (!fc.periodic) c.consistent = false;
    if (brute) {
      fc.brute_degree = mahler_degree(c.profile, Modulus(f.prime));
      if (*fc.brute_degree > fc.degree_bound) c.consistent = false;
    }
    c.degree_bound = std::max(c.degree_bound, fc.degree_bound);
    c.factors.push_back(fc);
  }
  if (brute) {
    c.brute_degree = mahler_degree(c.profile, Modulus(sol.m));
    if (*c.brute_degree > c.degree_bound) c.consistent = false;
  }
  return c;
}

Construction construct_low_degree(std::int64_t m, std::int64_t q, std::int64_t l) {
  return construct_low_degree(make_solution(m, q, l));
}

nlohmann::ordered_json to_json(const KroneckerSolution& s) {
  nlohmann::ordered_json j;
  j["m"] = s.m;
  j["q"] = s.q;
  j["eps"] = to_json(s.eps);
  j["l"] = s.l;
  auto& fs = j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : s.factors) {
    nlohmann::ordered_json e;
    e["prime"] = f.prime;
    e["r"] = f.r;
    // Ratios can be far beyond 64 bits, so they are emitted as decimal strings.
    e["ratio"] = {{"num", to_string(f.ratio_num)}, {"den", to_string(f.ratio_den)}};
    fs.push_back(e);
  }
  j["accepted"] = s.accepted;
  return j;
}

nlohmann::ordered_json to_json(const Construction& c) {
  nlohmann::ordered_json j;
  j["m"] = c.m;
  j["q"] = c.q;
  j["l"] = c.l;
  j["n"] = c.profile.arity();
  j["function"] = "exact(" + std::to_string(c.profile.arity()) + "," + std::to_string(c.profile.arity() / 2) + ")";
  auto& fs = j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : c.factors) {
    nlohmann::ordered_json e;
    e["prime"] = f.prime;
    e["r"] = f.r;
    e["power"] = f.power;
    e["periodic"] = f.periodic;
    e["degree_bound"] = f.degree_bound;
    e["brute_degree"] = f.brute_degree ? nlohmann::ordered_json(*f.brute_degree) : nlohmann::ordered_json(nullptr);
    fs.push_back(e);
  }
  j["degree_bound"] = c.degree_bound;
  j["brute_degree"] = c.brute_degree ? nlohmann::ordered_json(*c.brute_degree) : nlohmann::ordered_json(nullptr);
  j["consistent"] = c.consistent;
  return j;
}

}  // namespace modeg
