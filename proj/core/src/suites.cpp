#include "modeg/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "modeg/mahler.hpp"
#include "modeg/matrices.hpp"
#include "modeg/periodicity.hpp"
#include "modeg/polyrep.hpp"
#include "modeg/profile_enum.hpp"
#include "modeg/zmod.hpp"

namespace modeg {

namespace {

// Running min/max over keyed observations plus the first violation. Keys
// arrive in ascending order inside a chunk and chunks merge in order.
struct Tally {
  std::uint64_t examined = 0;
  std::optional<std::int64_t> min;
  std::optional<std::int64_t> max;
  std::vector<std::uint64_t> min_keys;
  std::optional<std::uint64_t> counterexample;
  std::uint64_t violations = 0;

  void observe(std::uint64_t key, std::int64_t value, std::size_t cap) {
    ++examined;
    if (!max || value > *max) max = value;
    if (!min || value < *min) {
      min = value;
      min_keys.clear();
    }
    if (value == *min && min_keys.size() < cap) min_keys.push_back(key);
  }

  void violate(std::uint64_t key) {
    ++violations;
    if (!counterexample) counterexample = key;
  }

  void merge(const Tally& o, std::size_t cap) {
    examined += o.examined;
    violations += o.violations;
    if (!counterexample) counterexample = o.counterexample;
    if (o.max && (!max || *o.max > *max)) max = o.max;
    if (!o.min) return;
    if (!min || *o.min < *min) {
      min = o.min;
      min_keys = o.min_keys;
    } else if (*o.min == *min) {
      for (auto k : o.min_keys) {
        if (min_keys.size() >= cap) break;
        min_keys.push_back(k);
      }
    }
  }
};

using Tallies = std::vector<Tally>;
using Visitor = std::function<void(std::uint64_t, Tallies&)>;

// Runs a fresh visitor per chunk over profile integers [lo, hi).
Tallies scan(std::uint64_t lo, std::uint64_t hi, std::size_t slots, const SuiteOptions& opts,
             const std::function<Visitor()>& make_visitor) {
  auto parts = run_chunked<Tallies>(lo, hi, opts.jobs, [&](std::uint64_t a, std::uint64_t b) {
    Tallies t(slots);
    Visitor visit = make_visitor();
    for (std::uint64_t x = a; x < b; ++x) visit(x, t);
    return t;
  });
  Tallies out(slots);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < slots; ++i) out[i].merge(part[i], opts.max_witnesses);
  }
  return out;
}

void check_arity(int n, int cap, const char* who) {
  if (n < 1 || n > cap) {
    throw std::out_of_range(std::string(who) + ": n must be in [1, " + std::to_string(cap) +
                            "], got " + std::to_string(n));
  }
}

void check_prime(std::int64_t p, const char* who) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

std::string profile_text(int n, std::uint64_t bits) {
  return SymmetricProfile::from_bits(n, bits).to_text();
}

std::vector<std::string> witness_texts(int n, const Tally& t) {
  std::vector<std::string> out;
  for (auto k : t.min_keys) out.push_back(profile_text(n, k));
  return out;
}

std::uint64_t nontrivial_end(int n) { return (std::uint64_t{1} << (n + 1)) - 1; }

// Repeats the low `period` bits of `pattern` over weights 0..n.
std::uint64_t periodic_bits(std::uint64_t pattern, std::int64_t period, int n) {
  std::uint64_t bits = 0;
  for (int w = 0; w <= n; ++w) {
    if ((pattern >> (w % period)) & 1U) bits |= std::uint64_t{1} << w;
  }
  return bits;
}

// 2p deg_p - min{p n, 2(p-1) pi_p}, non-negative iff the period bound holds.
std::int64_t period_slack(std::int64_t p, int n, int deg, std::int64_t pi) {
  return 2 * p * deg - std::min<std::int64_t>(p * n, 2 * (p - 1) * pi);
}

bool gopalan_holds(std::int64_t p, int n, int deg_p, int deg_q) {
  int log2p = 0;
  while ((std::int64_t{1} << log2p) < p) ++log2p;
  // deg_q * ceil(log2 p) * deg_p * p^(2 deg_p) >= n, saturating above n.
  const std::int64_t cap = static_cast<std::int64_t>(n) + 1;
  std::int64_t prod = static_cast<std::int64_t>(deg_q) * log2p * deg_p;
  for (int i = 0; i < 2 * deg_p && prod < cap && prod > 0; ++i) prod = std::min(cap, prod * p);
  return prod >= n;
}

}  // namespace

VerificationReport min_degree_search(int n, std::int64_t m, const SuiteOptions& opts) {
  check_arity(n, kMaxEnumArity, "min_degree_search");
  const std::size_t cap = opts.max_witnesses;
  auto t = scan(1, nontrivial_end(n), 1, opts, [&] {
    auto inc = std::make_shared<IncrementalMahler>(n, m);
    return Visitor([inc, cap](std::uint64_t bits, Tallies& ts) {
      inc->advance_to(bits);
      ts[0].observe(bits, inc->degree(), cap);
    });
  });
  VerificationReport r;
  r.claim = "min_degree";
  r.params = {{"n", n}, {"m", m}};
  r.examined = t[0].examined;
  r.min_observed = t[0].min;
  r.max_observed = t[0].max;
  r.witnesses = witness_texts(n, t[0]);
  return r;
}

VerificationReport verify_pk_bound(std::int64_t p, int k, int n, const SuiteOptions& opts) {
  check_prime(p, "verify_pk_bound");
  if (k < 1) throw std::invalid_argument("verify_pk_bound: k must be >= 1");
  check_arity(n, kMaxPkBoundArity, "verify_pk_bound");
  const std::size_t cap = opts.max_witnesses;
  const std::int64_t m = checked_pow(p, k);
  const std::int64_t bound = (p - 1) * k;

  VerificationReport r;
  r.claim = "pk_bound";
  r.params = {{"p", p}, {"k", k}, {"n", n}};
  r.bound = Rational::make(bound, 1);

  std::optional<Threshold> th;
  try {
    th = threshold_n(p, k);
    r.details["threshold"] = th->value;
    r.details["mu"] = th->mu;
    r.details["clamped"] = th->clamped;
  } catch (const std::domain_error&) {
    r.details["threshold"] = nullptr;
  }
  const bool asserted = th && !th->clamped && n >= th->value;
  r.details["asserted"] = asserted;

  auto t = scan(1, nontrivial_end(n), 1, opts, [&] {
    auto inc = std::make_shared<IncrementalMahler>(n, m);
    return Visitor([inc, bound, asserted, cap](std::uint64_t bits, Tallies& ts) {
      inc->advance_to(bits);
      const int d = inc->degree();
      ts[0].observe(bits, d, cap);
      if (asserted && d < bound) ts[0].violate(bits);
    });
  });
  r.examined = t[0].examined;
  r.min_observed = t[0].min;
  r.max_observed = t[0].max;
  r.witnesses = witness_texts(n, t[0]);

  // Smallest non-constant p-periodic profile of degree exactly (p-1)k.
  const Modulus mod(m);
  const std::int64_t period = std::min<std::int64_t>(p, n + 1);
  std::optional<std::uint64_t> periodic;
  for (std::uint64_t pat = 1; pat + 1 < (std::uint64_t{1} << period); ++pat) {
    const std::uint64_t bits = periodic_bits(pat, period, n);
    if (mahler_degree(SymmetricProfile::from_bits(n, bits), mod) == bound &&
        (!periodic || bits < *periodic)) {
      periodic = bits;
    }
  }
  r.details["period_p_witness"] =
      periodic ? nlohmann::ordered_json(profile_text(n, *periodic)) : nlohmann::ordered_json(nullptr);

  if (asserted) {
    if (t[0].counterexample) {
      r.pass = false;
      r.counterexample = profile_text(n, *t[0].counterexample);
    } else if (!periodic || r.min_observed != bound) {
      r.pass = false;
    }
  }
  return r;
}

VerificationReport verify_lowdeg(std::int64_t p, int k, int t, int n, const SuiteOptions& opts) {
  check_prime(p, "verify_lowdeg");
  if (k < 1 || t < 1) throw std::invalid_argument("verify_lowdeg: k and t must be >= 1");
  check_arity(n, kMaxLowdegArity, "verify_lowdeg");
  const std::size_t cap = opts.max_witnesses;
  const std::int64_t m = checked_pow(p, k);
  const std::int64_t pt = checked_pow(p, t);
  const std::int64_t pper2_bound = (k - 2) * euler_phi(p, t) + pt;
  const bool pper2 = n >= mod_degree(p, t, k);

  // Slot 0: low degree forces period p^t, over all profiles. Slot 1: profiles with pi_p = p^t.
  auto ts = scan(1, nontrivial_end(n), 2, opts, [&] {
    auto inc = std::make_shared<IncrementalMahler>(n, m);
    return Visitor([=](std::uint64_t bits, Tallies& tl) {
      inc->advance_to(bits);
      const int d = inc->degree();
      tl[0].observe(bits, d, 0);
      if (d <= pt - 1 && !bits_periodic(bits, n, pt)) tl[0].violate(bits);
      if (pper2 && bits_base_period(bits, n, p) == pt) {
        tl[1].observe(bits, d, cap);
        if (d < pper2_bound) tl[1].violate(bits);
      }
    });
  });

  VerificationReport r;
  r.claim = "lowdeg";
  r.params = {{"p", p}, {"k", k}, {"t", t}, {"n", n}};
  r.examined = ts[0].examined;
  r.bound = Rational::make(pper2_bound, 1);
  r.min_observed = ts[1].min;
  r.max_observed = ts[0].max;
  r.witnesses = witness_texts(n, ts[1]);
  r.details["lowdeg_violations"] = ts[0].violations;
  r.details["pper2_applicable"] = pper2;
  r.details["pper2_profiles"] = ts[1].examined;
  r.details["pper2_violations"] = ts[1].violations;
  std::optional<std::uint64_t> first = ts[0].counterexample;
  if (ts[1].counterexample && (!first || *ts[1].counterexample < *first)) first = ts[1].counterexample;
  if (first) {
    r.pass = false;
    r.counterexample = profile_text(n, *first);
  }
  return r;
}

VerificationReport verify_period_bound(std::int64_t p, int n, const SuiteOptions& opts) {
  check_prime(p, "verify_period_bound");
  check_arity(n, kMaxEnumArity, "verify_period_bound");
  const std::size_t cap = opts.max_witnesses;
  auto ts = scan(1, nontrivial_end(n), 2, opts, [&] {
    auto inc = std::make_shared<IncrementalMahler>(n, p);
    return Visitor([=](std::uint64_t bits, Tallies& tl) {
      inc->advance_to(bits);
      const int d = inc->degree();
      const std::int64_t slack = period_slack(p, n, d, bits_base_period(bits, n, p));
      tl[0].observe(bits, slack, cap);
      tl[1].observe(bits, d, 0);
      if (slack < 0) tl[0].violate(bits);
    });
  });
  VerificationReport r;
  r.claim = "period_bound";
  r.params = {{"p", p}, {"n", n}};
  r.examined = ts[0].examined;
  r.min_observed = ts[0].min;
  r.max_observed = ts[0].max;
  r.bound = Rational::make(0, 1);
  r.witnesses = witness_texts(n, ts[0]);
  r.details["form"] = "2p*deg_p - min(p*n, 2(p-1)*pi_p) >= 0";
  if (ts[1].min) r.details["min_degree"] = *ts[1].min;
  if (ts[0].counterexample) {
    r.pass = false;
    r.counterexample = profile_text(n, *ts[0].counterexample);
  }
  return r;
}

VerificationReport verify_pq_bound(std::int64_t p, std::int64_t q, int n, const SuiteOptions& opts) {
  check_prime(p, "verify_pq_bound");
  check_prime(q, "verify_pq_bound");
  if (p == q) throw std::invalid_argument("verify_pq_bound: p and q must differ");
  check_arity(n, kMaxPqBoundArity, "verify_pq_bound");
  const std::size_t cap = opts.max_witnesses;
  const std::int64_t a = (p - 1) * (q - 1);
  const Rational bound = Rational::make(n * a, 2 * a + (p - 1) + (q - 1));

  // Slot 0: deg_pq. Slots 1, 2: period bound slack for p and q.
  auto ts = scan(1, nontrivial_end(n), 3, opts, [&] {
    auto ipq = std::make_shared<IncrementalMahler>(n, p * q);
    auto ip = std::make_shared<IncrementalMahler>(n, p);
    auto iq = std::make_shared<IncrementalMahler>(n, q);
    return Visitor([=](std::uint64_t bits, Tallies& tl) {
      ipq->advance_to(bits);
      ip->advance_to(bits);
      iq->advance_to(bits);
      const int d = ipq->degree();
      tl[0].observe(bits, d, cap);
      if (!bound.le(d)) tl[0].violate(bits);
      const auto sp = period_slack(p, n, ip->degree(), bits_base_period(bits, n, p));
      const auto sq = period_slack(q, n, iq->degree(), bits_base_period(bits, n, q));
      tl[1].observe(bits, sp, 0);
      tl[2].observe(bits, sq, 0);
      if (sp < 0) tl[1].violate(bits);
      if (sq < 0) tl[2].violate(bits);
    });
  });

  VerificationReport r;
  r.claim = "pq_bound";
  r.params = {{"p", p}, {"q", q}, {"n", n}};
  r.examined = ts[0].examined;
  r.min_observed = ts[0].min;
  r.max_observed = ts[0].max;
  r.bound = bound;
  r.witnesses = witness_texts(n, ts[0]);
  r.details["period_bound_p_violations"] = ts[1].violations;
  r.details["period_bound_q_violations"] = ts[2].violations;
  std::optional<std::uint64_t> first;
  for (const auto& t : ts) {
    if (t.counterexample && (!first || *t.counterexample < *first)) first = t.counterexample;
  }
  if (first) {
    r.pass = false;
    r.counterexample = profile_text(n, *first);
  }
  return r;
}

RelationCheck relation_checks(std::int64_t p, std::int64_t q, const SymmetricProfile& F) {
  check_prime(p, "relation_checks");
  check_prime(q, "relation_checks");
  if (p == q) throw std::invalid_argument("relation_checks: p and q must differ");
  if (F.is_constant()) throw std::invalid_argument("relation_checks: profile is trivial");
  RelationCheck c;
  c.deg_p = mahler_degree(F, Modulus(p));
  c.deg_q = mahler_degree(F, Modulus(q));
  const int n = F.arity();
  c.gopalan = gopalan_holds(p, n, c.deg_p, c.deg_q);
  c.li_sun = p * c.deg_p + q * c.deg_q > n;
  return c;
}

VerificationReport verify_relations(std::int64_t p, std::int64_t q, int n, const SuiteOptions& opts) {
  check_prime(p, "verify_relations");
  check_prime(q, "verify_relations");
  if (p == q) throw std::invalid_argument("verify_relations: p and q must differ");
  check_arity(n, kMaxEnumArity, "verify_relations");
  const std::size_t cap = opts.max_witnesses;
  // Slot 0: Gopalan et al. Slot 1: Li-Sun, value p deg_p + q deg_q - n - 1.
  auto ts = scan(1, nontrivial_end(n), 2, opts, [&] {
    auto ip = std::make_shared<IncrementalMahler>(n, p);
    auto iq = std::make_shared<IncrementalMahler>(n, q);
    return Visitor([=](std::uint64_t bits, Tallies& tl) {
      ip->advance_to(bits);
      iq->advance_to(bits);
      const int dp = ip->degree();
      const int dq = iq->degree();
      tl[0].observe(bits, 0, 0);
      if (!gopalan_holds(p, n, dp, dq) || !gopalan_holds(q, n, dq, dp)) tl[0].violate(bits);
      const std::int64_t slack = p * dp + q * dq - n - 1;
      tl[1].observe(bits, slack, cap);
      if (slack < 0) tl[1].violate(bits);
    });
  });
  VerificationReport r;
  r.claim = "relations";
  r.params = {{"p", p}, {"q", q}, {"n", n}};
  r.examined = ts[0].examined;
  r.min_observed = ts[1].min;
  r.max_observed = ts[1].max;
  r.bound = Rational::make(0, 1);
  r.witnesses = witness_texts(n, ts[1]);
  r.details["gopalan_violations"] = ts[0].violations;
  r.details["li_sun_violations"] = ts[1].violations;
  std::optional<std::uint64_t> first = ts[0].counterexample;
  if (ts[1].counterexample && (!first || *ts[1].counterexample < *first)) first = ts[1].counterexample;
  if (first) {
    r.pass = false;
    r.counterexample = profile_text(n, *first);
  }
  return r;
}

VerificationReport verify_periodicity_lemma(std::int64_t a, std::int64_t b, int n,
                                            const SuiteOptions& opts) {
  if (a < 1 || b < 1) throw std::invalid_argument("verify_periodicity_lemma: periods must be >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("verify_periodicity_lemma: gcd(a, b) must be 1");
  check_arity(n, kMaxEnumArity, "verify_periodicity_lemma");
  if (n < a + b - 2) throw std::invalid_argument("verify_periodicity_lemma: needs n >= a + b - 2");
  auto ts = scan(1, nontrivial_end(n), 1, opts, [&] {
    return Visitor([=](std::uint64_t bits, Tallies& tl) {
      const bool both = bits_periodic(bits, n, a) && bits_periodic(bits, n, b);
      tl[0].observe(bits, both ? 1 : 0, 0);
      if (both) tl[0].violate(bits);
    });
  });
  VerificationReport r;
  r.claim = "periodicity";
  r.params = {{"a", a}, {"b", b}, {"n", n}};
  r.examined = ts[0].examined;
  r.details["non_constant_doubly_periodic"] = ts[0].violations;
  if (ts[0].counterexample) {
    r.pass = false;
    r.counterexample = profile_text(n, *ts[0].counterexample);
  }
  return r;
}

VerificationReport verify_wilson(std::int64_t p, int t, int k, int n, const SuiteOptions& opts) {
  check_prime(p, "verify_wilson");
  if (t < 1 || k < 1) throw std::invalid_argument("verify_wilson: t and k must be >= 1");
  check_arity(n, kMaxEnumArity, "verify_wilson");
  const std::int64_t pt = checked_pow(p, t);
  const std::int64_t period = std::min<std::int64_t>(pt, n + 1);
  auto ts = scan(0, std::uint64_t{1} << period, 1, opts, [&] {
    return Visitor([=](std::uint64_t pattern, Tallies& tl) {
      const std::uint64_t bits = periodic_bits(pattern, period, n);
      const auto w = wilson_divisibility(SymmetricProfile::from_bits(n, bits), p, t, k);
      tl[0].observe(bits, w.degree, 0);
      if (!w.holds()) tl[0].violate(bits);
    });
  });
  VerificationReport r;
  r.claim = "wilson";
  r.params = {{"p", p}, {"t", t}, {"k", k}, {"n", n}};
  r.examined = ts[0].examined;
  r.min_observed = ts[0].min;
  r.max_observed = ts[0].max;
  r.bound = Rational::make(mod_degree(p, t, k), 1);
  r.details["bound_kind"] = "upper";
  if (ts[0].counterexample) {
    r.pass = false;
    r.counterexample = profile_text(n, *ts[0].counterexample);
  }
  return r;
}

VerificationReport verify_mod_degree(std::int64_t p, int t, int k) {
  check_prime(p, "verify_mod_degree");
  if (t < 1 || k < 1) throw std::invalid_argument("verify_mod_degree: t and k must be >= 1");
  const std::int64_t pt = checked_pow(p, t);
  const std::int64_t d = mod_degree(p, t, k);
  if (d > 256) throw std::out_of_range("verify_mod_degree: degree exceeds 256");
  const Modulus m(checked_pow(p, k));
  VerificationReport r;
  r.claim = "mod_degree";
  r.params = {{"p", p}, {"t", t}, {"k", k}};
  r.bound = Rational::make(d, 1);
  std::int64_t lo = INT64_MAX;
  std::int64_t hi = INT64_MIN;
  for (int n = static_cast<int>(d); n <= d + pt; ++n) {
    for (std::int64_t a = 0; a < pt; ++a) {
      const auto F = families::mod(n, a, pt);
      const int deg = mahler_degree(F, m);
      const auto mc = mod_mahler_coeffs(a, p, t, k, n);
      ++r.examined;
      lo = std::min<std::int64_t>(lo, deg);
      hi = std::max<std::int64_t>(hi, deg);
      if ((deg != d || !mc.shift_identity_holds || !mc.top_coefficient_matches) && r.pass) {
        r.pass = false;
        r.counterexample = "n=" + std::to_string(n) + " a=" + std::to_string(a) + " " + F.to_text() +
                           " deg=" + std::to_string(deg);
      }
    }
  }
  r.min_observed = lo;
  r.max_observed = hi;
  return r;
}

VerificationReport verify_simon(int max_n) {
  if (max_n < 2 || max_n > 4) throw std::out_of_range("verify_simon: max_n must be in [2, 4]");
  VerificationReport r;
  r.claim = "simon";
  r.params = {{"max_n", max_n}};
  std::optional<std::int64_t> min_s;
  for (int n = 2; n <= max_n; ++n) {
    const double ln = std::log2(static_cast<double>(n));
    const double bound = 0.5 * ln - 0.5 * std::log2(ln) + 0.5;
    r.details["bound_n" + std::to_string(n)] = bound;
    r.bound = Rational::make(std::max<std::int64_t>(r.bound.num, static_cast<std::int64_t>(std::ceil(bound - 1e-12))), 1);
    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t code = 0; code < tables; ++code) {
      TruthTable f(n);
      for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, (code >> x) & 1U);
      if (!is_non_degenerate(f)) continue;
      ++r.examined;
      const int s = sensitivity(f);
      if (!min_s || s < *min_s) min_s = s;
      if (s < bound - 1e-12 && r.pass) {
        r.pass = false;
        r.counterexample = f.to_text();
      }
    }
  }
  r.min_observed = min_s;
  return r;
}

VerificationReport verify_crt(std::span<const std::int64_t> moduli, int count, int max_n,
                              std::uint64_t seed) {
  if (max_n < 1 || max_n > 16) throw std::out_of_range("verify_crt: max_n must be in [1, 16]");
  std::vector<Modulus> ms;
  for (auto m : moduli) ms.emplace_back(m);
  VerificationReport r;
  r.claim = "crt";
  r.params = {{"moduli", std::vector<std::int64_t>(moduli.begin(), moduli.end())},
              {"count", count},
              {"max_n", max_n},
              {"seed", seed}};
  auto check = [&](const TruthTable& f) {
    const auto direct = degrees(f, ms);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      ++r.examined;
      if (degree_via_crt(f, ms[i]) != direct[i] && r.pass) {
        r.pass = false;
        r.counterexample = f.to_text() + " m=" + std::to_string(ms[i].value());
      }
    }
  };
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t code = 0; code < tables; ++code) {
      TruthTable f(n);
      for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, (code >> x) & 1U);
      check(f);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> arity(1, max_n);
  for (int i = 0; i < count; ++i) {
    TruthTable f(arity(rng));
    for (std::uint64_t x = 0; x < f.size(); ++x) f.set(x, rng() & 1U);
    check(f);
  }
  return r;
}

VerificationReport verify_matrices() {
  VerificationReport r;
  r.claim = "matrices";
  auto fail = [&](std::string what) {
    if (r.pass) {
      r.pass = false;
      r.counterexample = std::move(what);
    }
  };

  std::uint64_t tensors = 0;
  for (std::int64_t p : {2, 3, 5}) {
    for (int t : {2, 3}) {
      if (checked_pow(p, t) > 125) continue;
      ++tensors;
      const auto tc = tensor_check(p, t);
      if (!tc.equal) fail("tensor p=" + std::to_string(p) + " t=" + std::to_string(t));
      if (!coeff_matrix(p, t).is_invertible()) fail("A singular p=" + std::to_string(p) + " t=" + std::to_string(t));
    }
  }

  std::uint64_t dets = 0;
  for (int size = 1; size <= 20; ++size) {
    ++dets;
    const BigInt det = matrix_c_det(size);
    if (det != 1 && det != -1) fail("det C size=" + std::to_string(size));
  }

  std::uint64_t submatrices = 0;
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    for (std::int64_t j = 0; j < p; ++j) {
      const std::int64_t span = p - j;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << span); ++mask) {
        std::vector<std::int64_t> a;
        for (std::int64_t i = 0; i < span; ++i) {
          if ((mask >> i) & 1U) a.push_back(j + i);
        }
        ++submatrices;
        if (!binom_submatrix_invertible(p, j, a)) {
          fail("binom submatrix p=" + std::to_string(p) + " j=" + std::to_string(j) +
               " mask=" + std::to_string(mask));
        }
      }
    }
  }

  std::uint64_t apv = 0;
  for (std::int64_t p : {5, 7, 11}) {
    for (int n = 1; n < p - 1; ++n) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
        const std::uint64_t low = code & ((std::uint64_t{1} << (n + 1)) - 1);
        if (low == 0 || low == (std::uint64_t{1} << (n + 1)) - 1) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(p));
        for (std::int64_t i = 0; i < p; ++i) v[i] = (code >> i) & 1U;
        ++apv;
        try {
          apv_witness(p, n, v);
        } catch (const std::logic_error&) {
          fail("apv p=" + std::to_string(p) + " n=" + std::to_string(n) + " v=" + std::to_string(code));
        }
      }
    }
  }

  r.examined = tensors + dets + submatrices + apv;
  r.details["tensor_cases"] = tensors;
  r.details["det_sizes"] = dets;
  r.details["binom_submatrices"] = submatrices;
  r.details["apv_vectors"] = apv;
  return r;
}

}  // namespace modeg
