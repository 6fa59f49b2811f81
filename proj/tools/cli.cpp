#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modeg/embedding.hpp"
#include "modeg/kronecker.hpp"
#include "modeg/mahler.hpp"
#include "modeg/matrices.hpp"
#include "modeg/periodicity.hpp"
#include "modeg/polyrep.hpp"
#include "modeg/suites.hpp"
#include "modeg/zmod.hpp"

namespace modeg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Failure : std::runtime_error {
  Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

[[noreturn]] void usage(const std::string& what) { throw Failure(kUsage, what); }

std::int64_t parse_int(std::string_view text, const std::string& name) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) usage("--" + name + ": not an integer: '" + std::string(text) + "'");
  return v;
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

  std::int64_t get(const std::string& name) const {
    auto it = p_.find(name);
    if (it == p_.end()) usage("missing required --" + name);
    return parse_int(it->second, name);
  }
  std::int64_t get(const std::string& name, std::int64_t fallback) const {
    auto it = p_.find(name);
    return it == p_.end() ? fallback : parse_int(it->second, name);
  }
  bool has(const std::string& name) const { return p_.count(name) != 0; }
  std::string raw(const std::string& name) const {
    auto it = p_.find(name);
    if (it == p_.end()) usage("missing required --" + name);
    return it->second;
  }
  int arity(const std::string& name = "n") const {
    const auto v = get(name);
    if (v < 1 || v > 64) throw std::out_of_range("--" + name + " out of range: " + std::to_string(v));
    return static_cast<int>(v);
  }
  std::vector<std::int64_t> moduli() const {
    std::vector<std::int64_t> out;
    if (!has("mod")) return out;
    std::stringstream ss(raw("mod"));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto m = parse_int(item, "mod");
      if (m < 2) usage("--mod: modulus must be >= 2, got " + item);
      out.push_back(m);
    }
    if (out.empty()) usage("--mod: empty list");
    return out;
  }
  SuiteOptions suite_options() const {
    SuiteOptions o;
    const auto jobs = get("jobs", 1);
    if (jobs < 1 || jobs > 256) usage("--jobs must be in [1, 256]");
    o.jobs = static_cast<unsigned>(jobs);
    return o;
  }

 private:
  const std::map<std::string, std::string>& p_;
};

std::int64_t require_prime(const Params& p, const std::string& name) {
  const auto v = p.get(name);
  if (!is_prime(v)) usage("--" + name + " must be prime, got " + std::to_string(v));
  return v;
}

int small(const Params& p, const std::string& name, std::int64_t lo, std::int64_t hi) {
  const auto v = p.get(name);
  if (v < lo || v > hi) {
    throw std::out_of_range("--" + name + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- analyze

json analyze(const Function& fn, const Params& p, std::string& text) {
  const auto moduli = p.moduli();
  std::optional<TruthTable> table;
  std::optional<SymmetricProfile> profile;
  if (const auto* t = std::get_if<TruthTable>(&fn)) {
    table = *t;
    if (t->arity() >= 1) {
      auto sp = symmetric_profile(*t);
      if (const auto* s = std::get_if<SymmetricProfile>(&sp)) profile = *s;
    }
  } else {
    profile = std::get<SymmetricProfile>(fn);
    if (profile->arity() <= 16) table = profile->expand();
  }
  const int n = table ? table->arity() : profile->arity();
  std::ostringstream os;

  json j;
  j["schema_version"] = kSchemaVersion;
  j["function"] = table ? table->to_text() : profile->to_text();
  j["n"] = n;
  j["symmetric"] = profile.has_value();
  j["profile"] = profile ? json(profile->to_text()) : json(nullptr);

  const int deg = profile ? integer_degree(*profile) : degree(*table);
  j["deg"] = deg;
  os << "deg = " << deg << "\n";

  auto& degs = j["degrees"] = json::array();
  for (auto mv : moduli) {
    const Modulus m(mv);
    const int d = profile ? mahler_degree(*profile, m) : degree(*table, m);
    degs.push_back({{"m", mv}, {"deg", d}});
    os << "deg_" << mv << " = " << d << "\n";
  }

  if (profile) {
    auto& mahler = j["mahler"] = json::array();
    for (auto mv : moduli) {
      const auto e = mahler_expand(*profile, Modulus(mv));
      mahler.push_back({{"m", mv}, {"d", e.truncation()}, {"coeffs", e.coeffs}, {"degree", e.degree()}});
      os << "alpha_" << mv << " = [";
      for (std::size_t i = 0; i < e.coeffs.size(); ++i) os << (i ? "," : "") << e.coeffs[i];
      os << "]\n";
    }
    std::vector<std::int64_t> primes;
    for (auto mv : moduli) {
      const Modulus m(mv);
      for (const auto& f : m.factors()) {
        if (std::find(primes.begin(), primes.end(), f.prime) == primes.end()) primes.push_back(f.prime);
      }
    }
    std::sort(primes.begin(), primes.end());
    auto& periods = j["periods"] = json::array();
    for (auto q : primes) {
      const auto rep = period_report(*profile, q);
      periods.push_back({{"p", q}, {"base_period", rep.base_period}, {"periods", rep.periods}});
      os << "pi_" << q << " = " << rep.base_period << "\n";
    }
  }

  if (table) {
    const int s = sensitivity(*table);
    const auto dumb = dumb_bits(*table);
    j["sensitivity"] = s;
    j["dumb_bits"] = dumb;
    os << "sensitivity = " << s << "\n";
    os << "dumb_bits = [";
    for (std::size_t i = 0; i < dumb.size(); ++i) os << (i ? "," : "") << dumb[i];
    os << "]\n";
    if (n <= 10) {
      auto& polys = j["polynomials"] = json::array();
      const auto poly = multilinear_coeffs(*table);
      polys.push_back(to_json(poly));
      for (auto mv : moduli) polys.push_back(to_json(reduce_mod(poly, Modulus(mv))));
    }
  } else {
    j["sensitivity"] = sensitivity(*profile);
    os << "sensitivity = " << sensitivity(*profile) << "\n";
  }
  text = os.str();
  return j;
}

// ----------------------------------------------------------------- verify

VerificationReport verify(const std::string& suite, const Params& p) {
  const auto opts = p.suite_options();
  if (suite == "pk_bound") {
    return verify_pk_bound(require_prime(p, "p"), small(p, "k", 1, 20), small(p, "n", 1, kMaxPkBoundArity), opts);
  }
  if (suite == "lowdeg") {
    return verify_lowdeg(require_prime(p, "p"), small(p, "k", 1, 20), small(p, "t", 1, 20),
                         small(p, "n", 1, kMaxLowdegArity), opts);
  }
  if (suite == "pq_bound") {
    return verify_pq_bound(require_prime(p, "p"), require_prime(p, "q"), small(p, "n", 1, kMaxPqBoundArity), opts);
  }
  if (suite == "period_bound") {
    return verify_period_bound(require_prime(p, "p"), small(p, "n", 1, kMaxEnumArity), opts);
  }
  if (suite == "periodicity") {
    return verify_periodicity_lemma(p.get("a"), p.get("b"), small(p, "n", 1, kMaxEnumArity), opts);
  }
  if (suite == "relations") {
    return verify_relations(require_prime(p, "p"), require_prime(p, "q"), small(p, "n", 1, kMaxEnumArity), opts);
  }
  if (suite == "wilson") {
    return verify_wilson(require_prime(p, "p"), small(p, "t", 1, 6), small(p, "k", 1, 6),
                         small(p, "n", 1, kMaxEnumArity), opts);
  }
  if (suite == "mod_degree") {
    return verify_mod_degree(require_prime(p, "p"), small(p, "t", 1, 6), small(p, "k", 1, 6));
  }
  if (suite == "matrices") return verify_matrices();
  if (suite == "simon") {
    return verify_simon(p.has("n") ? small(p, "n", 2, 4) : 4);
  }
  if (suite == "crt") {
    const auto ms = p.has("mod") ? p.moduli() : std::vector<std::int64_t>{6, 12, 15, 45};
    return verify_crt(ms, static_cast<int>(p.get("count", 200)), p.has("n") ? small(p, "n", 1, 16) : 10,
                      static_cast<std::uint64_t>(p.get("seed", 1)));
  }
  if (suite == "embedding") {
    return verify_embedding(4, static_cast<int>(p.get("count", 1000)), p.has("n") ? small(p, "n", 2, kMaxEmbedArity) : 10,
                            static_cast<std::uint64_t>(p.get("seed", 1)));
  }
  throw Failure(kUnknownSuite, "unknown suite '" + suite + "'");
}

// ------------------------------------------------------------------ matrix

std::string matrix_csv(const std::string& kind, const Params& p, const std::string& format) {
  json j;
  j["schema_version"] = kSchemaVersion;
  std::ostringstream os;
  if (kind.empty() || kind == "A" || kind == "a") {
    const auto prime = require_prime(p, "p");
    const int t = small(p, "t", 1, 8);
    const auto size = checked_pow(prime, t);
    if (size > kMaxCoeffMatrixSize) {
      throw std::out_of_range("matrix: p^t exceeds " + std::to_string(kMaxCoeffMatrixSize));
    }
    const auto A = coeff_matrix(prime, t);
    os << "# A_{" << prime << "^" << t << "} mod " << prime << "\n";
    auto& rows = j["rows"] = json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < A.cols(); ++c) {
        os << (c ? "," : "") << A(i, c);
        row.push_back(A(i, c));
      }
      os << "\n";
      rows.push_back(row);
    }
    j["kind"] = "A";
    j["p"] = prime;
    j["t"] = t;
  } else if (kind == "C" || kind == "c") {
    const int size = small(p, "n", 1, kMaxBinomialDetSize);
    const auto C = binomial_matrix_c(size);
    os << "# C_{" << size << "} over Z\n";
    auto& rows = j["rows"] = json::array();
    for (const auto& r : C) {
      json row = json::array();
      for (std::size_t c = 0; c < r.size(); ++c) {
        os << (c ? "," : "") << r[c].str();
        row.push_back(r[c].str());
      }
      os << "\n";
      rows.push_back(row);
    }
    j["kind"] = "C";
    j["size"] = size;
    j["det"] = matrix_c_det(size).str();
  } else {
    usage("matrix: kind must be A or C, got '" + kind + "'");
  }
  return format == "json" ? dump(j) : os.str();
}

Outcome dispatch(const Command& cmd) {
  const Params p(cmd.params);
  const std::string& fmt = cmd.format;
  if (fmt != "json" && fmt != "csv" && fmt != "text") usage("--format must be json, csv or text");

  if (cmd.verb == "analyze") {
    const auto fn = parse_function(cmd.target);
    std::string text;
    const auto j = analyze(fn, p, text);
    return {kPass, fmt == "text" ? text : dump(j)};
  }
  if (cmd.verb == "verify") {
    const auto r = verify(cmd.target, p);
    return {r.pass ? kPass : kAssertionFailed, fmt == "text" ? summary_line(r) + "\n" : dump(to_json(r))};
  }
  if (cmd.verb == "search") {
    if (cmd.target == "mindeg") {
      const auto ms = p.moduli();
      if (ms.size() != 1) usage("search mindeg: needs exactly one --mod");
      const auto r = min_degree_search(small(p, "n", 1, kMaxEnumArity), ms[0], p.suite_options());
      return {kPass, fmt == "text" ? summary_line(r) + "\n" : dump(to_json(r))};
    }
    if (cmd.target == "embed") {
      const auto fn = parse_function(p.raw("function"));
      TruthTable f = std::holds_alternative<TruthTable>(fn) ? std::get<TruthTable>(fn)
                                                            : std::get<SymmetricProfile>(fn).expand();
      if (f.arity() > kMaxEmbedArity) throw std::out_of_range("search embed: n exceeds 14");
      const auto e = embed_symmetric_search(f);
      json j;
      j["schema_version"] = kSchemaVersion;
      j["function"] = f.to_text();
      j["kept"] = e.restriction.kept_indices();
      auto& fixed = j["fixed"] = json::array();
      for (int i = 1; i <= f.arity(); ++i) {
        if ((e.restriction.kept >> (i - 1)) & 1U) continue;
        fixed.push_back({{"var", i}, {"value", (e.restriction.assignment >> (i - 1)) & 1U}});
      }
      j["profile"] = e.profile.to_text();
      j["method"] = e.method;
      std::string text = "kept |S| = " + std::to_string(e.restriction.kept_count()) + " profile " +
                         e.profile.to_text() + "\n";
      return {kPass, fmt == "text" ? text : dump(j)};
    }
    if (cmd.target == "kronecker") {
      const auto ms = p.moduli();
      if (ms.size() != 1) usage("search kronecker: needs exactly one --mod");
      const Rational eps = parse_rational(p.raw("eps"));
      const auto sols = kronecker_search(ms[0], require_prime(p, "q"), eps, p.get("lmax"));
      json j;
      j["schema_version"] = kSchemaVersion;
      j["count"] = sols.size();
      auto& arr = j["solutions"] = json::array();
      std::ostringstream os;
      for (const auto& s : sols) {
        arr.push_back(to_json(s));
        os << "l=" << s.l;
        for (const auto& f : s.factors) os << " " << f.prime << "^" << f.r;
        os << "\n";
      }
      return {kPass, fmt == "text" ? os.str() : dump(j)};
    }
    usage("search: kind must be mindeg, embed or kronecker");
  }
  if (cmd.verb == "construct") {
    const auto ms = p.moduli();
    if (ms.size() != 1) usage("construct: needs exactly one --mod");
    const auto c = construct_low_degree(ms[0], require_prime(p, "q"), p.get("l"));
    json j = to_json(c);
    std::string text = "EXACT(" + std::to_string(c.profile.arity() / 2) + ") on n=" +
                       std::to_string(c.profile.arity()) + " deg_" + std::to_string(c.m) +
                       " <= " + std::to_string(c.degree_bound) +
                       (c.brute_degree ? " (brute " + std::to_string(*c.brute_degree) + ")" : "") + "\n";
    return {c.consistent ? kPass : kAssertionFailed, fmt == "text" ? text : dump(j)};
  }
  if (cmd.verb == "matrix") {
    return {kPass, matrix_csv(cmd.target, p, cmd.format == "json" ? "json" : "csv")};
  }
  usage("unknown verb '" + cmd.verb + "'");
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

Function parse_function(std::string_view spec) {
  if (spec.empty()) throw ParseError(0, "empty function spec");
  if (spec.substr(0, 2) == "s:") {
    for (std::size_t i = 2; i < spec.size(); ++i) {
      if (spec[i] != '0' && spec[i] != '1') throw ParseError(i, "expected 0 or 1");
    }
    if (spec.size() < 4) throw ParseError(spec.size(), "profile needs at least two entries (n >= 1)");
    return SymmetricProfile::from_text(spec);
  }
  std::size_t i = 0;
  if (std::isdigit(static_cast<unsigned char>(spec[0]))) {
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
    if (i == spec.size() || spec[i] != ':') throw ParseError(i, "expected ':' after arity");
    if (i + 1 == spec.size()) throw ParseError(i + 1, "expected hex digits");
    for (std::size_t k = i + 1; k < spec.size(); ++k) {
      if (!std::isxdigit(static_cast<unsigned char>(spec[k]))) throw ParseError(k, "expected hex digit");
    }
    try {
      return TruthTable::from_text(spec);
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }
  while (i < spec.size() && std::isalpha(static_cast<unsigned char>(spec[i]))) ++i;
  const std::string name(spec.substr(0, i));
  static const std::map<std::string, Family> kFamilies = {
      {"parity", Family::Parity}, {"nae", Family::Nae}, {"mod", Family::Mod},
      {"exact", Family::Exact},   {"or", Family::Or},   {"and", Family::And}};
  const auto fam = kFamilies.find(name);
  if (name.empty() || fam == kFamilies.end()) throw ParseError(0, "unknown function '" + name + "'");
  if (i == spec.size() || spec[i] != '(') throw ParseError(i, "expected '('");
  const std::size_t open = i++;
  std::vector<std::int64_t> args;
  for (;;) {
    const std::size_t start = i;
    if (i < spec.size() && spec[i] == '-') ++i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(spec.data() + start, spec.data() + i, v);
    if (ec != std::errc() || ptr != spec.data() + i) throw ParseError(start, "expected integer");
    args.push_back(v);
    if (i < spec.size() && spec[i] == ',') {
      ++i;
      continue;
    }
    if (i < spec.size() && spec[i] == ')') {
      ++i;
      break;
    }
    throw ParseError(i, "expected ',' or ')'");
  }
  if (i != spec.size()) throw ParseError(i, "trailing characters");
  if (!args.empty() && (args[0] < 1 || args[0] > 4096)) throw ParseError(open + 1, "n must be in [1, 4096]");
  try {
    return build(fam->second, args);
  } catch (const std::invalid_argument& e) {
    throw ParseError(open, e.what());
  }
}

Outcome run(const Command& cmd) {
  Outcome o;
  try {
    o = dispatch(cmd);
  } catch (const Failure& f) {
    return {f.code, std::string("error: ") + f.what() + "\n"};
  } catch (const std::out_of_range& e) {
    return {kOutOfCaps, std::string("error: ") + e.what() + "\n"};
  } catch (const std::overflow_error& e) {
    return {kOutOfCaps, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kUsage, std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kUsage, std::string("error: ") + e.what() + "\n"};
  }
  if (!cmd.out.empty()) {
    std::ofstream file(cmd.out, std::ios::binary);
    if (!file || !(file << o.output) || !file.flush()) {
      return {kIoError, "error: cannot write '" + cmd.out + "'\n"};
    }
    o.output.clear();
  }
  return o;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modular degrees of Boolean functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "modeg 0.1.0");

  Command cmd;
  std::map<std::string, std::string> values;
  static const char* kFlags[] = {"mod", "p", "q", "k", "t", "n", "eps", "lmax", "jobs",
                                 "a", "b", "l", "count", "seed", "function"};

  auto add_common = [&](CLI::App* sub) {
    for (const char* name : kFlags) {
      sub->add_option_function<std::string>(
          std::string("--") + name, [&values, name](const std::string& v) { values[name] = v; });
    }
    sub->add_option("--format", cmd.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cmd.out, "Write output to a file");
  };

  auto* analyze = app.add_subcommand("analyze", "Degrees, Mahler coefficients, periods, sensitivity");
  analyze->add_option("spec", cmd.target, "n:HEX, s:BITS or builder")->required();
  add_common(analyze);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cmd.target,
                     "pk_bound, lowdeg, pq_bound, period_bound, periodicity, matrices, relations, "
                     "simon, mod_degree, wilson, crt, embedding")
      ->required();
  add_common(verify);
  auto* search = app.add_subcommand("search", "mindeg, embed or kronecker search");
  search->add_option("kind", cmd.target)->required();
  add_common(search);
  auto* construct = app.add_subcommand("construct", "Low-degree EXACT construction");
  add_common(construct);
  auto* matrix = app.add_subcommand("matrix", "Emit A_{p^t} (default) or C");
  matrix->add_option("kind", cmd.target, "A or C");
  add_common(matrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto* sub : app.get_subcommands()) cmd.verb = sub->get_name();
  if (cmd.verb == "matrix" && !matrix->count("--format")) cmd.format = "csv";
  cmd.params = values;
  const auto o = run(cmd);
  (o.exit_code == kPass || o.exit_code == kAssertionFailed ? out : err) << o.output;
  return o.exit_code;
}

}  // namespace modeg::cli
