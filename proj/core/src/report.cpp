#include "modeg/report.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modeg {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

bool Rational::le(std::int64_t a) const {
  return static_cast<Int128>(num) <= static_cast<Int128>(a) * den;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return Rational::make(v, 1);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const std::int64_t num = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument("trailing characters");
    const std::int64_t den = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument("trailing characters");
    return Rational::make(num, den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational 'a/b': '" + text + "'");
  }
}

nlohmann::ordered_json to_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num;
  j["den"] = r.den;
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["claim"] = r.claim;
  j["params"] = r.params;
  j["examined"] = r.examined;
  j["min_observed"] = r.min_observed ? nlohmann::ordered_json(*r.min_observed)
                                     : nlohmann::ordered_json(nullptr);
  if (r.max_observed) j["max_observed"] = *r.max_observed;
  j["bound"] = to_json(r.bound);
  j["witnesses"] = r.witnesses;
  j["pass"] = r.pass;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

std::string summary_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.claim << ' ' << r.params.dump()
     << " examined=" << r.examined;
  if (r.min_observed) os << " min=" << *r.min_observed;
  if (r.max_observed) os << " max=" << *r.max_observed;
  os << " bound=" << r.bound.to_string();
  if (r.counterexample) os << " counterexample=" << *r.counterexample;
  return os.str();
}

}  // namespace modeg
