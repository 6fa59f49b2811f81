#include "modeg/polyrep.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace modeg {

MultilinearPoly::MultilinearPoly(int arity, std::vector<std::int64_t> coeffs,
                                 std::optional<std::int64_t> modulus)
    : arity_(arity), coeffs_(std::move(coeffs)), modulus_(modulus) {
  if (arity < 0 || arity > TruthTable::kMaxArity) {
    throw std::invalid_argument("polynomial arity out of range");
  }
  if (coeffs_.size() != (std::size_t{1} << arity)) {
    throw std::invalid_argument("polynomial needs 2^n coefficients");
  }
  if (modulus_ && *modulus_ < 2) {
    throw std::invalid_argument("polynomial modulus must be >= 2");
  }
}

int MultilinearPoly::degree() const {
  int d = 0;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s] != 0) d = std::max(d, std::popcount(s));
  }
  return d;
}

MultilinearPoly multilinear_coeffs(const TruthTable& f) {
  // |c_S| <= 2^(|S|-1), which fits int64 for n <= 24.
  const std::uint64_t size = f.size();
  std::vector<std::int64_t> c(size);
  for (std::uint64_t x = 0; x < size; ++x) c[x] = f[x];
  for (int i = 0; i < f.arity(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t x = 0; x < size; ++x) {
      if (x & bit) c[x] -= c[x ^ bit];
    }
  }
  return MultilinearPoly(f.arity(), std::move(c));
}

MultilinearPoly reduce_mod(const MultilinearPoly& p, const Modulus& m) {
  std::vector<std::int64_t> c(p.coeffs());
  for (auto& v : c) v = mod_floor(v, m.value());
  return MultilinearPoly(p.arity(), std::move(c), m.value());
}

int degree(const TruthTable& f) { return multilinear_coeffs(f).degree(); }

int degree(const TruthTable& f, const Modulus& m) {
  return degrees(f, {m}).front();
}

std::vector<int> degrees(const TruthTable& f, const std::vector<Modulus>& ms) {
  const MultilinearPoly p = multilinear_coeffs(f);
  std::vector<int> out(ms.size(), 0);
  for (std::size_t s = 0; s < p.coeffs().size(); ++s) {
    const std::int64_t c = p.coeffs()[s];
    if (c == 0) continue;
    const int w = std::popcount(s);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (w > out[k] && c % ms[k].value() != 0) out[k] = w;
    }
  }
  return out;
}

int degree_via_crt(const TruthTable& f, const Modulus& m) {
  std::vector<Modulus> parts;
  for (auto q : m.components()) parts.emplace_back(q);
  const std::vector<int> ds = degrees(f, parts);
  return ds.empty() ? 0 : *std::max_element(ds.begin(), ds.end());
}

std::int64_t evaluate_poly(const MultilinearPoly& p, std::uint64_t x) {
  if (x >= p.coeffs().size()) throw std::invalid_argument("evaluate_poly: input out of range");
  // Sum over submasks of x.
  Int128 acc = p.coeffs()[0];
  for (std::uint64_t s = x; s != 0; s = (s - 1) & x) acc += p.coeffs()[s];
  if (p.modulus()) {
    const auto m = *p.modulus();
    acc %= m;
    if (acc < 0) acc += m;
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t evaluate_poly(const MultilinearPoly& p, std::string_view bits,
                           std::optional<std::int64_t> m) {
  if (bits.size() != static_cast<std::size_t>(p.arity())) {
    throw std::invalid_argument("evaluate_poly: arity mismatch");
  }
  const std::int64_t v = evaluate_poly(p, bits_to_input(bits));
  return m ? mod_floor(v, *m) : v;
}

nlohmann::ordered_json to_json(const MultilinearPoly& p) {
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t s = 0; s < p.coeffs().size(); ++s) {
    if (p.coeffs()[s] != 0) subsets.push_back(s);
  }
  auto vars_of = [&](std::uint64_t s) {
    std::vector<int> v;
    for (int i = 0; i < p.arity(); ++i) {
      if ((s >> i) & 1U) v.push_back(i + 1);
    }
    return v;
  };
  std::sort(subsets.begin(), subsets.end(), [&](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return vars_of(a) < vars_of(b);
  });
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto s : subsets) {
    nlohmann::ordered_json t;
    t["vars"] = vars_of(s);
    t["coef"] = p.coeffs()[s];
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json j;
  j["n"] = p.arity();
  j["mod"] = p.modulus() ? nlohmann::ordered_json(*p.modulus())
                         : nlohmann::ordered_json(nullptr);
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace modeg
