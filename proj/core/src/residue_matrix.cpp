#include "modeg/matrices.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace modeg {

ResidueMatrix::ResidueMatrix(std::size_t rows, std::size_t cols, std::int64_t prime)
    : rows_(rows), cols_(cols), prime_(prime), data_(rows * cols, 0) {
  if (!is_prime(prime)) throw std::invalid_argument("ResidueMatrix: modulus must be prime");
}

std::int64_t inverse_mod(std::int64_t x, std::int64_t p) {
  std::int64_t a = mod_floor(x, p);
  if (a == 0) throw std::domain_error("inverse_mod: zero has no inverse");
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return mod_floor(old_s, p);
}

std::size_t ResidueMatrix::rank() const {
  std::vector<std::int64_t> m(data_);
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return m[i * cols_ + j]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(rank, j), at(pivot, j));
    const std::int64_t inv = inverse_mod(at(rank, col), prime_);
    for (std::size_t j = col; j < cols_; ++j) at(rank, j) = at(rank, j) * inv % prime_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || at(i, col) == 0) continue;
      const std::int64_t f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) {
        at(i, j) = mod_floor(at(i, j) - f * at(rank, j), prime_);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> ResidueMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc = (acc + (*this)(i, j) * mod_floor(v[j], prime_)) % prime_;
    }
    out[i] = acc;
  }
  return out;
}

ResidueMatrix kronecker_product(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("kronecker_product: prime mismatch");
  ResidueMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.prime());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out.set(i1 * b.rows() + i2, j1 * b.cols() + j2, a(i1, j1) * b(i2, j2));
  return out;
}

ResidueMatrix coeff_matrix(std::int64_t p, int t) {
  if (!is_prime(p)) throw std::invalid_argument("coeff_matrix: p must be prime");
  if (t < 1) throw std::invalid_argument("coeff_matrix: t must be >= 1");
  std::int64_t size = 1;
  for (int i = 0; i < t; ++i) {
    size *= p;
    if (size > kMaxCoeffMatrixSize) {
      throw std::out_of_range("coeff_matrix: p^t exceeds " +
                              std::to_string(kMaxCoeffMatrixSize));
    }
  }
  // Entries come from Pascal's rule mod p, independent of Lucas's theorem.
  const auto n = static_cast<std::size_t>(size);
  std::vector<std::vector<std::int64_t>> pascal(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    pascal[r][0] = 1;
    for (std::size_t c = 1; c <= r; ++c) {
      pascal[r][c] = (pascal[r - 1][c - 1] + (c < r ? pascal[r - 1][c] : 0)) % p;
    }
  }
  ResidueMatrix a(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.set(i, j, pascal[n - 1 - j][n - 1 - i]);
    }
  }
  return a;
}

TensorCheck tensor_check(std::int64_t p, int t) {
  if (t < 2) throw std::invalid_argument("tensor_check: t must be >= 2");
  const ResidueMatrix full = coeff_matrix(p, t);
  const ResidueMatrix base = coeff_matrix(p, 1);
  ResidueMatrix power = base;
  for (int i = 1; i < t; ++i) power = kronecker_product(power, base);
  TensorCheck out;
  out.equal = true;
  for (std::size_t i = 0; i < full.rows() && out.equal; ++i) {
    for (std::size_t j = 0; j < full.cols(); ++j) {
      if (full(i, j) != power(i, j)) {
        out.equal = false;
        out.mismatch = std::make_pair(i, j);
        break;
      }
    }
  }
  return out;
}

BigInt bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: not square");
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntegerMatrix binomial_matrix_c(int size) {
  if (size < 1 || size > kMaxBinomialDetSize) {
    throw std::out_of_range("binomial_matrix_c: size must be in [1, " +
                            std::to_string(kMaxBinomialDetSize) + "]");
  }
  IntegerMatrix c(static_cast<std::size_t>(size),
                  std::vector<BigInt>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) c[i][j] = generalized_binom(BigInt(-j), i);
  }
  return c;
}

BigInt matrix_c_det(int size) { return bareiss_determinant(binomial_matrix_c(size)); }

bool binom_submatrix_invertible(std::int64_t p, std::int64_t j,
                                std::span<const std::int64_t> a) {
  if (!is_prime(p)) throw std::invalid_argument("binom_submatrix_invertible: p must be prime");
  if (j < 0) throw std::invalid_argument("binom_submatrix_invertible: j must be >= 0");
  if (a.empty()) throw std::invalid_argument("binom_submatrix_invertible: empty list");
  const auto k = static_cast<std::int64_t>(a.size()) - 1;
  if (j + k >= p) throw std::invalid_argument("binom_submatrix_invertible: needs j + k < p");
  std::set<std::int64_t> seen;
  for (auto v : a) {
    if (v < j || v >= p) {
      throw std::invalid_argument("binom_submatrix_invertible: entries must lie in [j, p)");
    }
    if (!seen.insert(v).second) {
      throw std::invalid_argument("binom_submatrix_invertible: entries must be distinct");
    }
  }
  const std::size_t size = a.size();
  ResidueMatrix m(size, size, p);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      m.set(r, c, lucas_binom(static_cast<std::uint64_t>(a[c]),
                              static_cast<std::uint64_t>(j) + r, p));
    }
  }
  return m.is_invertible();
}

int apv_witness(std::int64_t p, int n, std::span<const std::uint8_t> v) {
  if (!is_prime(p)) throw std::invalid_argument("apv_witness: p must be prime");
  if (n < 1 || n >= p - 1) throw std::invalid_argument("apv_witness: needs 1 <= n < p - 1");
  if (v.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("apv_witness: v must have length p");
  }
  bool varies = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 1) throw std::invalid_argument("apv_witness: v must be 0/1");
    if (i <= static_cast<std::size_t>(n) && v[i] != v[0]) varies = true;
  }
  if (!varies) throw std::invalid_argument("apv_witness: v constant on [0, n]");

  const ResidueMatrix a = coeff_matrix(p, 1);
  std::vector<std::int64_t> vv(v.begin(), v.end());
  const auto av = a.apply(vv);
  for (int l = n / 2 + 1; l <= n; ++l) {
    if (av[l] != 0) return l;
  }
  throw std::logic_error("apv_witness: no witness for p = " + std::to_string(p) +
                         ", n = " + std::to_string(n));
}

}  // namespace modeg
