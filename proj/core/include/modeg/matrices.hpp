#pragma once

// Binomial coefficient matrices over F_p and Z.
//
// A_{p^t} collects the Mahler coefficients of MOD^{j,p^t} over Z_p column by
// column; entry (i, j) is C(p^t-1-j, p^t-1-i) mod p.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "modeg/zmod.hpp"

namespace modeg {

/// Dense row-major matrix of residues modulo a prime.
class ResidueMatrix {
 public:
  ResidueMatrix(std::size_t rows, std::size_t cols, std::int64_t prime);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t prime() const { return prime_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    data_[i * cols_ + j] = mod_floor(v, prime_);
  }

  /// Rank over F_p by Gaussian elimination.
  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::int64_t prime_;
  std::vector<std::int64_t> data_;
};

/// Blockwise product: (A (x) B)(i1*rB + i2, j1*cB + j2) = A(i1,j1) B(i2,j2).
ResidueMatrix kronecker_product(const ResidueMatrix& a, const ResidueMatrix& b);

/// Inverse of x modulo the prime p.
std::int64_t inverse_mod(std::int64_t x, std::int64_t p);

constexpr std::int64_t kMaxCoeffMatrixSize = 256;
constexpr int kMaxBinomialDetSize = 64;

/// A_{p^t}; requires p prime, t >= 1, p^t <= 256.
ResidueMatrix coeff_matrix(std::int64_t p, int t);

struct TensorCheck {
  bool equal = false;
  /// First (row, col) in row-major order where the two sides differ.
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;
};

/// Compares A_{p^t} with the t-fold tensor power of A_p, t >= 2.
TensorCheck tensor_check(std::int64_t p, int t);

using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(IntegerMatrix m);

/// The size x size matrix with entry (i, j) = C(-j, i).
IntegerMatrix binomial_matrix_c(int size);

/// det of binomial_matrix_c(size), 1 <= size <= 64.
BigInt matrix_c_det(int size);

/// Whether the matrix with entry (r, c) = C(a_c, j + r) mod p is invertible
/// over F_p. Requires distinct a_c in [j, p) and j + |a| - 1 < p.
bool binom_submatrix_invertible(std::int64_t p, std::int64_t j,
                                std::span<const std::int64_t> a);

/// Smallest l in [floor(n/2)+1, n] with (A_p v)_l != 0 mod p. Requires
/// 1 <= n < p - 1, v a 0/1 vector of length p, and v_i != v_j for some
/// i < j <= n. Throws std::logic_error if no such l exists.
int apv_witness(std::int64_t p, int n, std::span<const std::uint8_t> v);

}  // namespace modeg
