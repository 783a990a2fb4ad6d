#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "corona/poly.hpp"

namespace corona {

// Column (i, j), i < j, of Q_A: +a_j at row i and -a_i at row j.
struct KernelColumn {
  std::size_t i;
  std::size_t j;
};

// Pairs (i, j) with i < j in lexicographic order; the block order
// [A_1, A_2, ...] where block k holds the columns with first index k.
std::vector<KernelColumn> kernel_columns(std::size_t n);

inline std::size_t kernel_column_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// The n x C(n,2) matrix Q_A stored by its coefficient vector; every column
// has exactly two nonzero slots. T is Complex for pointwise work and
// RationalFn for symbolic expansion.
template <class T>
class KernelMatrix {
 public:
  explicit KernelMatrix(std::vector<T> coefficients)
      : coefficients_(std::move(coefficients)), columns_(kernel_columns(coefficients_.size())) {}

  std::size_t rows() const { return coefficients_.size(); }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<T>& coefficients() const { return coefficients_; }
  const std::vector<KernelColumn>& columns() const { return columns_; }

  // Q x, with x indexed by column.
  std::vector<T> apply(std::span<const T> x) const {
    std::vector<T> out(rows());
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const auto [i, j] = columns_[c];
      out[i] += coefficients_[j] * x[c];
      out[j] -= coefficients_[i] * x[c];
    }
    return out;
  }

  // Q^T y (plain transpose, no conjugation), indexed by column.
  std::vector<T> apply_transpose(std::span<const T> y) const {
    std::vector<T> out;
    out.reserve(columns_.size());
    for (const auto [i, j] : columns_) out.push_back(coefficients_[j] * y[i] - coefficients_[i] * y[j]);
    return out;
  }

 private:
  std::vector<T> coefficients_;
  std::vector<KernelColumn> columns_;
};

using ComplexKernel = KernelMatrix<Complex>;

ComplexKernel build_q(std::span<const Complex> a);

// Dense n x C(n,2) materialization, for verification only.
Eigen::MatrixXcd to_dense(const ComplexKernel& q);

// Entry pattern of Q for symbols f_1..f_n: +k for f_k, -k for -f_k, 0 for
// an empty slot. Rows are indexed from 0, symbols from 1.
std::vector<std::vector<int>> kernel_layout(std::size_t n);

// ||Q Q^* - ((A A^*) I - A^* A)||_F
double q_identity_self(std::span<const Complex> a);

// ||Q_A Q_D^T - ((A D^T) I - D^T A)||_F; DimensionMismatch on unequal lengths.
double q_identity_pair(std::span<const Complex> a, std::span<const Complex> d);

struct KernelCheck {
  double product_residual = 0.0;  // ||A Q_A||
  int rank = 0;                   // numerical rank of Q_A
};

KernelCheck q_kernel_check(std::span<const Complex> a);

// Largest singular value of Q_A by power iteration on Q_A Q_A^*.
double q_norm(std::span<const Complex> a);

// The n singular values of Q_A as a map C^{C(n,2)} -> C^n, descending,
// padded with zeros when Q_A has fewer than n columns.
std::vector<double> q_singular_values(std::span<const Complex> a);

struct TruncatedKernel {
  ComplexKernel q;
  // Bound on the identity residual against the untruncated operator:
  // 2 t (||prefix|| + t).
  double error_bound;
};

TruncatedKernel build_q_truncated(std::span<const Complex> prefix, double tail_bound);

}  // namespace corona
