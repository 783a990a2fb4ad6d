#include "corona/kernel_matrix.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

#include "corona/errors.hpp"

namespace corona {
namespace {

Eigen::RowVectorXcd as_row(std::span<const Complex> a) {
  Eigen::RowVectorXcd r(static_cast<Eigen::Index>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r(static_cast<Eigen::Index>(k)) = a[k];
  return r;
}

double l2(std::span<const Complex> a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

// x -> Q Q^* x using the sparse column structure.
Eigen::VectorXcd gram_apply(const ComplexKernel& q, const Eigen::VectorXcd& x) {
  const auto& a = q.coefficients();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(x.size());
  for (const auto [i, j] : q.columns()) {
    const Complex w = std::conj(a[j]) * x(static_cast<Eigen::Index>(i)) - std::conj(a[i]) * x(static_cast<Eigen::Index>(j));
    out(static_cast<Eigen::Index>(i)) += a[j] * w;
    out(static_cast<Eigen::Index>(j)) -= a[i] * w;
  }
  return out;
}

}  // namespace

std::vector<KernelColumn> kernel_columns(std::size_t n) {
  std::vector<KernelColumn> cols;
  cols.reserve(kernel_column_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cols.push_back({i, j});
  }
  return cols;
}

ComplexKernel build_q(std::span<const Complex> a) { return ComplexKernel(std::vector<Complex>(a.begin(), a.end())); }

Eigen::MatrixXcd to_dense(const ComplexKernel& q) {
  const auto& a = q.coefficients();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(q.rows()), static_cast<Eigen::Index>(q.cols()));
  for (std::size_t c = 0; c < q.cols(); ++c) {
    const auto [i, j] = q.columns()[c];
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = a[j];
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) = -a[i];
  }
  return m;
}

std::vector<std::vector<int>> kernel_layout(std::size_t n) {
  const auto cols = kernel_columns(n);
  std::vector<std::vector<int>> grid(n, std::vector<int>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    grid[cols[c].i][c] = static_cast<int>(cols[c].j) + 1;
    grid[cols[c].j][c] = -(static_cast<int>(cols[c].i) + 1);
  }
  return grid;
}

double q_identity_self(std::span<const Complex> a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  const Eigen::MatrixXcd q = to_dense(build_q(a));
  const Eigen::RowVectorXcd row = as_row(a);
  const Complex aa = row.dot(row);  // Eigen's dot conjugates the first argument: sum |a|^2
  const Eigen::MatrixXcd rhs = aa * Eigen::MatrixXcd::Identity(n, n) - row.adjoint() * row;
  return (q * q.adjoint() - rhs).norm();
}

double q_identity_pair(std::span<const Complex> a, std::span<const Complex> d) {
  if (a.size() != d.size()) throw Error(ErrorCode::DimensionMismatch, "q_identity_pair needs equal lengths");
  const auto n = static_cast<Eigen::Index>(a.size());
  const Eigen::MatrixXcd qa = to_dense(build_q(a));
  const Eigen::MatrixXcd qd = to_dense(build_q(d));
  const Eigen::RowVectorXcd ra = as_row(a);
  const Eigen::RowVectorXcd rd = as_row(d);
  const Complex ad = (ra * rd.transpose())(0, 0);
  const Eigen::MatrixXcd rhs = ad * Eigen::MatrixXcd::Identity(n, n) - rd.transpose() * ra;
  return (qa * qd.transpose() - rhs).norm();
}

KernelCheck q_kernel_check(std::span<const Complex> a) {
  KernelCheck out;
  const ComplexKernel q = build_q(a);
  if (q.cols() == 0) return out;
  const Eigen::MatrixXcd dense = to_dense(q);
  out.product_residual = (as_row(a) * dense).norm();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
  const auto& sv = svd.singularValues();
  const double cutoff = static_cast<double>(std::max(dense.rows(), dense.cols())) *
                        std::numeric_limits<double>::epsilon() * (sv.size() > 0 ? sv(0) : 0.0);
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff && sv(k) > 0.0) ++out.rank;
  }
  return out;
}

double q_norm(std::span<const Complex> a) {
  const ComplexKernel q = build_q(a);
  const auto n = static_cast<Eigen::Index>(a.size());
  if (q.cols() == 0 || l2(a) == 0.0) return 0.0;

  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd x(n);
  double lambda = 0.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    for (Eigen::Index k = 0; k < n; ++k) x(k) = Complex(normal(rng), normal(rng));
    x.normalize();
    lambda = 0.0;
    bool collapsed = false;
    for (int iter = 0; iter < 500; ++iter) {
      Eigen::VectorXcd y = gram_apply(q, x);
      const double next = y.norm();
      if (next == 0.0) {
        collapsed = true;
        break;
      }
      x = y / next;
      const bool converged = std::abs(next - lambda) <= 1e-15 * next;
      lambda = next;
      if (converged) break;
    }
    if (!collapsed) break;
  }
  return std::sqrt(lambda);
}

std::vector<double> q_singular_values(std::span<const Complex> a) {
  const std::size_t n = a.size();
  std::vector<double> out(n, 0.0);
  const ComplexKernel q = build_q(a);
  if (q.cols() == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_dense(q));
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < sv.size() && static_cast<std::size_t>(k) < n; ++k) out[static_cast<std::size_t>(k)] = sv(k);
  return out;
}

TruncatedKernel build_q_truncated(std::span<const Complex> prefix, double tail_bound) {
  if (tail_bound < 0.0) throw Error(ErrorCode::DomainError, "tail bound must be nonnegative");
  return {build_q(prefix), 2.0 * tail_bound * (l2(prefix) + tail_bound)};
}

}  // namespace corona
