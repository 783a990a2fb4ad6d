#include "corona/transfer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "corona/bezout.hpp"
#include "corona/errors.hpp"
#include "corona/ideal.hpp"
#include "corona/kernel_matrix.hpp"

namespace corona {
namespace {

std::vector<Complex> normalized_conj_constants(const SubalgebraTuple& f) {
  const double norm_sq = f.constant_norm_sq();
  if (!(norm_sq > 0.0)) throw Error(ErrorCode::FcZero, "constant part F_c is zero");
  std::vector<Complex> x;
  x.reserve(f.size());
  for (const auto& c : f.constant_part) x.push_back(std::conj(c) / norm_sq);
  return x;
}

void require_solution(const FnTuple& f, const FnTuple& g, const RationalFn& h, const DiskGrid& grid) {
  if (f.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "F and G have different lengths");
  const double scale = 1.0 + sup_upper(f) * sup_upper(g);
  double worst = 0.0;
  Complex at{};
  for (const Complex& z : grid.boundary_points(8 * std::max(f.max_degree(), g.max_degree()))) {
    Complex acc{};
    for (std::size_t j = 0; j < f.size(); ++j) acc += f[j](z) * g[j](z);
    const double r = std::abs(acc - h(z));
    if (r > worst) {
      worst = r;
      at = z;
    }
  }
  if (worst > 1e-9 * scale) {
    std::ostringstream os;
    os << "F G^T - h reaches " << worst << " on the boundary (allowed " << 1e-9 * scale << ")";
    throw Error(ErrorCode::NotASolution, os.str(), at);
  }
}

TransferResult finish(const SubalgebraTuple& f, const FnTuple& g, FnTuple u, const RationalFn& h, Complex h_c,
                      const DiskGrid& grid) {
  TransferResult out;
  const std::vector<Complex> x = normalized_conj_constants(f);
  out.fc_norm = std::sqrt(f.constant_norm_sq());
  const Complex anchor = f.ideal.anchor();

  for (std::size_t j = 0; j < u.size(); ++j) {
    const Complex expected = h_c * x[j];
    const Complex measured = u[j](anchor);
    out.expected_constant.push_back(expected);
    out.constant_part.push_back(measured);
    out.constant_law_error = std::max(out.constant_law_error, std::abs(measured - expected));
    out.membership_max = std::max(out.membership_max, membership_residual(u[j] - RationalFn(expected), f.ideal));
  }

  const RationalFn residual = dot(f.tuple, u) - h;
  out.residual_coeff = residual.num().max_abs_coeff();
  out.residual_sup = solution_residual_sup(f.tuple, u, h, grid);

  const NormInterval u_norm = sup_norm(u, grid);
  out.norm_sampled = u_norm.lower;
  out.norm_upper = u_norm.upper;
  out.g_norm_upper = sup_upper(g);
  out.residual_scale = 1.0 + sup_upper(f.tuple) * out.norm_upper;
  out.norm_bound_rhs = (1.0 + 1.0 / out.fc_norm) * out.g_norm_upper;
  out.solution = std::move(u);
  return out;
}

}  // namespace

FnTuple corrected_solution(const SubalgebraTuple& f, const FnTuple& g) {
  if (f.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "F and G have different lengths");
  const std::vector<Complex> x = normalized_conj_constants(f);
  std::vector<RationalFn> xr(x.begin(), x.end());

  const KernelMatrix<RationalFn> q_g(g.entries);
  const KernelMatrix<RationalFn> q_f(f.tuple.entries);
  const std::vector<RationalFn> y = q_g.apply_transpose(xr);
  std::vector<RationalFn> correction = q_f.apply(y);

  std::vector<RationalFn> u;
  u.reserve(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) u.push_back(g[j] + correction[j]);
  return FnTuple(std::move(u), g.tail_bound);
}

double solution_residual_sup(const FnTuple& f, const FnTuple& s, const RationalFn& h, const DiskGrid& grid) {
  double worst = 0.0;
  for (const Complex& z : grid.all_points()) {
    Complex acc{};
    for (std::size_t j = 0; j < f.size(); ++j) acc += f[j](z) * s[j](z);
    worst = std::max(worst, std::abs(acc - h(z)));
  }
  return worst;
}

TransferResult transfer_corona(const SubalgebraTuple& f, const FnTuple& g, const DiskGrid& grid) {
  const RationalFn one(Poly(1.0));
  require_solution(f.tuple, g, one, grid);
  return finish(f, g, corrected_solution(f, g), one, 1.0, grid);
}

TransferResult transfer_ideal(const SubalgebraTuple& f, const FnTuple& g, const RationalFn& h, const DiskGrid& grid) {
  const Decomposition hd = decompose(h, f.ideal);
  require_solution(f.tuple, g, h, grid);
  return finish(f, g, corrected_solution(f, g), h, hd.constant, grid);
}

PipelineResult ideal_pipeline(const SubalgebraTuple& f, const Poly& h, const DiskGrid& grid, double margin) {
  FnTuple g = ideal_solve(f.tuple, h, margin);
  TransferResult t = transfer_ideal(f, g, RationalFn(h), grid);
  return {std::move(g), std::move(t)};
}

PipelineResult wolff_pipeline(const SubalgebraTuple& f, const Poly& h, const DiskGrid& grid, double margin) {
  const HypothesisCheck check = check_wolff_hypothesis(f.tuple, RationalFn(h), grid);
  if (!check.holds) {
    const auto& w = *check.witness;
    std::ostringstream os;
    os << "|h| = " << w.h_abs << " vs sqrt(F F^*) = " << w.bound << " at " << w.z;
    throw Error(ErrorCode::HypothesisViolated, os.str(), w.z);
  }
  return ideal_pipeline(f, pow(h, 3), grid, margin);
}

Lemma22Report lemma22_check(const SubalgebraTuple& f, const DiskGrid& grid) {
  Lemma22Report out;
  out.sup_upper = sup_upper(f.tuple);
  if (out.sup_upper > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "coefficient-sum bound of sup ||F|| is " << out.sup_upper << " > 1";
    throw Error(ErrorCode::SupExceedsOne, os.str());
  }
  out.fc_norm_sq = f.constant_norm_sq();
  for (const auto& zk : f.ideal.zeros()) {
    const double gram = tuple_eval(f.tuple, zk.point).gramian;
    out.gramian_at_zeros_error = std::max(out.gramian_at_zeros_error, std::abs(gram - out.fc_norm_sq));
  }
  const NormInterval phi = sup_norm(f.ideal_part, grid);
  out.phi_sup_sampled = phi.lower;
  out.phi_sup_upper = phi.upper;
  return out;
}

double eq4_consistency(const SubalgebraTuple& f, const FnTuple& g, const std::vector<Complex>& points) {
  const auto n = static_cast<Eigen::Index>(f.size());
  Eigen::RowVectorXcd fc(n);
  for (Eigen::Index k = 0; k < n; ++k) fc(k) = f.constant_part[static_cast<std::size_t>(k)];
  double worst = 0.0;
  for (const Complex& z : points) {
    const auto fz = eval_values(f.tuple, z);
    const auto gz = eval_values(g, z);
    const auto phiz = eval_values(f.ideal_part, z);
    Eigen::VectorXcd gcol(n);
    Eigen::RowVectorXcd phi(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      gcol(k) = gz[static_cast<std::size_t>(k)];
      phi(k) = phiz[static_cast<std::size_t>(k)];
    }
    const Eigen::MatrixXcd qq = to_dense(build_q(fz)) * to_dense(build_q(gz)).transpose();
    const Eigen::MatrixXcd m = gcol * fc + qq + gcol * phi;
    worst = std::max(worst, (Eigen::MatrixXcd::Identity(n, n) - m).norm());
  }
  return worst;
}

double correction_orthogonality(const SubalgebraTuple& f, const FnTuple& g, const std::vector<Complex>& points,
                                const std::vector<std::vector<Complex>>& xs) {
  double worst = 0.0;
  for (const Complex& z : points) {
    const auto fz = eval_values(f.tuple, z);
    const auto gz = eval_values(g, z);
    const ComplexKernel q_f(fz);
    const ComplexKernel q_g(gz);
    for (const auto& x : xs) {
      const auto v = q_f.apply(q_g.apply_transpose(x));
      Complex acc{};
      for (std::size_t j = 0; j < fz.size(); ++j) acc += fz[j] * v[j];
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace corona
