#pragma once

#include <vector>

#include "corona/norms.hpp"
#include "corona/rational.hpp"
#include "corona/tuple.hpp"

namespace corona {

// Outcome of converting an H-infinity solution G of F G^T = h into a
// solution whose entries lie in C + I(Z).
struct TransferResult {
  FnTuple solution;
  std::vector<Complex> constant_part;      // measured: u_j(z_1)
  std::vector<Complex> expected_constant;  // h_c conj(F_c) / ||F_c||^2
  double constant_law_error = 0.0;         // max |measured - expected|
  double residual_sup = 0.0;               // grid sup |F U^T - h|
  double residual_coeff = 0.0;             // max |coeff| of numerator of F U^T - h
  double residual_scale = 1.0;             // 1 + upper(F) upper(U)
  double membership_max = 0.0;             // max normalized residual of u_j - expected_j on Z
  double norm_sampled = 0.0;               // sampled sup ||U||
  double norm_upper = 0.0;                 // coefficient-sum bound of ||U||
  double g_norm_upper = 0.0;               // coefficient-sum bound of ||G||
  double fc_norm = 0.0;                    // ||F_c||
  double norm_bound_rhs = 0.0;             // (1 + 1/||F_c||) upper(||G||)
};

// G^T + Q_F Q_G^T conj(F_c)/||F_c||^2, expanded symbolically. FcZero when
// F_c = 0.
FnTuple corrected_solution(const SubalgebraTuple& f, const FnTuple& g);

// Corona transfer: F G^T = 1 in, U with F U^T = 1 and U in the
// subalgebra out. NotASolution when the boundary residual of F G^T - 1
// exceeds 1e-9 (1 + upper(F) upper(G)).
TransferResult transfer_corona(const SubalgebraTuple& f, const FnTuple& g, const DiskGrid& grid);

// Same correction for F G^T = h with h in C + I(Z); the expected constant
// part is h_c conj(F_c)/||F_c||^2. NotInSubalgebra when h does not
// decompose.
TransferResult transfer_ideal(const SubalgebraTuple& f, const FnTuple& g, const RationalFn& h, const DiskGrid& grid);

struct PipelineResult {
  FnTuple g;  // the H-infinity solution fed into the transfer
  TransferResult transfer;
};

// Checks |h| <= sqrt(F F^*) <= 1 on the grid (HypothesisViolated with the
// witness point), solves F G^T = h^3 by Bezout division, then transfers.
PipelineResult wolff_pipeline(const SubalgebraTuple& f, const Poly& h, const DiskGrid& grid,
                              double margin = kDefaultPoleMargin);

// Bezout solve of F G^T = h followed by transfer_ideal.
PipelineResult ideal_pipeline(const SubalgebraTuple& f, const Poly& h, const DiskGrid& grid,
                              double margin = kDefaultPoleMargin);

struct Lemma22Report {
  double sup_upper = 0.0;               // coefficient-sum bound of sup ||F||
  double fc_norm_sq = 0.0;              // ||F_c||^2
  double gramian_at_zeros_error = 0.0;  // max_k |F F^*(z_k) - ||F_c||^2|
  double phi_sup_sampled = 0.0;         // sampled sup ||phi_F||
  double phi_sup_upper = 0.0;
};

// SupExceedsOne when the coefficient-sum bound of sup ||F|| exceeds 1.
Lemma22Report lemma22_check(const SubalgebraTuple& f, const DiskGrid& grid);

// max over points of ||I - (G^T F_c + Q_F Q_G^T + G^T phi_F)||_F, evaluated
// pointwise with dense matrices.
double eq4_consistency(const SubalgebraTuple& f, const FnTuple& g, const std::vector<Complex>& points);

// max over points and vectors of |F(z) Q_F(z) Q_G(z)^T x|.
double correction_orthogonality(const SubalgebraTuple& f, const FnTuple& g, const std::vector<Complex>& points,
                                const std::vector<std::vector<Complex>>& xs);

// Sup over the grid of |F(z) S(z)^T - h(z)|.
double solution_residual_sup(const FnTuple& f, const FnTuple& s, const RationalFn& h, const DiskGrid& grid);

}  // namespace corona
