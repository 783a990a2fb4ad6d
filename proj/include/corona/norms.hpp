#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "corona/poly.hpp"
#include "corona/rational.hpp"
#include "corona/tuple.hpp"

namespace corona {

// Sampling of the closed disk: `angular_count` angles on each interior
// radius (radius 0 contributes the single point 0) plus a boundary circle
// of `boundary_count` points.
struct DiskGrid {
  int angular_count = 512;
  std::vector<double> radii{0.0, 0.25, 0.5, 0.75, 0.9, 0.99};
  int boundary_count = 512;

  // Throws DomainError when radii are not strictly increasing in [0, 1) or
  // a count is below 8.
  void validate() const;

  // Default grid with boundary_count = max(512, 8 * degree).
  static DiskGrid for_degree(int degree);

  std::vector<Complex> interior_points() const;
  // Boundary circle with max(boundary_count, min_count) points at angles
  // 2 pi k / M.
  std::vector<Complex> boundary_points(int min_count = 0) const;
  // interior_points() followed by boundary_points().
  std::vector<Complex> all_points() const;
};

std::vector<Complex> circle_points(int count, double radius = 1.0);

// lower: sampled maximum; upper: coefficient-sum bound. lower <= upper.
struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
};

NormInterval sup_norm(const RationalFn& f, const DiskGrid& grid);
NormInterval sup_norm(const FnTuple& f, const DiskGrid& grid);

// Coefficient-sum bound of sup ||F(z)|| over the closed disk (tail included).
double sup_upper(const FnTuple& f);

// Minimum of F F^* over the full 2-D grid. This over-estimates the true
// infimum; it is reported, never used as a certified epsilon.
double inf_gramian(const FnTuple& f, const DiskGrid& grid);

// (9 / eps_sq) ln(1 / eps_sq) for 0 < eps_sq < 1/e; DomainError otherwise.
double uchiyama_bound(double eps_sq);

// 1 / (L_1 L_2 ... L_{n+1} L_{n+2}^{1+eps_exp}) with L_k the k-fold iterated
// logarithm of t^{-2}; psi(0) = 0. DomainError, naming k, when some L_k is
// not positive.
double treil_psi(double t, int n, double eps_exp);

using PsiFunction = std::function<double(double)>;

// Integral of psi(t)/t over [t_min, t_max], computed in s = ln(1/t) with
// composite 5-point Gauss-Legendre panels (about `quad_points` nodes).
// NonMonotone if psi is negative or decreasing on the nodes.
double psi_integral(const PsiFunction& psi, double t_min, double t_max, int quad_points);

struct PsiIntegralTrend {
  std::vector<double> t_min;
  std::vector<double> partial;  // partial[k] = integral over [t_min[k], t_max]
};

// Partial integrals across shrinking lower limits; a diagnostic for
// convergence, not a proof.
PsiIntegralTrend psi_integral_check(const PsiFunction& psi, const std::vector<double>& t_mins, double t_max,
                                    int quad_points);

struct HypothesisWitness {
  Complex z;
  double h_abs = 0.0;
  double gramian = 0.0;
  double bound = 0.0;  // the right-hand quantity compared against
};

struct HypothesisCheck {
  bool holds = true;
  std::optional<HypothesisWitness> witness;
};

// |h(z)| <= F F^* psi(F F^*) <= 1 at every grid point; the first failing
// point is returned as the witness.
HypothesisCheck check_treil_hypothesis(const FnTuple& f, const RationalFn& h, const PsiFunction& psi,
                                       const DiskGrid& grid, double tol = 1e-12);

// |h(z)| <= sqrt(F F^*) <= 1 at every grid point.
HypothesisCheck check_wolff_hypothesis(const FnTuple& f, const RationalFn& h, const DiskGrid& grid,
                                       double tol = 1e-12);

}  // namespace corona
