#include "corona/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "corona/errors.hpp"

namespace corona {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Relative inflation of coefficient-sum bounds so that rounding in the
// sampled maximum never crosses them.
constexpr double kUpperInflation = 1.0 + 64.0 * kEps;

int boundary_count_for(const DiskGrid& grid, int degree) { return std::max(grid.boundary_count, 8 * degree); }

void assert_ordered(const NormInterval& n) {
  if (!(n.lower <= n.upper) || n.lower < 0.0) {
    std::ostringstream os;
    os << "norm interval out of order: [" << n.lower << ", " << n.upper << "]";
    throw std::logic_error(os.str());
  }
}

}  // namespace

void DiskGrid::validate() const {
  if (angular_count < 8 || boundary_count < 8) throw Error(ErrorCode::DomainError, "grid counts must be >= 8");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radii[k] < 0.0 || radii[k] >= 1.0) throw Error(ErrorCode::DomainError, "grid radii must lie in [0, 1)");
    if (k > 0 && radii[k] <= radii[k - 1]) throw Error(ErrorCode::DomainError, "grid radii must be increasing");
  }
}

DiskGrid DiskGrid::for_degree(int degree) {
  DiskGrid g;
  g.boundary_count = std::max(512, 8 * degree);
  return g;
}

std::vector<Complex> circle_points(int count, double radius) {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    pts.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / count));
  }
  return pts;
}

std::vector<Complex> DiskGrid::interior_points() const {
  std::vector<Complex> pts;
  for (double r : radii) {
    if (r == 0.0) {
      pts.emplace_back(0.0, 0.0);
      continue;
    }
    const auto ring = circle_points(angular_count, r);
    pts.insert(pts.end(), ring.begin(), ring.end());
  }
  return pts;
}

std::vector<Complex> DiskGrid::boundary_points(int min_count) const {
  return circle_points(std::max(boundary_count, min_count));
}

std::vector<Complex> DiskGrid::all_points() const {
  auto pts = interior_points();
  const auto b = boundary_points();
  pts.insert(pts.end(), b.begin(), b.end());
  return pts;
}

NormInterval sup_norm(const RationalFn& f, const DiskGrid& grid) {
  NormInterval out;
  for (const Complex& z : circle_points(boundary_count_for(grid, f.degree()))) out.lower = std::max(out.lower, std::abs(f(z)));
  out.upper = f.sup_upper_bound() * kUpperInflation;
  assert_ordered(out);
  return out;
}

double sup_upper(const FnTuple& f) {
  double s = f.tail_bound * f.tail_bound;
  for (const auto& e : f.entries) {
    const double u = e.sup_upper_bound();
    s += u * u;
  }
  return std::sqrt(s) * kUpperInflation;
}

NormInterval sup_norm(const FnTuple& f, const DiskGrid& grid) {
  NormInterval out;
  // sum |f_j|^2 is subharmonic, so its maximum over the disk sits on the circle.
  for (const Complex& z : circle_points(boundary_count_for(grid, f.max_degree()))) {
    out.lower = std::max(out.lower, std::sqrt(tuple_eval(f, z).gramian));
  }
  out.upper = sup_upper(f);
  assert_ordered(out);
  return out;
}

double inf_gramian(const FnTuple& f, const DiskGrid& grid) {
  double m = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid.all_points()) m = std::min(m, tuple_eval(f, z).gramian);
  return m;
}

double uchiyama_bound(double eps_sq) {
  if (!(eps_sq > 0.0) || !(eps_sq < std::exp(-1.0))) {
    std::ostringstream os;
    os << "uchiyama_bound needs 0 < eps^2 < 1/e, got " << eps_sq;
    throw Error(ErrorCode::DomainError, os.str());
  }
  return 9.0 / eps_sq * std::log(1.0 / eps_sq);
}

double treil_psi(double t, int n, double eps_exp) {
  if (n < 0 || !(eps_exp > 0.0)) throw Error(ErrorCode::DomainError, "treil_psi needs n >= 0 and eps > 0");
  if (!(t >= 0.0) || t > 1.0) throw Error(ErrorCode::DomainError, "treil_psi needs t in [0, 1]");
  if (t == 0.0) return 0.0;  // limit value
  double product = 1.0;
  double iterate = -2.0 * std::log(t);  // L_1 = ln t^{-2}
  for (int k = 1; k <= n + 2; ++k) {
    if (!(iterate > 0.0)) {
      std::ostringstream os;
      os << "iterated log L_" << k << " of t^-2 is " << iterate << " (t = " << t << ")";
      throw Error(ErrorCode::DomainError, os.str());
    }
    product *= (k == n + 2) ? std::pow(iterate, 1.0 + eps_exp) : iterate;
    iterate = std::log(iterate);
  }
  return 1.0 / product;
}

double psi_integral(const PsiFunction& psi, double t_min, double t_max, int quad_points) {
  if (!(t_min > 0.0) || !(t_min < t_max) || t_max > 1.0) {
    throw Error(ErrorCode::DomainError, "psi_integral needs 0 < t_min < t_max <= 1");
  }
  static constexpr double kNodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                       0.9061798459386640};
  static constexpr double kWeights[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                         0.4786286704993665, 0.2369268850561891};
  const double s_lo = -std::log(t_max);
  const double s_hi = -std::log(t_min);
  const int panels = std::max(1, quad_points / 5);
  const double h = (s_hi - s_lo) / panels;

  // Nodes are visited with s increasing, i.e. t decreasing, so psi must not increase.
  double total = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int p = 0; p < panels; ++p) {
    const double mid = s_lo + (p + 0.5) * h;
    for (int k = 0; k < 5; ++k) {
      const double s = mid + 0.5 * h * kNodes[k];
      const double value = psi(std::exp(-s));
      if (!(value >= 0.0) || value > previous * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "psi is negative or decreasing near t = " << std::exp(-s);
        throw Error(ErrorCode::NonMonotone, os.str());
      }
      previous = value;
      total += 0.5 * h * kWeights[k] * value;
    }
  }
  return total;
}

PsiIntegralTrend psi_integral_check(const PsiFunction& psi, const std::vector<double>& t_mins, double t_max,
                                    int quad_points) {
  PsiIntegralTrend out;
  for (double t : t_mins) {
    out.t_min.push_back(t);
    out.partial.push_back(psi_integral(psi, t, t_max, quad_points));
  }
  return out;
}

HypothesisCheck check_treil_hypothesis(const FnTuple& f, const RationalFn& h, const PsiFunction& psi,
                                       const DiskGrid& grid, double tol) {
  HypothesisCheck out;
  for (const Complex& z : grid.all_points()) {
    const TupleValue v = tuple_eval(f, z);
    const double h_abs = std::abs(h(z));
    // F F^* psi(F F^*) is nondecreasing in F F^*: compare |h| with the
    // stored-entry Gramian and the upper bound with the tail-inflated one.
    const double lower_side = v.gramian * psi(v.gramian);
    const double upper_side = v.gramian_upper * psi(std::min(1.0, v.gramian_upper));
    if (h_abs > lower_side * (1.0 + tol) + tol || upper_side > 1.0 + tol) {
      out.holds = false;
      out.witness = HypothesisWitness{z, h_abs, v.gramian, lower_side};
      return out;
    }
  }
  return out;
}

HypothesisCheck check_wolff_hypothesis(const FnTuple& f, const RationalFn& h, const DiskGrid& grid, double tol) {
  HypothesisCheck out;
  for (const Complex& z : grid.all_points()) {
    const TupleValue v = tuple_eval(f, z);
    const double h_abs = std::abs(h(z));
    const double root = std::sqrt(v.gramian);
    if (h_abs > root * (1.0 + tol) + tol || std::sqrt(v.gramian_upper) > 1.0 + tol) {
      out.holds = false;
      out.witness = HypothesisWitness{z, h_abs, v.gramian, root};
      return out;
    }
  }
  return out;
}

}  // namespace corona
