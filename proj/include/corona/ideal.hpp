#pragma once

#include <utility>
#include <vector>

#include "corona/poly.hpp"
#include "corona/rational.hpp"

namespace corona {

struct IdealZero {
  Complex point;
  int multiplicity = 1;
};

// The ideal I(Z) of functions vanishing on a finite set of points in the
// open disk, each to a prescribed order.
class ZeroIdeal {
 public:
  // Throws ZeroOnBoundary if some |z_k| >= 1, DuplicatePoint if two points
  // coincide, DomainError for an empty set or nonpositive multiplicity.
  static ZeroIdeal from_zeros(std::vector<IdealZero> zeros);

  const std::vector<IdealZero>& zeros() const { return zeros_; }
  // prod (z - z_k)^{m_k}, monic.
  const Poly& generator() const { return generator_; }
  int total_multiplicity() const { return generator_.degree(); }
  // First listed point; the evaluation point defining constant parts.
  Complex anchor() const { return zeros_.front().point; }

 private:
  std::vector<IdealZero> zeros_;
  Poly generator_;
};

inline ZeroIdeal ideal_from_zeros(std::vector<IdealZero> zeros) {
  return ZeroIdeal::from_zeros(std::move(zeros));
}

// Membership tolerance for a function whose (numerator) coefficients have
// modulus sum `coeff_sum`: 1e-9 * (1 + coeff_sum).
double membership_tolerance(double coeff_sum);

// Largest normalized vanishing residual of f on Z:
// max over k, r < m_k of |p^(r)(z_k)/r!| / (1 + sum|p|), where p is the
// numerator of f. Zero iff f lies in I(Z); compare against 1e-9.
double membership_residual(const RationalFn& f, const ZeroIdeal& ideal);

struct Decomposition {
  Complex constant;
  RationalFn ideal_part;
  double residual = 0.0;  // membership_residual of ideal_part
};

// f = c + phi with c = f(z_1) and phi in I(Z). Throws NotInSubalgebra,
// carrying the offending zero as the witness, when phi fails membership.
Decomposition decompose(const RationalFn& f, const ZeroIdeal& ideal);

}  // namespace corona
