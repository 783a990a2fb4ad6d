#pragma once

#include <vector>

#include "corona/poly.hpp"

namespace corona {

inline constexpr double kDefaultPoleMargin = 1.05;

// num/den with den monic, all poles at modulus >= pole_margin > 1, and no
// root shared between num and den. Polynomials are the den == 1 case.
class RationalFn {
 public:
  RationalFn() : den_(1.0) {}
  RationalFn(Poly p);  // NOLINT(google-explicit-constructor)
  RationalFn(Complex c) : RationalFn(Poly(c)) {}  // NOLINT(google-explicit-constructor)

  // Normalizes den to monic, cancels common roots and rejects denominators
  // with a root of modulus < pole_margin (ErrorCode::PoleInsideMargin).
  static RationalFn make(Poly num, Poly den, double pole_margin = kDefaultPoleMargin);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  double pole_margin() const { return pole_margin_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_zero() const { return num_.is_zero(); }
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  // Throws ErrorCode::PoleTooClose when |den(z)| falls below a floor
  // proportional to machine epsilon times the denominator's coefficient sum.
  Complex operator()(Complex z) const;

  std::vector<Complex> poles() const { return den_.roots(); }

  // Lower bound of |den| on the closed unit disk: prod(|r_k| - 1).
  double den_lower_bound() const;
  // Upper bound of sup |f| on the closed disk.
  double sup_upper_bound() const;

  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator*=(Complex s);

  friend RationalFn operator+(RationalFn lhs, const RationalFn& rhs) { return lhs += rhs; }
  friend RationalFn operator-(RationalFn lhs, const RationalFn& rhs) { return lhs -= rhs; }
  friend RationalFn operator*(RationalFn lhs, const RationalFn& rhs) { return lhs *= rhs; }
  friend RationalFn operator*(RationalFn lhs, Complex s) { return lhs *= s; }
  friend RationalFn operator*(Complex s, RationalFn rhs) { return rhs *= s; }
  RationalFn operator-() const;

 private:
  RationalFn(Poly num, Poly den, double margin, bool reduce);
  void cancel_common_roots();

  Poly num_;
  Poly den_;
  double pole_margin_ = kDefaultPoleMargin;
};

// True when the coefficient vectors agree to a relative tolerance.
bool same_polynomial(const Poly& a, const Poly& b, double rel_tol = 1e-13);

}  // namespace corona
