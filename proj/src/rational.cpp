#include "corona/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "corona/errors.hpp"

namespace corona {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Tolerance for deciding that a numerator vanishes at a denominator root.
bool vanishes_at(const Poly& p, Complex r) {
  const double scale = p.coeff_sum() * std::pow(std::max(1.0, std::abs(r)), p.degree());
  return std::abs(p(r)) <= 1e-9 * scale;
}

}  // namespace

RationalFn::RationalFn(Poly p) : num_(std::move(p)), den_(1.0) {}

RationalFn::RationalFn(Poly num, Poly den, double margin, bool reduce)
    : num_(std::move(num)), den_(std::move(den)), pole_margin_(margin) {
  if (den_.leading() != Complex(1.0)) {
    const Complex lead = den_.leading();
    num_ *= 1.0 / lead;
    den_ = den_.monic();
  }
  if (reduce) cancel_common_roots();
}

RationalFn RationalFn::make(Poly num, Poly den, double pole_margin) {
  if (den.is_zero()) throw Error(ErrorCode::PoleTooClose, "zero denominator");
  for (const Complex& r : den.roots()) {
    if (std::abs(r) < pole_margin) {
      std::ostringstream os;
      os << "denominator root " << r << " has modulus " << std::abs(r) << " < margin " << pole_margin;
      throw Error(ErrorCode::PoleInsideMargin, os.str(), r);
    }
  }
  return RationalFn(std::move(num), std::move(den), pole_margin, /*reduce=*/true);
}

void RationalFn::cancel_common_roots() {
  if (den_.degree() <= 0) return;
  if (num_.is_zero()) {
    den_ = Poly(1.0);
    return;
  }
  if (num_.degree() <= 0) return;
  bool changed = false;
  for (const Complex& r : den_.roots()) {
    if (num_.degree() <= 0) break;
    if (!vanishes_at(num_, r)) continue;
    const Poly factor{-r, 1.0};
    Poly dq = divmod(den_, factor).quotient;
    Poly nq = divmod(num_, factor).quotient;
    den_ = std::move(dq);
    num_ = std::move(nq);
    changed = true;
  }
  if (changed && den_.leading() != Complex(1.0)) {
    num_ *= 1.0 / den_.leading();
    den_ = den_.monic();
  }
}

Complex RationalFn::operator()(Complex z) const {
  const Complex d = den_(z);
  const double floor = 64.0 * kEps * den_.coeff_sum() * std::pow(std::max(1.0, std::abs(z)), den_.degree());
  if (std::abs(d) <= floor) {
    std::ostringstream os;
    os << "|den(" << z << ")| = " << std::abs(d) << " below floor " << floor;
    throw Error(ErrorCode::PoleTooClose, os.str(), z);
  }
  return num_(z) / d;
}

double RationalFn::den_lower_bound() const {
  if (den_.degree() <= 0) return std::abs(den_.leading());
  double bound = 1.0;
  for (const Complex& r : den_.roots()) bound *= std::max(0.0, std::abs(r) - 1.0);
  return bound;
}

double RationalFn::sup_upper_bound() const {
  if (num_.is_zero()) return 0.0;
  const double lower = den_lower_bound();
  if (lower <= 0.0) return std::numeric_limits<double>::infinity();
  return num_.coeff_sum() / lower;
}

bool same_polynomial(const Poly& a, const Poly& b, double rel_tol) {
  if (a.degree() != b.degree()) return false;
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  return coeff_distance(a, b) <= rel_tol * scale;
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  pole_margin_ = std::min(pole_margin_, rhs.pole_margin_);
  if (same_polynomial(den_, rhs.den_)) {
    num_ += rhs.num_;
    if (num_.is_zero()) den_ = Poly(1.0);
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  cancel_common_roots();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) { return *this += -rhs; }

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  pole_margin_ = std::min(pole_margin_, rhs.pole_margin_);
  num_ *= rhs.num_;
  if (num_.is_zero()) {
    den_ = Poly(1.0);
    return *this;
  }
  if (rhs.den_.degree() > 0) den_ *= rhs.den_;
  cancel_common_roots();
  return *this;
}

RationalFn& RationalFn::operator*=(Complex s) {
  num_ *= s;
  if (num_.is_zero()) den_ = Poly(1.0);
  return *this;
}

RationalFn RationalFn::operator-() const {
  RationalFn out = *this;
  out.num_ = -out.num_;
  return out;
}

}  // namespace corona
