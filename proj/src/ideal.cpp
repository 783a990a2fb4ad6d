#include "corona/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "corona/errors.hpp"

namespace corona {

ZeroIdeal ZeroIdeal::from_zeros(std::vector<IdealZero> zeros) {
  if (zeros.empty()) throw Error(ErrorCode::DomainError, "ideal needs at least one zero");
  std::vector<Complex> roots;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const auto& zk = zeros[k];
    if (zk.multiplicity < 1) throw Error(ErrorCode::DomainError, "multiplicity must be positive", zk.point);
    if (!(std::abs(zk.point) < 1.0)) {
      std::ostringstream os;
      os << "zero " << zk.point << " is not inside the open unit disk";
      throw Error(ErrorCode::ZeroOnBoundary, os.str(), zk.point);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (zeros[j].point == zk.point) {
        std::ostringstream os;
        os << "zero " << zk.point << " listed twice";
        throw Error(ErrorCode::DuplicatePoint, os.str(), zk.point);
      }
    }
    roots.insert(roots.end(), static_cast<std::size_t>(zk.multiplicity), zk.point);
  }
  ZeroIdeal out;
  out.zeros_ = std::move(zeros);
  out.generator_ = Poly::from_roots(roots);
  return out;
}

double membership_tolerance(double coeff_sum) { return 1e-9 * (1.0 + coeff_sum); }

double membership_residual(const RationalFn& f, const ZeroIdeal& ideal) {
  const Poly& p = f.num();
  const double norm = 1.0 + p.coeff_sum();
  double worst = 0.0;
  for (const auto& zk : ideal.zeros()) {
    for (const Complex& t : p.taylor_at(zk.point, zk.multiplicity)) worst = std::max(worst, std::abs(t) / norm);
  }
  return worst;
}

Decomposition decompose(const RationalFn& f, const ZeroIdeal& ideal) {
  const Complex c = f(ideal.anchor());
  RationalFn phi = f - RationalFn(Poly(c));
  const Poly& p = phi.num();
  const double norm = 1.0 + p.coeff_sum();
  double worst = 0.0;
  for (const auto& zk : ideal.zeros()) {
    const auto taylor = p.taylor_at(zk.point, zk.multiplicity);
    for (std::size_t r = 0; r < taylor.size(); ++r) {
      const double rel = std::abs(taylor[r]) / norm;
      if (rel > 1e-9) {
        std::ostringstream os;
        os << "ideal part has order-" << r << " residual " << std::abs(taylor[r]) << " at zero " << zk.point
           << " (constant part " << c << ")";
        throw Error(ErrorCode::NotInSubalgebra, os.str(), zk.point);
      }
      worst = std::max(worst, rel);
    }
  }
  return {c, std::move(phi), worst};
}

}  // namespace corona
