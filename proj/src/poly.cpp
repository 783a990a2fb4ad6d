#include "corona/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corona {

Poly::Poly(Complex constant) : coeffs_{constant} { trim(); }

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, Complex c) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> coeffs{1.0};
  for (const Complex& r : roots) {
    std::vector<Complex> next(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= r * coeffs[k];
    }
    coeffs = std::move(next);
  }
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  const double cutoff = kTrimRelative * max_abs_coeff();
  while (!coeffs_.empty() && (coeffs_.back() == Complex{} || std::abs(coeffs_.back()) <= cutoff)) {
    coeffs_.pop_back();
  }
}

Complex Poly::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly out = *this;
  const Complex lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  out.coeffs_.back() = 1.0;
  return out;
}

double Poly::coeff_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Complex> Poly::roots() const {
  const int n = degree();
  if (n <= 0) return {};
  if (n == 1) return {-coeffs_[0] / coeffs_[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const Complex lead = leading();
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

std::vector<Complex> Poly::taylor_at(Complex z0, int count) const {
  std::vector<Complex> work = coeffs_;
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int r = 0; r < count; ++r) {
    if (work.empty()) {
      out.emplace_back();
      continue;
    }
    // Synthetic division: work = q*(z - z0) + rem.
    Complex carry{};
    std::vector<Complex> quotient(work.size() - 1);
    for (std::size_t k = work.size(); k-- > 0;) {
      const Complex value = work[k] + carry * z0;
      if (k == 0) {
        out.push_back(value);
      } else {
        quotient[k - 1] = value;
      }
      carry = value;
    }
    work = std::move(quotient);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Complex> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Poly& Poly::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyDivision divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dn = dividend.degree();
  const int dd = divisor.degree();
  if (dn < dd) return {Poly{}, dividend};
  std::vector<Complex> rem = dividend.coeffs();
  std::vector<Complex> quot(static_cast<std::size_t>(dn - dd) + 1);
  const Complex lead = divisor.leading();
  for (int k = dn - dd; k >= 0; --k) {
    const Complex q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

double coeff_distance(const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Poly pow(const Poly& p, int exponent) {
  Poly out{1.0};
  for (int i = 0; i < exponent; ++i) out *= p;
  return out;
}

}  // namespace corona
