#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace corona {

using Complex = std::complex<double>;

// Relative threshold below which leading coefficients are dropped.
inline constexpr double kTrimRelative = 1e-14;

// Dense polynomial with complex coefficients in ascending degree order.
// Always kept trimmed: the leading coefficient is nonzero unless the
// polynomial is zero, in which case the coefficient list is empty.
class Poly {
 public:
  Poly() = default;
  Poly(Complex constant);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<Complex> coeffs);
  explicit Poly(std::vector<Complex> coeffs);

  static Poly monomial(int degree, Complex c = 1.0);
  // Expands prod (z - r) over the given roots.
  static Poly from_roots(std::span<const Complex> roots);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  // Coefficient of z^k; zero past the degree.
  Complex operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }
  Complex leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

  // Horner evaluation.
  Complex operator()(Complex z) const;

  Poly derivative() const;
  Poly monic() const;

  // Sum of coefficient moduli; an upper bound for sup |p| on the closed disk.
  double coeff_sum() const;
  double max_abs_coeff() const;

  // Roots as eigenvalues of the companion matrix.
  std::vector<Complex> roots() const;

  // Taylor coefficients p^(r)(z0)/r! for r = 0..count-1, obtained by
  // repeated synthetic division by (z - z0).
  std::vector<Complex> taylor_at(Complex z0, int count) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(Complex s);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, Complex s) { return lhs *= s; }
  friend Poly operator*(Complex s, Poly rhs) { return rhs *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

// Long division; throws std::domain_error on a zero divisor.
PolyDivision divmod(const Poly& dividend, const Poly& divisor);

// Largest coefficient modulus of (a - b).
double coeff_distance(const Poly& a, const Poly& b);

Poly pow(const Poly& p, int exponent);

}  // namespace corona
