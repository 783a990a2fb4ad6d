#include <cmath>
#include <numbers>

#include "corona/rational.hpp"
#include "test_util.hpp"

using namespace corona;
using corona::testing::expect_code;
using corona::testing::random_poly;

TEST(Poly, CanonicalTrimmedForm) {
  Poly p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_TRUE(Poly(0.0).is_zero());
  EXPECT_TRUE((p - p).is_zero());

  // A leading coefficient below 1e-14 of the largest is dropped.
  Poly q{1.0, 1e-16};
  EXPECT_EQ(q.degree(), 0);
}

TEST(Poly, EvalExamples) {
  EXPECT_EQ((Poly{1.0, 0.0, 1.0})(0.0), Complex(1.0));
  EXPECT_NEAR(std::abs((Poly{0.8, 0.1})(-1.0) - 0.7), 0.0, 1e-15);
  const Poly p{Complex(1, 2), Complex(-3, 0.5), Complex(0.25, -1)};
  const Complex z(0.3, -0.7);
  const Complex direct = p[0] + p[1] * z + p[2] * z * z;
  EXPECT_NEAR(std::abs(p(z) - direct), 0.0, 1e-15);
}

TEST(Poly, FromRootsAndRoots) {
  const std::vector<Complex> roots{0.5, -0.5};
  const Poly g = Poly::from_roots(roots);
  EXPECT_EQ(g, (Poly{-0.25, 0.0, 1.0}));

  const std::vector<Complex> r3{Complex(0.2, 0.1), Complex(-0.7, 0.3), Complex(1.5, -2.0)};
  auto found = Poly::from_roots(r3).roots();
  ASSERT_EQ(found.size(), 3u);
  for (const auto& r : r3) {
    double best = 1e300;
    for (const auto& f : found) best = std::min(best, std::abs(f - r));
    EXPECT_LT(best, 1e-12);
  }
}

TEST(Poly, DivmodReconstructs) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng, 2 + trial % 6);
    const Poly b = random_poly(rng, 1 + trial % 3);
    const PolyDivision d = divmod(a, b);
    EXPECT_LT(d.remainder.degree(), b.degree());
    EXPECT_LT(coeff_distance(d.quotient * b + d.remainder, a), 1e-12);
  }
  EXPECT_THROW(divmod(Poly{1.0}, Poly()), std::domain_error);
}

TEST(Poly, TaylorMatchesDerivatives) {
  Rng rng(5);
  const Poly p = random_poly(rng, 6);
  const Complex z0(0.4, -0.3);
  const auto t = p.taylor_at(z0, 5);
  Poly d = p;
  double factorial = 1.0;
  for (int r = 0; r < 5; ++r) {
    if (r > 0) factorial *= r;
    EXPECT_NEAR(std::abs(t[static_cast<std::size_t>(r)] - d(z0) / factorial), 0.0, 1e-12) << "order " << r;
    d = d.derivative();
  }
}

TEST(Poly, CoefficientSumBoundsTheDisk) {
  const Poly p{1.0, Complex(0, -2), 0.5};
  EXPECT_DOUBLE_EQ(p.coeff_sum(), 3.5);
  EXPECT_DOUBLE_EQ(p.max_abs_coeff(), 2.0);
  for (int k = 0; k < 64; ++k) EXPECT_LE(std::abs(p(std::polar(1.0, 0.1 * k))), 3.5 + 1e-12);
}

TEST(Poly, PowAndMonic) {
  const Poly p{-2.0, 1.0};
  EXPECT_EQ(pow(p, 2), (Poly{4.0, -4.0, 1.0}));
  EXPECT_EQ(pow(p, 0), Poly(1.0));
  EXPECT_EQ((Poly{2.0, 4.0}).monic(), (Poly{0.5, 1.0}));
}

TEST(Poly, ProductOfEvalsAtRandomPoints) {
  Rng rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = random_poly(rng, 1 + trial % 6);
    const Poly b = random_poly(rng, 1 + (trial * 7) % 6);
    const Poly ab = a * b;
    for (int k = 0; k < 64; ++k) {
      const Complex z = rng.in_disk();
      const Complex want = a(z) * b(z);
      EXPECT_LE(std::abs(ab(z) - want), 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(Rational, EvalExample) {
  const RationalFn f = RationalFn::make(Poly{1.0}, Poly{-2.0, 1.0});
  EXPECT_NEAR(std::abs(f(0.0) - Complex(-0.5)), 0.0, 1e-15);
}

TEST(Rational, DenominatorIsMonicAndReduced) {
  const RationalFn f = RationalFn::make(Poly{1.0}, Poly{-4.0, 2.0});
  EXPECT_EQ(f.den(), (Poly{-2.0, 1.0}));
  EXPECT_EQ(f.num(), Poly(0.5));

  // (z-2)(z+0.5) / ((z-2)(z-3)) reduces to (z+0.5)/(z-3).
  const Poly num = Poly{-2.0, 1.0} * Poly{0.5, 1.0};
  const Poly den = Poly{-2.0, 1.0} * Poly{-3.0, 1.0};
  const RationalFn g = RationalFn::make(num, den);
  EXPECT_EQ(g.den().degree(), 1);
  EXPECT_LT(coeff_distance(g.den(), Poly{-3.0, 1.0}), 1e-9);
  EXPECT_LT(coeff_distance(g.num(), Poly{0.5, 1.0}), 1e-9);
}

TEST(Rational, PoleInsideMarginRejected) {
  expect_code([] { RationalFn::make(Poly{1.0}, Poly{-1.02, 1.0}); }, ErrorCode::PoleInsideMargin);
  expect_code([] { RationalFn::make(Poly{1.0}, Poly{-0.5, 1.0}); }, ErrorCode::PoleInsideMargin);
  // A custom margin below 1.02 accepts the same pole.
  EXPECT_NO_THROW(RationalFn::make(Poly{1.0}, Poly{-1.02, 1.0}, 1.01));
}

TEST(Rational, PoleTooCloseOnEvaluation) {
  const RationalFn f = RationalFn::make(Poly{1.0}, Poly{-1.02, 1.0}, 1.01);
  EXPECT_NO_THROW(f(1.0));
  expect_code([&] { f(Complex(1.02, 0.0)); }, ErrorCode::PoleTooClose);
}

TEST(Rational, ArithmeticAgreesPointwise) {
  Rng rng(3);
  const RationalFn a = RationalFn::make(random_poly(rng, 3), Poly::from_roots(std::vector<Complex>{2.0, Complex(0, -1.5)}));
  const RationalFn b = RationalFn::make(random_poly(rng, 2), Poly::from_roots(std::vector<Complex>{Complex(-1.2, 0.4)}));
  const RationalFn sum = a + b;
  const RationalFn diff = a - b;
  const RationalFn prod = a * b;
  for (int k = 0; k < 64; ++k) {
    const Complex z = rng.in_disk();
    const Complex az = a(z), bz = b(z);
    EXPECT_LE(std::abs(sum(z) - (az + bz)), 1e-12 * (1 + std::abs(az) + std::abs(bz)));
    EXPECT_LE(std::abs(diff(z) - (az - bz)), 1e-12 * (1 + std::abs(az) + std::abs(bz)));
    EXPECT_LE(std::abs(prod(z) - az * bz), 1e-12 * (1 + std::abs(az * bz)));
  }
  // Same denominator: the sum keeps it.
  const RationalFn c = RationalFn::make(Poly{1.0, 1.0}, a.den());
  EXPECT_EQ((a + c).den(), a.den());
}

TEST(Rational, ProductCancelsPoles) {
  const RationalFn inv = RationalFn::make(Poly{1.0}, Poly{-2.0, 1.0});
  const RationalFn p = RationalFn(Poly{-2.0, 1.0}) * inv;
  EXPECT_TRUE(p.is_polynomial());
  EXPECT_NEAR(std::abs(p(0.3) - 1.0), 0.0, 1e-12);
}

TEST(Rational, SupUpperBoundsSamples) {
  const RationalFn f = RationalFn::make(Poly{1.0, 0.5}, Poly::from_roots(std::vector<Complex>{1.5, Complex(0, 2.0)}));
  EXPECT_NEAR(f.den_lower_bound(), 0.5 * 1.0, 1e-12);
  const double upper = f.sup_upper_bound();
  for (int k = 0; k < 256; ++k) EXPECT_LE(std::abs(f(std::polar(1.0, 2 * std::numbers::pi * k / 256))), upper);
}
