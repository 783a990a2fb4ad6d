#include <cmath>
#include <numbers>

#include "corona/norms.hpp"
#include "test_util.hpp"

using namespace corona;
using corona::testing::expect_code;
using corona::testing::random_poly;

namespace {

FnTuple worked_tuple() { return FnTuple({RationalFn(Poly{0.8, 0.1}), RationalFn(Poly{0.5})}); }

double log_sq_psi(double t) {
  const double l = -2.0 * std::log(t);
  return 1.0 / (l * l);
}

// Antiderivative of psi(t)/t for psi = 1/ln^2(t^-2).
double log_sq_antiderivative(double t) { return 1.0 / (4.0 * std::log(1.0 / t)); }

}  // namespace

TEST(DiskGrid, DefaultsAndValidation) {
  const DiskGrid g;
  EXPECT_EQ(g.angular_count, 512);
  EXPECT_EQ(g.boundary_count, 512);
  EXPECT_EQ(g.radii, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 0.9, 0.99}));
  EXPECT_NO_THROW(g.validate());
  EXPECT_EQ(g.interior_points().size(), 1u + 5u * 512u);
  EXPECT_EQ(g.boundary_points().size(), 512u);
  EXPECT_EQ(g.boundary_points(2048).size(), 2048u);
  EXPECT_EQ(DiskGrid::for_degree(100).boundary_count, 800);
  EXPECT_EQ(DiskGrid::for_degree(3).boundary_count, 512);

  DiskGrid bad;
  bad.radii = {0.5, 0.25};
  expect_code([&] { bad.validate(); }, ErrorCode::DomainError);
  bad.radii = {0.0, 1.0};
  expect_code([&] { bad.validate(); }, ErrorCode::DomainError);
  bad = DiskGrid();
  bad.angular_count = 4;
  expect_code([&] { bad.validate(); }, ErrorCode::DomainError);
}

TEST(SupNorm, Examples) {
  const DiskGrid grid;
  for (int d = 0; d <= 5; ++d) {
    const NormInterval n = sup_norm(RationalFn(Poly::monomial(d)), grid);
    EXPECT_NEAR(n.lower, 1.0, 1e-15);
    EXPECT_NEAR(n.upper, 1.0, 1e-13);
    EXPECT_GE(n.upper, 1.0);
  }
  const NormInterval one_plus_z = sup_norm(RationalFn(Poly{1.0, 1.0}), grid);
  EXPECT_NEAR(one_plus_z.lower, 2.0, 1e-15);
  EXPECT_NEAR(one_plus_z.upper, 2.0, 1e-13);

  const NormInterval w = sup_norm(worked_tuple(), grid);
  EXPECT_NEAR(w.upper, std::sqrt(0.81 + 0.25), 1e-12);
  EXPECT_NEAR(w.lower, std::sqrt(0.81 + 0.25), 1e-12);  // attained at z = 1
  EXPECT_LE(w.lower, w.upper);
}

TEST(SupNorm, TailBoundEntersUpper) {
  const FnTuple f({RationalFn(Poly{0.6})}, 0.8);
  EXPECT_NEAR(sup_upper(f), 1.0, 1e-13);
  EXPECT_GE(sup_upper(f), 1.0);
}

// Doubling sample counts gives nested point sets once past the degree-driven floor.
TEST(SupNorm, LowerIsMonotoneInBoundaryCount) {
  Rng rng(32);
  for (int trial = 0; trial < 32; ++trial) {
    const RationalFn p(random_poly(rng, rng.uniform_int(1, 12)));
    double previous = 0.0;
    for (int m = 128; m <= 4096; m *= 2) {
      DiskGrid g;
      g.boundary_count = m;
      const NormInterval n = sup_norm(p, g);
      EXPECT_GE(n.lower, previous);
      EXPECT_LE(n.lower, n.upper);
      previous = n.lower;
    }
  }
}

TEST(InfGramian, Examples) {
  const DiskGrid grid;
  EXPECT_EQ(inf_gramian(FnTuple({RationalFn(Poly{0.0, 1.0})}), grid), 0.0);  // radius 0 is on the grid
  EXPECT_EQ(inf_gramian(FnTuple({RationalFn(Poly(1.0))}), grid), 1.0);
  const double m = inf_gramian(worked_tuple(), grid);
  EXPECT_GE(m, 0.74 - 1e-12);
  EXPECT_NEAR(m, 0.74, 1e-12);  // z = -1 is a boundary sample
}

TEST(Uchiyama, Examples) {
  EXPECT_NEAR(uchiyama_bound(0.25), 36.0 * std::log(4.0), 1e-12);
  EXPECT_NEAR(uchiyama_bound(0.25), 49.9066, 1e-3);
  expect_code([] { uchiyama_bound(0.5); }, ErrorCode::DomainError);
  expect_code([] { uchiyama_bound(0.0); }, ErrorCode::DomainError);
  expect_code([] { uchiyama_bound(std::exp(-1.0)); }, ErrorCode::DomainError);
  EXPECT_NEAR(uchiyama_bound(std::exp(-1.0) - 1e-9), 9.0 * std::numbers::e, 1e-6);
}

TEST(Uchiyama, DerivativeMatchesFiniteDifferences) {
  const double upper = std::exp(-1.0);
  for (int k = 1; k <= 16; ++k) {
    const double x = upper * k / 17.0;
    const double analytic = -9.0 * (std::log(1.0 / x) + 1.0) / (x * x);
    const double h = 1e-6 * x;
    const double fd = (uchiyama_bound(x + h) - uchiyama_bound(x - h)) / (2 * h);
    EXPECT_LT(analytic, 0.0);
    EXPECT_LT(fd, 0.0);
    EXPECT_NEAR(fd, analytic, 1e-5 * std::abs(analytic));
  }
}

TEST(TreilPsi, Examples) {
  expect_code([] { treil_psi(std::exp(-0.5), 0, 1.0); }, ErrorCode::DomainError);
  EXPECT_NEAR(treil_psi(std::exp(-std::numbers::e / 2), 0, 1.0), 1.0 / std::numbers::e, 1e-9);
  EXPECT_EQ(treil_psi(0.0, 2, 0.5), 0.0);
  expect_code([] { treil_psi(1.5, 0, 1.0); }, ErrorCode::DomainError);
  expect_code([] { treil_psi(0.1, -1, 1.0); }, ErrorCode::DomainError);

  // n = 1, eps = 1 at t with t^-2 = e^e: L_1 = e, L_2 = 1, L_3 = 0 -> out of domain.
  try {
    treil_psi(std::exp(-std::numbers::e / 2), 1, 1.0);
    ADD_FAILURE() << "expected DomainError";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("L_3"), std::string::npos) << e.what();
  }
}

TEST(TreilPsi, HandValueAgreesWithProduct) {
  const double t = 1e-3;
  const double l1 = std::log(1.0 / (t * t));
  const double l2 = std::log(l1);
  const double l3 = std::log(l2);
  EXPECT_NEAR(treil_psi(t, 1, 0.5), 1.0 / (l1 * l2 * std::pow(l3, 1.5)), 1e-15);
}

TEST(TreilPsi, MonotoneOnSampledDomain) {
  for (int n = 0; n <= 2; ++n) {
    const double t_max = n == 0 ? 0.3 : (n == 1 ? 0.2 : 1e-4);
    double previous = 0.0;
    for (int k = 1; k <= 64; ++k) {
      const double t = t_max * std::pow(1e-12, 1.0 - k / 64.0);
      const double v = treil_psi(t, n, 0.5);
      EXPECT_GE(v, previous) << "n=" << n << " t=" << t;
      previous = v;
    }
  }
}

TEST(PsiIntegral, Examples) {
  EXPECT_EQ(psi_integral([](double) { return 0.0; }, 1e-8, 1.0, 500), 0.0);
  EXPECT_NEAR(psi_integral([](double t) { return t; }, 1e-12, 1.0, 2000), 1.0, 1e-9);
  expect_code([] { psi_integral([](double t) { return 1.0 - t; }, 0.1, 0.9, 100); }, ErrorCode::NonMonotone);
  expect_code([] { psi_integral([](double t) { return t; }, 0.5, 0.1, 100); }, ErrorCode::DomainError);
}

TEST(PsiIntegral, ClosedFormOracle) {
  const std::vector<double> t_mins{1e-2, 1e-4, 1e-8, 1e-16, 1e-32};
  const double t_max = 0.5;
  const PsiIntegralTrend trend = psi_integral_check(log_sq_psi, t_mins, t_max, 2000);
  ASSERT_EQ(trend.partial.size(), t_mins.size());
  double previous = 0.0;
  for (std::size_t k = 0; k < t_mins.size(); ++k) {
    const double exact = log_sq_antiderivative(t_max) - log_sq_antiderivative(t_mins[k]);
    EXPECT_NEAR(trend.partial[k], exact, 1e-6);
    EXPECT_GT(trend.partial[k], previous);
    previous = trend.partial[k];
  }
  // Partial integrals approach 1/(4 ln 2).
  EXPECT_NEAR(trend.partial.back(), log_sq_antiderivative(t_max), 1e-2);
}

TEST(TreilHypothesis, Examples) {
  const DiskGrid grid;
  const FnTuple f = FnTuple({RationalFn(Poly{0.6, 0.1}), RationalFn(Poly(0.6))});
  const PsiFunction psi = [](double t) { return t; };

  EXPECT_TRUE(check_treil_hypothesis(f, RationalFn(0.0), psi, grid).holds);

  const HypothesisCheck bad = check_treil_hypothesis(f, RationalFn(2.0), psi, grid);
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->h_abs, 2.0);
  EXPECT_GT(bad.witness->h_abs, bad.witness->bound);

  // FF* ranges over [0.61, 0.85]; scale h to 0.9 of the grid minimum of FF* psi(FF*).
  double min_bound = 1e300;
  for (const Complex z : grid.all_points()) {
    const double g = tuple_eval(f, z).gramian;
    min_bound = std::min(min_bound, g * psi(g));
  }
  EXPECT_TRUE(check_treil_hypothesis(f, RationalFn(0.9 * min_bound), psi, grid).holds);
  EXPECT_FALSE(check_treil_hypothesis(f, RationalFn(1.1 * min_bound), psi, grid).holds);
}

TEST(TreilHypothesis, IteratedLogPsiOnSmallGramian) {
  // FF* in [0.0016, 0.0036] lies inside the n = 0 iterated-log domain.
  const FnTuple f({RationalFn(Poly{0.05, 0.01})});
  const PsiFunction psi = [](double t) { return treil_psi(t, 0, 1.0); };
  const DiskGrid grid;
  double min_bound = 1e300;
  for (const Complex z : grid.all_points()) {
    const double g = tuple_eval(f, z).gramian;
    min_bound = std::min(min_bound, g * psi(g));
  }
  EXPECT_TRUE(check_treil_hypothesis(f, RationalFn(0.9 * min_bound), psi, grid).holds);
}

TEST(WolffHypothesis, WitnessAtViolation) {
  const DiskGrid grid;
  const FnTuple f({RationalFn(Poly{0.5, 0.3})});
  EXPECT_TRUE(check_wolff_hypothesis(f, RationalFn(Poly{0.1, 0.05}), grid).holds);
  // |h| = 0.3 exceeds |f(-1)| = 0.2.
  const HypothesisCheck c = check_wolff_hypothesis(f, RationalFn(Poly(0.3)), grid);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.witness);
  EXPECT_GT(c.witness->h_abs, std::sqrt(c.witness->gramian));
  EXPECT_LT(std::abs(c.witness->z), 1.0 + 1e-12);
}
