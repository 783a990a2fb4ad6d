#include <algorithm>

#include "corona/ideal.hpp"
#include "corona/tuple.hpp"
#include "test_util.hpp"

using namespace corona;
using corona::testing::expect_code;
using corona::testing::random_coeffs;

TEST(ZeroIdeal, GeneratorExamples) {
  EXPECT_EQ(ideal_from_zeros({{0.0, 1}}).generator(), (Poly{0.0, 1.0}));
  EXPECT_EQ(ideal_from_zeros({{0.0, 2}}).generator(), (Poly{0.0, 0.0, 1.0}));
  EXPECT_EQ(ideal_from_zeros({{0.5, 1}, {-0.5, 1}}).generator(), (Poly{-0.25, 0.0, 1.0}));
  const ZeroIdeal i = ideal_from_zeros({{Complex(0.1, 0.2), 2}, {-0.3, 1}});
  EXPECT_EQ(i.total_multiplicity(), 3);
  EXPECT_EQ(i.anchor(), Complex(0.1, 0.2));
}

TEST(ZeroIdeal, RejectsBadZeroSets) {
  expect_code([] { ideal_from_zeros({{1.0, 1}}); }, ErrorCode::ZeroOnBoundary);
  expect_code([] { ideal_from_zeros({{Complex(0.8, 0.7), 1}}); }, ErrorCode::ZeroOnBoundary);
  expect_code([] { ideal_from_zeros({{0.2, 1}, {0.2, 2}}); }, ErrorCode::DuplicatePoint);
  expect_code([] { ideal_from_zeros({}); }, ErrorCode::DomainError);
  expect_code([] { ideal_from_zeros({{0.0, 0}}); }, ErrorCode::DomainError);
}

TEST(Decompose, Examples) {
  const ZeroIdeal at0 = ideal_from_zeros({{0.0, 1}});
  Decomposition d = decompose(RationalFn(Poly{0.7, 0.0, 0.2}), at0);
  EXPECT_EQ(d.constant, Complex(0.7));
  EXPECT_EQ(d.ideal_part.num(), (Poly{0.0, 0.0, 0.2}));

  d = decompose(RationalFn(Poly{0.8, 0.1}), at0);
  EXPECT_EQ(d.constant, Complex(0.8));
  EXPECT_LT(coeff_distance(d.ideal_part.num(), Poly{0.0, 0.1}), 1e-15);

  const ZeroIdeal two = ideal_from_zeros({{0.0, 1}, {0.5, 1}});
  try {
    decompose(RationalFn(Poly{0.7, 0.2}), two);
    ADD_FAILURE() << "expected NotInSubalgebra";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInSubalgebra);
    ASSERT_TRUE(e.witness().has_value());
    EXPECT_EQ(*e.witness(), Complex(0.5));
  }
}

TEST(Decompose, MultiplicityChecksDerivatives) {
  const ZeroIdeal double0 = ideal_from_zeros({{0.0, 2}});
  EXPECT_NO_THROW(decompose(RationalFn(Poly{1.0, 0.0, 3.0}), double0));
  expect_code([&] { decompose(RationalFn(Poly{1.0, 1e-3}), double0); }, ErrorCode::NotInSubalgebra);
  EXPECT_GT(membership_residual(RationalFn(Poly{0.0, 1e-3}), double0), 1e-9);
  EXPECT_EQ(membership_residual(RationalFn(Poly{0.0, 0.0, 5.0}), double0), 0.0);
}

TEST(Decompose, RationalIdealPart) {
  // z / (z - 2) lies in I({0}).
  const RationalFn phi = RationalFn::make(Poly{0.0, 1.0}, Poly{-2.0, 1.0});
  const ZeroIdeal at0 = ideal_from_zeros({{0.0, 1}});
  EXPECT_LT(membership_residual(phi, at0), 1e-15);
  const Decomposition d = decompose(RationalFn(Complex(0.3)) + phi, at0);
  EXPECT_NEAR(std::abs(d.constant - 0.3), 0.0, 1e-15);
}

TEST(Decompose, RoundTripProperty) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const ZeroIdeal ideal = random_ideal(rng, 1, 3, 2, 4);
    const Complex c = rng.in_disk();
    const Poly r(random_coeffs(rng, 1 + trial % 3));
    const Poly phi = ideal.generator() * r;
    const Decomposition d = decompose(RationalFn(Poly(c) + phi), ideal);
    const double tau = membership_tolerance(phi.coeff_sum() + std::abs(c));
    EXPECT_LE(std::abs(d.constant - c), tau);
    EXPECT_LE(coeff_distance(d.ideal_part.num(), phi), tau);
    EXPECT_LE(d.residual, 1e-9);
  }
}

TEST(Tuple, EvalExamples) {
  TupleValue v = tuple_eval(FnTuple({RationalFn(Poly{0.0, 1.0})}), 0.0);
  EXPECT_EQ(v.values.front(), Complex(0.0));
  EXPECT_EQ(v.gramian, 0.0);

  v = tuple_eval(FnTuple({RationalFn(Poly{0.8, 0.1}), RationalFn(Poly{0.5})}), 0.0);
  EXPECT_EQ(v.values[0], Complex(0.8));
  EXPECT_EQ(v.values[1], Complex(0.5));
  EXPECT_NEAR(v.gramian, 0.89, 1e-15);

  for (const Complex z : {Complex(0.3, 0.1), Complex(-1, 0), Complex(0, 0.99)}) {
    EXPECT_EQ(tuple_eval(FnTuple({RationalFn(Poly{1.0})}), z).gramian, 1.0);
  }
}

TEST(Tuple, TailBoundInterval) {
  const FnTuple f({RationalFn(Poly{0.6})}, 0.1);
  const TupleValue v = tuple_eval(f, 0.5);
  EXPECT_NEAR(v.gramian, 0.36, 1e-15);
  EXPECT_NEAR(v.gramian_upper, 0.37, 1e-15);
  expect_code([] { FnTuple({RationalFn(Poly{1.0})}, -1.0); }, ErrorCode::DomainError);
}

TEST(Tuple, GramianPermutationInvariant) {
  Rng rng(9);
  std::vector<RationalFn> entries;
  for (int j = 0; j < 6; ++j) entries.emplace_back(Poly(random_coeffs(rng, 1 + j % 4)));
  const Complex z(0.2, -0.6);
  const double base = tuple_eval(FnTuple(entries), z).gramian;
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  for (int k = 0; k < 20; ++k) {
    std::next_permutation(perm.begin(), perm.end());
    std::vector<RationalFn> shuffled;
    for (int i : perm) shuffled.push_back(entries[static_cast<std::size_t>(i)]);
    EXPECT_NEAR(tuple_eval(FnTuple(shuffled), z).gramian, base, 1e-14 * base);
  }
}

TEST(Tuple, SubalgebraDecomposition) {
  const ZeroIdeal at0 = ideal_from_zeros({{0.0, 1}});
  const FnTuple f({RationalFn(Poly{0.8, 0.1}), RationalFn(Poly{0.5})});
  const SubalgebraTuple s = SubalgebraTuple::decompose(f, at0);
  EXPECT_EQ(s.constant_part, (std::vector<Complex>{0.8, 0.5}));
  EXPECT_NEAR(s.constant_norm_sq(), 0.89, 1e-15);
  EXPECT_TRUE(s.ideal_part[1].is_zero());

  const ZeroIdeal two = ideal_from_zeros({{0.0, 1}, {0.5, 1}});
  expect_code([&] { SubalgebraTuple::decompose(f, two); }, ErrorCode::NotInSubalgebra);
}

TEST(Tuple, DotAndNorms) {
  const FnTuple a({RationalFn(Poly{1.0, 1.0}), RationalFn(Poly{2.0})});
  const FnTuple b({RationalFn(Poly{0.0, 1.0}), RationalFn(Poly{-1.0})});
  EXPECT_EQ(dot(a, b).num(), (Poly{-2.0, 1.0, 1.0}));
  expect_code([&] { dot(a, FnTuple({RationalFn(Poly{1.0})})); }, ErrorCode::DimensionMismatch);
  EXPECT_DOUBLE_EQ(l2_norm({3.0, Complex(0, 4.0)}), 5.0);
  EXPECT_DOUBLE_EQ(l2_norm_sq({3.0, Complex(0, 4.0)}), 25.0);
}
