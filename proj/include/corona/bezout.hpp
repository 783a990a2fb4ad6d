#pragma once

#include <vector>

#include "corona/poly.hpp"
#include "corona/rational.hpp"
#include "corona/tuple.hpp"

namespace corona {

// Relative size under which a Euclidean remainder counts as zero.
inline constexpr double kDegreeDropTolerance = 1e-12;

struct EuclidResult {
  Poly gcd;  // monic
  Poly a;    // cofactor of p
  Poly b;    // cofactor of q
};

// a p + b q = gcd(p, q) with minimal-degree cofactors. Each remainder is
// renormalized to monic; a remainder whose coefficients all fall below
// kDegreeDropTolerance * scale ends the sequence. Throws AllZero if both
// inputs are zero.
EuclidResult extended_euclid(const Poly& p, const Poly& q);

struct BezoutCertificate {
  Poly gcd;
  std::vector<Poly> cofactors;
  double residual = 0.0;  // max |coeff| of sum cofactor_i f_i - gcd
};

// gcd(f_1, ..., f_n) and cofactors by iterated extended_euclid. A nonzero
// constant entry short-circuits to a unit cofactor. Throws AllZero.
BezoutCertificate bezout_tuple(const std::vector<Poly>& f);

// G with F G^T = 1: for f_i = p_i/q_i and sum a_i p_i = g, G_i = a_i q_i / g.
// Throws CommonZeroInDisk when g has a root of modulus < margin.
FnTuple corona_bezout(const FnTuple& f, double margin = kDefaultPoleMargin);

// G with F G^T = h. The roots of gcd(numerators) inside modulus `margin`
// must divide h; the remaining factor becomes the denominator. Throws
// NotInIdealNumerically otherwise.
FnTuple ideal_solve(const FnTuple& f, const Poly& h, double margin = kDefaultPoleMargin);

// conj(F(z)) / (F(z) F(z)^*): the minimal-norm pointwise solution of
// F(z) v = 1. Throws GramianZero.
std::vector<Complex> minimal_pointwise_solution(const FnTuple& f, Complex z);

}  // namespace corona
