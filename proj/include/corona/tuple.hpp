#pragma once

#include <vector>

#include "corona/ideal.hpp"
#include "corona/rational.hpp"

namespace corona {

// Row tuple (f_1, ..., f_n). `tail_bound` is a certified bound on the l2
// norm of the omitted entries of an infinite tuple; 0 for finite tuples.
struct FnTuple {
  std::vector<RationalFn> entries;
  double tail_bound = 0.0;

  FnTuple() = default;
  explicit FnTuple(std::vector<RationalFn> e, double tail = 0.0);

  std::size_t size() const { return entries.size(); }
  const RationalFn& operator[](std::size_t i) const { return entries[i]; }
  int max_degree() const;
};

struct TupleValue {
  std::vector<Complex> values;
  double gramian = 0.0;        // sum |f_j(z)|^2 over the stored entries
  double gramian_upper = 0.0;  // gramian + tail_bound^2
};

TupleValue tuple_eval(const FnTuple& tuple, Complex z);

// Pointwise values only.
std::vector<Complex> eval_values(const FnTuple& tuple, Complex z);

// F = F_c + phi_F with respect to I(Z).
struct SubalgebraTuple {
  FnTuple tuple;
  std::vector<Complex> constant_part;
  FnTuple ideal_part;
  ZeroIdeal ideal;

  // Decomposes each entry; throws NotInSubalgebra on the first failure.
  static SubalgebraTuple decompose(FnTuple tuple, const ZeroIdeal& ideal);

  std::size_t size() const { return tuple.size(); }
  // ||F_c||^2
  double constant_norm_sq() const;
};

double l2_norm(const std::vector<Complex>& v);
double l2_norm_sq(const std::vector<Complex>& v);

// sum_j a_j * b_j as a rational function.
RationalFn dot(const FnTuple& a, const FnTuple& b);

}  // namespace corona
