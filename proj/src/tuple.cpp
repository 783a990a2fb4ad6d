#include "corona/tuple.hpp"

#include <algorithm>
#include <cmath>

#include "corona/errors.hpp"

namespace corona {

FnTuple::FnTuple(std::vector<RationalFn> e, double tail) : entries(std::move(e)), tail_bound(tail) {
  if (tail_bound < 0.0) throw Error(ErrorCode::DomainError, "tail bound must be nonnegative");
}

int FnTuple::max_degree() const {
  int d = 0;
  for (const auto& f : entries) d = std::max(d, f.degree());
  return d;
}

TupleValue tuple_eval(const FnTuple& tuple, Complex z) {
  TupleValue out;
  out.values.reserve(tuple.size());
  for (const auto& f : tuple.entries) {
    const Complex v = f(z);
    out.values.push_back(v);
    out.gramian += std::norm(v);
  }
  out.gramian_upper = out.gramian + tuple.tail_bound * tuple.tail_bound;
  return out;
}

std::vector<Complex> eval_values(const FnTuple& tuple, Complex z) {
  std::vector<Complex> out;
  out.reserve(tuple.size());
  for (const auto& f : tuple.entries) out.push_back(f(z));
  return out;
}

SubalgebraTuple SubalgebraTuple::decompose(FnTuple tuple, const ZeroIdeal& ideal) {
  std::vector<Complex> constants;
  std::vector<RationalFn> parts;
  for (const auto& f : tuple.entries) {
    auto d = corona::decompose(f, ideal);
    constants.push_back(d.constant);
    parts.push_back(std::move(d.ideal_part));
  }
  const double tail = tuple.tail_bound;
  return SubalgebraTuple{std::move(tuple), std::move(constants), FnTuple(std::move(parts), tail), ideal};
}

double SubalgebraTuple::constant_norm_sq() const { return l2_norm_sq(constant_part); }

double l2_norm_sq(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

double l2_norm(const std::vector<Complex>& v) { return std::sqrt(l2_norm_sq(v)); }

RationalFn dot(const FnTuple& a, const FnTuple& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot of tuples with different lengths");
  RationalFn acc{Poly{}};
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
  return acc;
}

}  // namespace corona
