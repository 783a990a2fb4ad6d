#include "corona/bezout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "corona/errors.hpp"

namespace corona {
namespace {

// Drops leading coefficients that are negligible against `scale`.
Poly drop_small_leading(const Poly& p, double scale) {
  std::vector<Complex> c = p.coeffs();
  const double cutoff = kDegreeDropTolerance * scale;
  while (!c.empty() && std::abs(c.back()) <= cutoff) c.pop_back();
  return Poly(std::move(c));
}

double residual_of(const std::vector<Poly>& f, const std::vector<Poly>& cof, const Poly& g) {
  Poly acc;
  for (std::size_t i = 0; i < f.size(); ++i) acc += cof[i] * f[i];
  return coeff_distance(acc, g);
}

}  // namespace

EuclidResult extended_euclid(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::AllZero, "extended_euclid of two zero polynomials");

  Poly r0 = p, s0{1.0}, t0;
  Poly r1 = q, s1, t1{1.0};
  if (!r0.is_zero()) {
    const Complex inv = 1.0 / r0.leading();
    r0 = r0.monic();
    s0 *= inv;
  }
  if (!r1.is_zero()) {
    const Complex inv = 1.0 / r1.leading();
    r1 = r1.monic();
    t1 *= inv;
  }

  while (!r1.is_zero()) {
    const double scale = std::max({1.0, r0.max_abs_coeff(), r1.max_abs_coeff()});
    auto [quot, rem] = divmod(r0, r1);
    rem = drop_small_leading(rem, scale);
    Poly s2 = s0 - quot * s1;
    Poly t2 = t0 - quot * t1;
    r0 = std::move(r1);
    s0 = std::move(s1);
    t0 = std::move(t1);
    if (rem.is_zero()) {
      r1 = Poly{};
      break;
    }
    const Complex inv = 1.0 / rem.leading();
    r1 = rem.monic();
    s1 = s2 * inv;
    t1 = t2 * inv;
  }
  return {r0, s0, t0};
}

BezoutCertificate bezout_tuple(const std::vector<Poly>& f) {
  const std::size_t n = f.size();
  if (std::all_of(f.begin(), f.end(), [](const Poly& p) { return p.is_zero(); })) {
    throw Error(ErrorCode::AllZero, "bezout_tuple of an all-zero tuple");
  }
  BezoutCertificate cert;
  cert.cofactors.assign(n, Poly{});

  for (std::size_t k = 0; k < n; ++k) {
    if (f[k].degree() == 0) {
      cert.gcd = Poly(1.0);
      cert.cofactors[k] = Poly(1.0 / f[k].leading());
      cert.residual = residual_of(f, cert.cofactors, cert.gcd);
      return cert;
    }
  }

  Poly g;
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k].is_zero()) continue;
    if (g.is_zero()) {
      cert.cofactors[k] = Poly(1.0 / f[k].leading());
      g = f[k].monic();
    } else {
      auto [gk, a, b] = extended_euclid(g, f[k]);
      for (std::size_t i = 0; i < k; ++i) cert.cofactors[i] *= a;
      cert.cofactors[k] = std::move(b);
      g = std::move(gk);
    }
    if (g.degree() == 0) break;
  }
  cert.gcd = std::move(g);
  cert.residual = residual_of(f, cert.cofactors, cert.gcd);
  return cert;
}

FnTuple corona_bezout(const FnTuple& f, double margin) {
  std::vector<Poly> nums;
  nums.reserve(f.size());
  for (const auto& e : f.entries) nums.push_back(e.num());
  const BezoutCertificate cert = bezout_tuple(nums);
  for (const Complex& r : cert.gcd.roots()) {
    if (std::abs(r) < margin) {
      std::ostringstream os;
      os << "common zero " << r << " of modulus " << std::abs(r) << " inside margin " << margin;
      throw Error(ErrorCode::CommonZeroInDisk, os.str(), r);
    }
  }
  std::vector<RationalFn> g;
  g.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    g.push_back(RationalFn::make(cert.cofactors[i] * f[i].den(), cert.gcd, margin));
  }
  return FnTuple(std::move(g));
}

FnTuple ideal_solve(const FnTuple& f, const Poly& h, double margin) {
  if (h.is_zero()) return FnTuple(std::vector<RationalFn>(f.size(), RationalFn(Poly{})));
  std::vector<Poly> nums;
  nums.reserve(f.size());
  for (const auto& e : f.entries) nums.push_back(e.num());
  const BezoutCertificate cert = bezout_tuple(nums);

  std::vector<Complex> inside, outside;
  for (const Complex& r : cert.gcd.roots()) (std::abs(r) < margin ? inside : outside).push_back(r);
  const Poly g_in = Poly::from_roots(inside);
  const Poly g_out = Poly::from_roots(outside);

  auto [hq, rem] = divmod(h, g_in);
  const double tol = 1e-9 * (1.0 + h.coeff_sum());
  if (rem.max_abs_coeff() > tol) {
    std::ostringstream os;
    os << "h is not divisible by the in-disk part of gcd(F) (degree " << g_in.degree() << "), remainder "
       << rem.max_abs_coeff();
    throw Error(ErrorCode::NotInIdealNumerically, os.str(), inside.empty() ? std::nullopt : std::optional(inside.front()));
  }
  std::vector<RationalFn> g;
  g.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    g.push_back(RationalFn::make(hq * cert.cofactors[i] * f[i].den(), g_out, margin));
  }
  return FnTuple(std::move(g));
}

std::vector<Complex> minimal_pointwise_solution(const FnTuple& f, Complex z) {
  const TupleValue v = tuple_eval(f, z);
  if (v.gramian <= std::numeric_limits<double>::min()) {
    throw Error(ErrorCode::GramianZero, "F(z) F(z)^* vanishes", z);
  }
  std::vector<Complex> out;
  out.reserve(v.values.size());
  for (const auto& x : v.values) out.push_back(std::conj(x) / v.gramian);
  return out;
}

}  // namespace corona
