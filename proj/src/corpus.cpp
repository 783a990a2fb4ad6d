#include "corona/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "corona/bezout.hpp"
#include "corona/errors.hpp"
#include "corona/norms.hpp"

namespace corona {

Complex Rng::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform01());
  const double theta = 2.0 * std::numbers::pi * uniform01();
  return std::polar(r, theta);
}

ZeroIdeal random_ideal(Rng& rng, int zeros_min, int zeros_max, int max_multiplicity, int degree_budget) {
  if (degree_budget < 1 || zeros_min < 1 || zeros_min > zeros_max) {
    throw Error(ErrorCode::DomainError, "random_ideal: need 1 <= zeros_min <= zeros_max and a positive budget");
  }
  const int count = rng.uniform_int(std::min(zeros_min, degree_budget), std::min(zeros_max, degree_budget));
  int remaining = degree_budget - count;
  std::vector<IdealZero> zeros;
  for (int k = 0; k < count; ++k) {
    const int extra = rng.uniform_int(0, std::max(0, std::min(max_multiplicity - 1, remaining)));
    remaining -= extra;
    zeros.push_back({rng.in_disk(0.9), 1 + extra});
  }
  return ZeroIdeal::from_zeros(std::move(zeros));
}

FnTuple random_subalgebra_tuple(Rng& rng, const ZeroIdeal& ideal, int n, int max_degree, double margin,
                                int rejection_budget, int* rejections) {
  const Poly& gen = ideal.generator();
  const int gen_degree = gen.degree();
  if (n < 1 || max_degree < gen_degree) {
    throw Error(ErrorCode::DomainError, "random_subalgebra_tuple: need n >= 1 and max_degree >= deg(generator)");
  }
  for (int attempt = 0; attempt <= rejection_budget; ++attempt) {
    std::vector<Poly> f;
    double sum_sq = 0.0;
    for (int j = 0; j < n; ++j) {
      const Complex c = rng.in_disk();
      const int degree = rng.uniform_int(gen_degree, max_degree);
      std::vector<Complex> r(static_cast<std::size_t>(degree - gen_degree) + 1);
      for (auto& x : r) x = rng.in_disk();
      Poly fj = Poly(c) + gen * Poly(std::move(r));
      sum_sq += fj.coeff_sum() * fj.coeff_sum();
      f.push_back(std::move(fj));
    }
    const double scale = 1.0 / (std::sqrt(sum_sq) * (1.0 + 1e-12));
    for (auto& fj : f) fj *= scale;

    bool accepted = true;
    for (const Complex& root : bezout_tuple(f).gcd.roots()) {
      if (std::abs(root) < margin) accepted = false;
    }
    if (accepted) {
      if (rejections) *rejections = attempt;
      std::vector<RationalFn> entries(f.begin(), f.end());
      return FnTuple(std::move(entries));
    }
  }
  std::ostringstream os;
  os << "no admissible tuple after " << rejection_budget << " rejected draws";
  throw Error(ErrorCode::RejectionBudgetExceeded, os.str());
}

CorpusInstance generate_instance(const CorpusParams& params, std::uint64_t instance_seed) {
  Rng rng(instance_seed);
  CorpusInstance inst;
  inst.seed = instance_seed;
  const int n = rng.uniform_int(params.n_min, params.n_max);
  const int degree = rng.uniform_int(params.degree_min, params.degree_max);
  inst.ideal = random_ideal(rng, params.zeros_min, params.zeros_max, params.max_multiplicity, degree);
  inst.tuple = random_subalgebra_tuple(rng, inst.ideal, n, degree, params.pole_margin, params.rejection_budget,
                                       &inst.rejections);
  if (params.kind == "solve-ideal" || params.kind == "solve-wolff") {
    // Any w works for the multiplier; margin 0 disables the gcd rejection.
    FnTuple w = random_subalgebra_tuple(rng, inst.ideal, n, degree, 0.0, 0);
    Poly h;
    for (std::size_t j = 0; j < w.size(); ++j) h += w[j].num() * inst.tuple[j].num();
    inst.w = std::move(w);
    inst.h = std::move(h);
  }
  return inst;
}

std::vector<CorpusInstance> gen_instances(const CorpusParams& params) {
  if (params.count < 1) throw Error(ErrorCode::DomainError, "corpus count must be >= 1");
  Rng master(params.seed);
  std::vector<CorpusInstance> out;
  out.reserve(static_cast<std::size_t>(params.count));
  for (int i = 0; i < params.count; ++i) out.push_back(generate_instance(params, master.next()));
  return out;
}

Json instance_to_scenario(const CorpusInstance& inst, const CorpusParams& params) {
  const SubalgebraTuple sub = SubalgebraTuple::decompose(inst.tuple, inst.ideal);
  Json gram = Json::array();
  for (const auto& z : inst.ideal.zeros()) gram.push_back(tuple_eval(inst.tuple, z.point).gramian);

  Json s{{"schema_version", 1},
         {"kind", params.kind},
         {"seed", inst.seed},
         {"pole_margin", params.pole_margin},
         {"ideal", ideal_to_json(inst.ideal)},
         {"tuple", tuple_to_json(inst.tuple)},
         {"metadata",
          {{"corpus_seed", params.seed},
           {"instance_seed", inst.seed},
           {"rejections", inst.rejections},
           {"constant_part", complex_list_to_json(sub.constant_part)},
           {"fc_norm_sq", sub.constant_norm_sq()},
           {"gramian_at_zeros", gram},
           {"sup_upper", sup_upper(inst.tuple)}}}};
  if (inst.w) s["w"] = tuple_to_json(*inst.w);
  if (inst.h) s["h"] = poly_to_json(*inst.h);
  return s;
}

std::vector<Json> gen_corpus(const CorpusParams& params) {
  std::vector<Json> out;
  for (const auto& inst : gen_instances(params)) out.push_back(instance_to_scenario(inst, params));
  return out;
}

}  // namespace corona
