#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "corona/ideal.hpp"
#include "corona/json_io.hpp"
#include "corona/rational.hpp"
#include "corona/tuple.hpp"

namespace corona {

// mt19937_64 with fixed mappings to doubles and integers (the std
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Inclusive range.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // Uniform on the disk of the given radius.
  Complex in_disk(double radius = 1.0);

 private:
  std::mt19937_64 engine_;
};

struct CorpusParams {
  std::string kind = "solve-corona";  // solve-corona | solve-ideal | solve-wolff
  int n_min = 2;
  int n_max = 8;
  int degree_min = 1;
  int degree_max = 6;
  int zeros_min = 1;
  int zeros_max = 3;
  int max_multiplicity = 2;
  int count = 1;
  std::uint64_t seed = 0;
  double pole_margin = kDefaultPoleMargin;
  int rejection_budget = 1000;  // rejected draws allowed per instance
};

struct CorpusInstance {
  std::uint64_t seed = 0;
  ZeroIdeal ideal;
  FnTuple tuple;                 // rescaled so the coefficient-sum bound of ||F|| is <= 1
  int rejections = 0;
  std::optional<FnTuple> w;      // multiplier tuple for ideal / Wolff instances
  std::optional<Poly> h;         // h = w F^T
};

// Random Z with sum of multiplicities <= degree_budget.
ZeroIdeal random_ideal(Rng& rng, int zeros_min, int zeros_max, int max_multiplicity, int degree_budget);

// F_j = c_j + gen * r_j with deg F_j <= max_degree, rescaled; draws are
// rejected while gcd(F) has a root of modulus < margin. Throws
// RejectionBudgetExceeded.
FnTuple random_subalgebra_tuple(Rng& rng, const ZeroIdeal& ideal, int n, int max_degree, double margin,
                                int rejection_budget, int* rejections = nullptr);

CorpusInstance generate_instance(const CorpusParams& params, std::uint64_t instance_seed);

// One scenario document per instance, in order; deterministic in params.
std::vector<Json> gen_corpus(const CorpusParams& params);

// The instances behind gen_corpus, for in-process use.
std::vector<CorpusInstance> gen_instances(const CorpusParams& params);

Json instance_to_scenario(const CorpusInstance& inst, const CorpusParams& params);

}  // namespace corona
