#include "corona/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "corona/bezout.hpp"
#include "corona/corpus.hpp"
#include "corona/errors.hpp"
#include "corona/kernel_matrix.hpp"
#include "corona/norms.hpp"
#include "corona/transfer.hpp"

namespace corona {
namespace {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> kDefaults = {
      {"identity", 1e-12},        {"kernel_product", 1e-13}, {"singular_values", 1e-9},
      {"q_norm", 1e-10},          {"bezout_residual", 1e-10}, {"residual", 1e-10},
      {"ideal_residual", 1e-9},   {"membership", 1e-9},       {"constant_law", 1e-12},
      {"ideal_constant_law", 1e-10}, {"norm_slack", 1e-8},   {"lemma22_exact", 1e-12},
      {"phi_slack", 1e-8},        {"eq4", 1e-10},             {"orthogonality", 1e-10},
      {"psi_closed_form", 1e-6},  {"psi_sample", 1e-9},
  };
  return kDefaults;
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& require(const Json& s, const char* key) {
  if (!s.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return s.at(key);
}

std::vector<Complex> random_disk_points(std::uint64_t seed, int count, double radius = 1.0) {
  Rng rng(seed);
  std::vector<Complex> pts;
  for (int k = 0; k < count; ++k) pts.push_back(rng.in_disk(radius));
  return pts;
}

std::vector<Complex> random_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& x : v) x = rng.in_disk();
  return v;
}

double norm_of(const std::vector<Complex>& v) { return l2_norm(v); }

// Reference Q_F layouts for n = 2, 3, 4 (signed 1-based symbol indices).
const std::vector<std::vector<std::vector<int>>>& reference_layouts() {
  static const std::vector<std::vector<std::vector<int>>> kLayouts = {
      {{2}, {-1}},
      {{2, 3, 0}, {-1, 0, 3}, {0, -1, -2}},
      {{2, 3, 4, 0, 0, 0}, {-1, 0, 0, 3, 4, 0}, {0, -1, 0, -2, 0, 4}, {0, 0, -1, 0, -2, 3}},
  };
  return kLayouts;
}

// Reference entries whose sign contradicts F Q_F = 0: {n, row, col}, 0-based.
struct LayoutSignFlip {
  std::size_t n, row, col;
};
constexpr LayoutSignFlip kLayoutSignFlips[] = {{4, 3, 5}};

bool is_sign_flip(std::size_t n, std::size_t row, std::size_t col) {
  for (const auto& e : kLayoutSignFlips) {
    if (e.n == n && e.row == row && e.col == col) return true;
  }
  return false;
}

struct Context {
  const Json& s;
  const Tolerances& tol;
  VerificationReport& report;
  double margin;
  DiskGrid grid;
};

ZeroIdeal load_ideal(const Json& s) { return ideal_from_json(require(s, "ideal")); }

FnTuple load_tuple(const Json& s, const ZeroIdeal& ideal, double margin) {
  const Json& t = require(s, "tuple");
  if (t.is_object() && t.contains("random")) {
    const Json& r = t.at("random");
    if (!r.contains("seed")) parse_fail("tuple.random needs a \"seed\"");
    Rng rng(r.at("seed").get<std::uint64_t>());
    return random_subalgebra_tuple(rng, ideal, r.value("n", 3), r.value("max_degree", ideal.total_multiplicity() + 1),
                                   margin, r.value("rejection_budget", 1000));
  }
  return tuple_from_json(t, margin);
}

// h given directly as a polynomial, or as w F^T.
Poly load_h(const Json& s, const FnTuple& f, double margin) {
  if (s.contains("h")) return poly_from_json(s.at("h"));
  if (s.contains("w")) {
    const RationalFn h = dot(tuple_from_json(s.at("w"), margin), f);
    if (!h.is_polynomial()) throw Error(ErrorCode::DomainError, "w F^T is not a polynomial");
    return h.num() * (1.0 / h.den().leading());
  }
  parse_fail("scenario needs \"h\" or \"w\"");
}

PsiFunction load_psi(const Json& j) {
  const std::string type = j.value("type", "iterated-log");
  if (type == "iterated-log") {
    const int n = j.value("n", 0);
    const double eps = j.value("eps", 1.0);
    return [n, eps](double t) { return treil_psi(t, n, eps); };
  }
  if (type == "power") {
    const double p = j.value("exponent", 1.0);
    const double c = j.value("coefficient", 1.0);
    return [p, c](double t) { return c * std::pow(t, p); };
  }
  parse_fail("unknown psi type \"" + type + "\"");
}

void lemma22_checks(Context& ctx, const SubalgebraTuple& sub) {
  const Lemma22Report l = lemma22_check(sub, ctx.grid);
  auto& r = ctx.report;
  r.check("lemma22.gramian_at_zeros", l.gramian_at_zeros_error, ctx.tol["lemma22_exact"]);
  r.check("lemma22.fc_norm_sq_le_one", l.fc_norm_sq, 1.0);
  r.check("lemma22.phi_sup_le_two", l.phi_sup_sampled, 2.0 + ctx.tol["phi_slack"]);
  if (ctx.s.contains("epsilon")) {
    const double eps = ctx.s.at("epsilon").get<double>();
    r.check("lemma22.eps_sq_le_fc_norm_sq", eps * eps, l.fc_norm_sq);
  }
  r.context["sup_upper"] = l.sup_upper;
  r.context["fc_norm_sq"] = l.fc_norm_sq;
  r.context["phi_sup_upper"] = l.phi_sup_upper;
  r.context["inf_gramian_grid"] = inf_gramian(sub.tuple, ctx.grid);
}

void transfer_checks(Context& ctx, const TransferResult& t, const std::string& residual_tol,
                     const std::string& law_tol) {
  auto& r = ctx.report;
  r.check("transfer.residual_sup", t.residual_sup, ctx.tol[residual_tol] * t.residual_scale);
  r.check("transfer.residual_coeff", t.residual_coeff, ctx.tol[residual_tol] * t.residual_scale);
  r.check("transfer.membership", t.membership_max, ctx.tol["membership"]);
  r.check("transfer.constant_law", t.constant_law_error, ctx.tol[law_tol]);
  r.check("transfer.norm_bound", t.norm_sampled, t.norm_bound_rhs + ctx.tol["norm_slack"]);
}

void uchiyama_context(Context& ctx, double fc_norm) {
  if (!ctx.s.contains("epsilon")) return;
  const double eps = ctx.s.at("epsilon").get<double>();
  const double eps_sq = eps * eps;
  if (eps_sq > 0.0 && eps_sq < std::exp(-1.0)) {
    const double u = uchiyama_bound(eps_sq);
    ctx.report.context["uchiyama_bound"] = u;
    ctx.report.context["subalgebra_bound"] = (1.0 + 1.0 / fc_norm) * u;
  }
}

void run_verify_lemma21(Context& ctx) {
  const Json& s = ctx.s;
  if (!s.contains("seed")) parse_fail("verify-lemma21 needs a \"seed\"");
  const int n_min = s.contains("n") ? s.at("n").get<int>() : s.value("n_min", 2);
  const int n_max = s.contains("n") ? s.at("n").get<int>() : s.value("n_max", 12);
  const int trials = s.value("trials", 200);
  if (n_min < 2 || n_max < n_min || trials < 1) parse_fail("verify-lemma21 needs 2 <= n_min <= n_max, trials >= 1");

  Rng rng(s.at("seed").get<std::uint64_t>());
  double self = 0.0, pair = 0.0, kernel = 0.0, rank_dev = 0.0, sv_dev = 0.0, norm_dev = 0.0;
  Json first_q;
  for (int trial = 0; trial < trials; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(n_min, n_max));
    const double mag = std::exp(4.0 * (rng.uniform01() - 0.5));
    std::vector<Complex> a = random_vector(rng, n);
    std::vector<Complex> d = random_vector(rng, n);
    for (auto& x : a) x *= mag;
    const double na = norm_of(a);
    const double nd = norm_of(d);
    self = std::max(self, q_identity_self(a) / (1.0 + na * na));
    pair = std::max(pair, q_identity_pair(a, d) / (1.0 + na * nd));
    const KernelCheck kc = q_kernel_check(a);
    kernel = std::max(kernel, kc.product_residual / (na * na));
    rank_dev = std::max(rank_dev, std::abs(static_cast<double>(kc.rank) - static_cast<double>(n - 1)));
    const auto sv = q_singular_values(a);
    for (std::size_t k = 0; k < n; ++k) sv_dev = std::max(sv_dev, std::abs(sv[k] - (k + 1 < n ? na : 0.0)));
    norm_dev = std::max(norm_dev, std::abs(q_norm(a) - na));
    if (trial == 0) first_q = dense_to_json(to_dense(build_q(a)));
  }
  double layout_mismatch = 0.0;
  for (std::size_t k = 0; k < reference_layouts().size(); ++k) {
    const std::size_t n = k + 2;
    const auto built = kernel_layout(n);
    const auto& ref = reference_layouts()[k];
    if (built.size() != ref.size()) {
      layout_mismatch += 1.0;
      continue;
    }
    for (std::size_t row = 0; row < built.size(); ++row) {
      if (built[row].size() != ref[row].size()) {
        layout_mismatch += 1.0;
        continue;
      }
      for (std::size_t col = 0; col < built[row].size(); ++col) {
        const bool expected_flip = is_sign_flip(n, row, col);
        const int want = expected_flip ? -ref[row][col] : ref[row][col];
        if (built[row][col] != want) layout_mismatch += 1.0;
      }
    }
  }
  auto& r = ctx.report;
  r.check("lemma21.identity_self", self, ctx.tol["identity"]);
  r.check("lemma21.identity_pair", pair, ctx.tol["identity"]);
  r.check("lemma21.kernel_product", kernel, ctx.tol["kernel_product"]);
  r.check("lemma21.rank_deviation", rank_dev, 0.0);
  r.check("lemma21.singular_values", sv_dev, ctx.tol["singular_values"]);
  r.check("lemma21.q_norm", norm_dev, ctx.tol["q_norm"]);
  r.check("lemma21.layout_mismatches", layout_mismatch, 0.0);
  r.context["trials"] = trials;
  r.context["n_range"] = {n_min, n_max};
  r.solutions["q_first_trial"] = first_q;
}

void run_verify_lemma22(Context& ctx) {
  const ZeroIdeal ideal = load_ideal(ctx.s);
  const SubalgebraTuple sub = SubalgebraTuple::decompose(load_tuple(ctx.s, ideal, ctx.margin), ideal);
  ctx.report.solutions["constant_part"] = complex_list_to_json(sub.constant_part);
  lemma22_checks(ctx, sub);
}

void run_solve_corona(Context& ctx) {
  const ZeroIdeal ideal = load_ideal(ctx.s);
  const SubalgebraTuple sub = SubalgebraTuple::decompose(load_tuple(ctx.s, ideal, ctx.margin), ideal);
  auto& r = ctx.report;
  r.solutions["constant_part"] = complex_list_to_json(sub.constant_part);
  if (sup_upper(sub.tuple) <= 1.0 + 1e-12) {
    lemma22_checks(ctx, sub);
  } else {
    r.context["lemma22_skipped"] = "coefficient-sum bound of sup ||F|| exceeds 1";
  }

  FnTuple g;
  if (ctx.s.contains("solution")) {
    g = tuple_from_json(ctx.s.at("solution"), ctx.margin);
  } else {
    std::vector<Poly> nums;
    for (const auto& f : sub.tuple.entries) nums.push_back(f.num());
    const BezoutCertificate cert = bezout_tuple(nums);
    r.solutions["bezout"] = bezout_to_json(cert);
    double scale = 1.0;
    for (const auto& p : nums) scale = std::max(scale, p.max_abs_coeff());
    for (const auto& c : cert.cofactors) scale = std::max(scale, c.max_abs_coeff());
    r.check("bezout.residual", cert.residual, ctx.tol["bezout_residual"] * scale);
    g = corona_bezout(sub.tuple, ctx.margin);
  }
  r.solutions["G"] = tuple_to_json(g);

  const TransferResult t = transfer_corona(sub, g, ctx.grid);
  r.solutions["U"] = transfer_to_json(t);
  transfer_checks(ctx, t, "residual", "constant_law");

  const double scale = 1.0 + sup_upper(sub.tuple) * sup_upper(g);
  const auto points = random_disk_points(r.seed ^ 0x9e3779b97f4a7c15ULL, 64);
  r.check("eq4.consistency", eq4_consistency(sub, g, points), ctx.tol["eq4"] * scale);
  Rng xr(r.seed + 1);
  std::vector<std::vector<Complex>> xs;
  for (int k = 0; k < 4; ++k) xs.push_back(random_vector(xr, sub.size()));
  r.check("correction.orthogonality", correction_orthogonality(sub, g, points, xs), ctx.tol["orthogonality"] * scale);
  uchiyama_context(ctx, t.fc_norm);
}

void run_solve_ideal(Context& ctx, bool wolff) {
  const ZeroIdeal ideal = load_ideal(ctx.s);
  const SubalgebraTuple sub = SubalgebraTuple::decompose(load_tuple(ctx.s, ideal, ctx.margin), ideal);
  auto& r = ctx.report;
  r.solutions["constant_part"] = complex_list_to_json(sub.constant_part);
  const Poly h = load_h(ctx.s, sub.tuple, ctx.margin);
  r.solutions["h"] = poly_to_json(h);

  if (ctx.s.contains("psi")) {
    const HypothesisCheck hc = check_treil_hypothesis(sub.tuple, RationalFn(h), load_psi(ctx.s.at("psi")), ctx.grid);
    r.check("treil.hypothesis_violations", hc.holds ? 0.0 : 1.0, 0.0);
    if (hc.witness) r.context["treil_witness"] = complex_to_json(hc.witness->z);
  }

  PipelineResult p;
  if (wolff) {
    p = wolff_pipeline(sub, h, ctx.grid, ctx.margin);
  } else if (ctx.s.contains("solution")) {
    p.g = tuple_from_json(ctx.s.at("solution"), ctx.margin);
    p.transfer = transfer_ideal(sub, p.g, RationalFn(h), ctx.grid);
  } else {
    p = ideal_pipeline(sub, h, ctx.grid, ctx.margin);
  }
  r.solutions["G"] = tuple_to_json(p.g);
  r.solutions["V"] = transfer_to_json(p.transfer);
  transfer_checks(ctx, p.transfer, "ideal_residual", "ideal_constant_law");

  const double scale = 1.0 + sup_upper(sub.tuple) * sup_upper(p.g);
  const auto points = random_disk_points(r.seed ^ 0x9e3779b97f4a7c15ULL, 64);
  Rng xr(r.seed + 1);
  std::vector<std::vector<Complex>> xs;
  for (int k = 0; k < 4; ++k) xs.push_back(random_vector(xr, sub.size()));
  r.check("correction.orthogonality", correction_orthogonality(sub, p.g, points, xs), ctx.tol["orthogonality"] * scale);
}

void run_check_bounds(Context& ctx) {
  auto& r = ctx.report;
  if (ctx.s.contains("epsilon")) {
    const double eps = ctx.s.at("epsilon").get<double>();
    r.check("uchiyama.domain", eps * eps, std::exp(-1.0));
    r.context["uchiyama_bound"] = uchiyama_bound(eps * eps);
  }

  // psi(t) = 1/ln^2(t^-2) against its antiderivative 1/(4 ln(1/t)).
  const PsiFunction log_sq = [](double t) {
    const double l = -2.0 * std::log(t);
    return 1.0 / (l * l);
  };
  const std::vector<double> t_mins{1e-2, 1e-4, 1e-8, 1e-16};
  const double t_max = 0.5;
  const PsiIntegralTrend trend = psi_integral_check(log_sq, t_mins, t_max, 2000);
  double worst = 0.0;
  for (std::size_t k = 0; k < t_mins.size(); ++k) {
    const double exact = 1.0 / (4.0 * std::log(1.0 / t_max)) - 1.0 / (4.0 * std::log(1.0 / t_mins[k]));
    worst = std::max(worst, std::abs(trend.partial[k] - exact));
  }
  r.check("psi.integral_closed_form", worst, ctx.tol["psi_closed_form"]);
  r.context["psi_partial_integrals"] = trend.partial;

  const double sample = treil_psi(std::exp(-std::numbers::e / 2.0), 0, 1.0);
  r.check("psi.sample_value", std::abs(sample - 1.0 / std::numbers::e), ctx.tol["psi_sample"]);

  double decreases = 0.0;
  double previous = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double t = 0.25 * k / 64.0;
    const double v = treil_psi(t, 1, 0.5);
    if (v < previous) decreases += 1.0;
    previous = v;
  }
  r.check("psi.monotone_violations", decreases, 0.0);

  if (ctx.s.contains("tuple")) {
    const FnTuple f = tuple_from_json(ctx.s.at("tuple"), ctx.margin);
    const NormInterval n = sup_norm(f, ctx.grid);
    r.check("norm.interval_order", n.lower - n.upper, 0.0);
    r.context["sup_norm"] = {{"lower", n.lower}, {"upper", n.upper}};
    r.context["inf_gramian_grid"] = inf_gramian(f, ctx.grid);
  }
}

Json error_to_json(const Error& e) {
  Json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.witness()) j["witness"] = complex_to_json(*e.witness());
  return j;
}

}  // namespace

Tolerances::Tolerances() : values_(default_tolerances()) {}

void Tolerances::apply_overrides(const Json& j) {
  if (j.is_null()) return;
  if (!j.is_object()) parse_fail("\"tolerances\" must be an object");
  for (const auto& [name, value] : j.items()) {
    if (!values_.contains(name)) parse_fail("unknown tolerance \"" + name + "\"");
    if (!value.is_number()) parse_fail("tolerance \"" + name + "\" must be a number");
    values_[name] = value.get<double>();
  }
}

double Tolerances::operator[](const std::string& name) const { return values_.at(name) * scale_; }

Json Tolerances::to_json() const {
  Json j = Json::object();
  for (const auto& [name, value] : values_) j[name] = value * scale_;
  return j;
}

double tolerance_scale_from_env() {
  const char* raw = std::getenv("CORONA_LAB_TOL_SCALE");
  if (raw == nullptr || *raw == '\0') return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0)) {
    parse_fail(std::string("CORONA_LAB_TOL_SCALE must be a positive number, got \"") + raw + "\"");
  }
  return v;
}

void VerificationReport::check(const std::string& name, double value, double bound) {
  checks.push_back({name, value, bound, value <= bound});
}

bool VerificationReport::passed() const {
  return !error && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

Json VerificationReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}});
  Json j{{"schema_version", kSchemaVersion},
         {"scenario", scenario},
         {"checks", cs},
         {"solutions", solutions},
         {"context", context},
         {"seed", seed},
         {"wall_ms", wall_ms},
         {"pass", passed()}};
  if (error) j["error"] = *error;
  return j;
}

VerificationReport run_scenario(const Json& scenario, double tol_scale) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.scenario = scenario;
  if (!scenario.is_object()) parse_fail("scenario must be a JSON object");

  Tolerances tol;
  std::string kind;
  DiskGrid grid;
  double margin = kDefaultPoleMargin;
  try {
    const int version = scenario.value("schema_version", kSchemaVersion);
    if (version != kSchemaVersion) parse_fail("unsupported schema_version " + std::to_string(version));
    kind = require(scenario, "kind").get<std::string>();
    report.seed = scenario.value("seed", std::uint64_t{0});
    tol.apply_overrides(scenario.value("tolerances", Json()));
    tol.set_scale(tol_scale);
    grid = grid_from_json(scenario.value("grid", Json()));
    margin = scenario.value("pole_margin", kDefaultPoleMargin);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("scenario field: ") + e.what());
  }
  report.context["tolerances"] = tol.to_json();

  const std::string expected_error = scenario.value("expect_error", std::string());
  Context ctx{scenario, tol, report, margin, grid};
  try {
    if (kind == "verify-lemma21") {
      run_verify_lemma21(ctx);
    } else if (kind == "verify-lemma22") {
      run_verify_lemma22(ctx);
    } else if (kind == "solve-corona") {
      run_solve_corona(ctx);
    } else if (kind == "solve-ideal") {
      run_solve_ideal(ctx, false);
    } else if (kind == "solve-wolff") {
      run_solve_ideal(ctx, true);
    } else if (kind == "check-bounds") {
      run_check_bounds(ctx);
    } else {
      parse_fail("unknown scenario kind \"" + kind + "\"");
    }
    if (!expected_error.empty()) report.check("expected_error." + expected_error, 1.0, 0.0);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("scenario field: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    if (!expected_error.empty() && expected_error == to_string(e.code())) {
      report.check("expected_error." + expected_error, 0.0, 0.0);
      report.context["caught_error"] = error_to_json(e);
    } else {
      report.error = error_to_json(e);
    }
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport run_scenario_file(const std::string& path, double tol_scale) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open scenario file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(path + ": " + e.what());
  }
  return run_scenario(doc, tol_scale);
}

Json strip_wall_time(Json report) {
  report.erase("wall_ms");
  return report;
}

}  // namespace corona
