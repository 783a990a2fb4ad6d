#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "corona/corpus.hpp"
#include "corona/errors.hpp"
#include "corona/scenario.hpp"

namespace fs = std::filesystem;
using corona::Json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;

void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

struct RunOutcome {
  bool pass = false;
  bool parse_error = false;
};

RunOutcome run_one(const fs::path& scenario, const std::optional<fs::path>& out, double scale, std::mutex& io) {
  RunOutcome outcome;
  try {
    const corona::VerificationReport report = corona::run_scenario_file(scenario.string(), scale);
    outcome.pass = report.passed();
    const std::string text = render(report.to_json());
    if (out) {
      write_atomic(*out, text);
    } else {
      std::lock_guard lock(io);
      std::cout << text;
    }
    std::lock_guard lock(io);
    std::cerr << (outcome.pass ? "PASS " : "FAIL ") << scenario.string() << "\n";
    if (report.error) std::cerr << "  " << (*report.error)["message"].get<std::string>() << "\n";
  } catch (const corona::Error& e) {
    outcome.parse_error = e.code() == corona::ErrorCode::ParseError;
    std::lock_guard lock(io);
    std::cerr << "ERROR " << scenario.string() << ": " << e.what() << "\n";
  }
  return outcome;
}

int cmd_run(const std::string& scenario, const std::string& out, int jobs) {
  const double scale = corona::tolerance_scale_from_env();
  std::mutex io;
  const fs::path in(scenario);
  if (!fs::is_directory(in)) {
    std::optional<fs::path> target;
    if (!out.empty()) target = fs::path(out);
    const RunOutcome r = run_one(in, target, scale, io);
    return r.parse_error ? kExitParse : (r.pass ? kExitPass : kExitFail);
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in)) {
    const auto& p = entry.path();
    if (entry.is_regular_file() && p.extension() == ".json" && p.stem().extension() != ".report") files.push_back(p);
  }
  std::sort(files.begin(), files.end());
  const fs::path out_dir = out.empty() ? in : fs::path(out);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> all_pass{true};
  std::atomic<bool> any_parse{false};
  auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) {
      const fs::path target = out_dir / (files[k].stem().string() + ".report.json");
      const RunOutcome r = run_one(files[k], target, scale, io);
      if (!r.pass) all_pass = false;
      if (r.parse_error) any_parse = true;
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::cerr << files.size() << " scenarios, " << (all_pass ? "all passed" : "some failed") << "\n";
  if (any_parse) return kExitParse;
  return all_pass ? kExitPass : kExitFail;
}

int cmd_gen(const corona::CorpusParams& params, const std::string& out_dir) {
  const std::vector<Json> docs = corona::gen_corpus(params);
  for (std::size_t k = 0; k < docs.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "instance_%04zu.json", k);
    write_atomic(fs::path(out_dir) / name, render(docs[k]));
  }
  std::cerr << "wrote " << docs.size() << " scenarios to " << out_dir << "\n";
  return kExitPass;
}

int cmd_verify_identities(int n_max, int trials, std::uint64_t seed, const std::string& out) {
  const Json scenario{{"schema_version", corona::kSchemaVersion}, {"kind", "verify-lemma21"}, {"n_min", 2},
                      {"n_max", n_max}, {"trials", trials}, {"seed", seed}};
  const corona::VerificationReport report = corona::run_scenario(scenario, corona::tolerance_scale_from_env());
  Json j = report.to_json();
  j["solutions"].erase("q_first_trial");
  if (out.empty()) {
    std::cout << render(j);
  } else {
    write_atomic(out, render(j));
  }
  for (const auto& c : report.checks) {
    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << c.value << " bound=" << c.bound << "\n";
  }
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corona-lab: kernel matrices, corona/ideal solution transfer and bound checks"};
  app.require_subcommand(1);

  std::string scenario, out;
  int jobs = 1;
  auto* run = app.add_subcommand("run", "Run a scenario file, or every *.json in a directory");
  run->add_option("--scenario", scenario, "Scenario file or directory")->required();
  run->add_option("--out", out, "Report file (or directory when --scenario is a directory)");
  run->add_option("--jobs", jobs, "Parallel workers for a directory")->check(CLI::PositiveNumber);

  corona::CorpusParams params;
  std::string out_dir;
  auto* gen = app.add_subcommand("gen", "Generate a seeded corpus of scenario files");
  gen->add_option("--count", params.count, "Number of instances")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", params.seed, "Corpus seed")->required();
  gen->add_option("--out-dir", out_dir, "Output directory")->required();
  gen->add_option("--kind", params.kind, "Scenario kind")
      ->check(CLI::IsMember({"solve-corona", "solve-ideal", "solve-wolff", "verify-lemma22"}));
  gen->add_option("--n-min", params.n_min)->check(CLI::Range(2, 64));
  gen->add_option("--n-max", params.n_max)->check(CLI::Range(2, 64));
  gen->add_option("--degree-min", params.degree_min)->check(CLI::Range(1, 64));
  gen->add_option("--degree-max", params.degree_max)->check(CLI::Range(1, 64));
  gen->add_option("--zeros-min", params.zeros_min)->check(CLI::Range(1, 64));
  gen->add_option("--zeros-max", params.zeros_max)->check(CLI::Range(1, 64));
  gen->add_option("--max-multiplicity", params.max_multiplicity)->check(CLI::Range(1, 64));
  gen->add_option("--pole-margin", params.pole_margin)->check(CLI::Range(1.0, 100.0));

  int n_max = 12, trials = 200;
  std::uint64_t seed = 0;
  std::string vi_out;
  auto* vi = app.add_subcommand("verify-identities", "Randomized kernel-matrix identity suite");
  vi->add_option("--n-max", n_max, "Largest tuple length")->check(CLI::Range(2, 512));
  vi->add_option("--trials", trials, "Random trials")->check(CLI::PositiveNumber);
  vi->add_option("--seed", seed, "Seed")->required();
  vi->add_option("--out", vi_out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitParse;
  }

  try {
    if (*run) return cmd_run(scenario, out, jobs);
    if (*gen) {
      if (params.n_min > params.n_max || params.degree_min > params.degree_max || params.zeros_min > params.zeros_max) {
        std::cerr << "error: each --*-min must not exceed its --*-max\n";
        return kExitParse;
      }
      return cmd_gen(params, out_dir);
    }
    if (*vi) return cmd_verify_identities(n_max, trials, seed, vi_out);
  } catch (const corona::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == corona::ErrorCode::ParseError ? kExitParse : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitParse;
}
