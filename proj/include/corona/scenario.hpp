#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corona/json_io.hpp"

namespace corona {

inline constexpr int kSchemaVersion = 1;

// Named tolerances with built-in defaults. Every value is multiplied by
// `scale` (CORONA_LAB_TOL_SCALE in the CLI).
class Tolerances {
 public:
  Tolerances();
  // Overrides from a scenario's "tolerances" object; unknown names are a
  // ParseError.
  void apply_overrides(const Json& j);
  void set_scale(double s) { scale_ = s; }
  double scale() const { return scale_; }
  double operator[](const std::string& name) const;
  Json to_json() const;

 private:
  std::map<std::string, double> values_;
  double scale_ = 1.0;
};

// Reads CORONA_LAB_TOL_SCALE; 1 when unset. ParseError on garbage.
double tolerance_scale_from_env();

struct CheckRecord {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct VerificationReport {
  Json scenario;
  std::vector<CheckRecord> checks;
  Json solutions = Json::object();
  Json context = Json::object();
  std::optional<Json> error;  // {code, message, witness?}
  std::uint64_t seed = 0;
  double wall_ms = 0.0;

  // Records value <= bound.
  void check(const std::string& name, double value, double bound);
  // Overall pass: no error and every check passes.
  bool passed() const;
  Json to_json() const;
};

// Dispatches on "kind". Module errors are embedded in the report; a
// malformed scenario document throws ParseError.
VerificationReport run_scenario(const Json& scenario, double tol_scale = 1.0);

// Parses the file (ParseError with position on malformed JSON) and runs it.
VerificationReport run_scenario_file(const std::string& path, double tol_scale = 1.0);

// The same report with wall_ms removed, for determinism comparisons.
Json strip_wall_time(Json report);

}  // namespace corona
