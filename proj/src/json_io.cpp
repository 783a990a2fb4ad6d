#include "corona/json_io.hpp"

#include "corona/errors.hpp"

namespace corona {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  parse_fail("expected a complex number as [re, im], got " + j.dump());
}

Json complex_list_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(complex_to_json(c));
  return out;
}

std::vector<Complex> complex_list_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of complex numbers, got " + j.dump());
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

Json poly_to_json(const Poly& p) { return complex_list_to_json(p.coeffs()); }

Poly poly_from_json(const Json& j) { return Poly(complex_list_from_json(j)); }

Json rational_to_json(const RationalFn& f) {
  return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFn rational_from_json(const Json& j, double pole_margin) {
  if (j.is_array()) return RationalFn(poly_from_json(j));
  if (j.is_object() && j.contains("num")) {
    const Poly num = poly_from_json(j.at("num"));
    const Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1.0);
    return RationalFn::make(num, den, pole_margin);
  }
  parse_fail("expected a polynomial array or {num, den} object, got " + j.dump());
}

Json tuple_to_json(const FnTuple& t) {
  Json entries = Json::array();
  for (const auto& f : t.entries) entries.push_back(rational_to_json(f));
  return Json{{"entries", entries}, {"tail_bound", t.tail_bound}};
}

FnTuple tuple_from_json(const Json& j, double pole_margin) {
  const Json* entries = &j;
  double tail = 0.0;
  if (j.is_object()) {
    if (!j.contains("entries")) parse_fail("tuple object needs \"entries\"");
    entries = &j.at("entries");
    tail = j.value("tail_bound", 0.0);
  }
  if (!entries->is_array() || entries->empty()) parse_fail("tuple needs a nonempty entry array");
  std::vector<RationalFn> out;
  for (const auto& e : *entries) out.push_back(rational_from_json(e, pole_margin));
  return FnTuple(std::move(out), tail);
}

Json ideal_to_json(const ZeroIdeal& ideal) {
  Json zeros = Json::array();
  for (const auto& z : ideal.zeros()) zeros.push_back(Json{{"point", complex_to_json(z.point)}, {"multiplicity", z.multiplicity}});
  return Json{{"zeros", zeros}, {"generator", poly_to_json(ideal.generator())}};
}

ZeroIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("zeros") || !j.at("zeros").is_array()) parse_fail("ideal needs a \"zeros\" array");
  std::vector<IdealZero> zeros;
  for (const auto& z : j.at("zeros")) {
    if (!z.is_object() || !z.contains("point")) parse_fail("ideal zero needs \"point\", got " + z.dump());
    zeros.push_back({complex_from_json(z.at("point")), z.value("multiplicity", 1)});
  }
  return ZeroIdeal::from_zeros(std::move(zeros));
}

Json grid_to_json(const DiskGrid& grid) {
  return Json{{"angular_count", grid.angular_count}, {"radii", grid.radii}, {"boundary_count", grid.boundary_count}};
}

DiskGrid grid_from_json(const Json& j) {
  DiskGrid g;
  if (j.is_null()) return g;
  if (!j.is_object()) parse_fail("grid must be an object");
  try {
    g.angular_count = j.value("angular_count", g.angular_count);
    g.boundary_count = j.value("boundary_count", g.boundary_count);
    if (j.contains("radii")) g.radii = j.at("radii").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("grid: ") + e.what());
  }
  g.validate();
  return g;
}

Json bezout_to_json(const BezoutCertificate& cert) {
  Json cof = Json::array();
  for (const auto& c : cert.cofactors) cof.push_back(poly_to_json(c));
  return Json{{"gcd", poly_to_json(cert.gcd)}, {"cofactors", cof}, {"residual", cert.residual}};
}

Json transfer_to_json(const TransferResult& r) {
  return Json{{"solution", tuple_to_json(r.solution)},
              {"constant_part", complex_list_to_json(r.constant_part)},
              {"expected_constant", complex_list_to_json(r.expected_constant)},
              {"constant_law_error", r.constant_law_error},
              {"residual_sup", r.residual_sup},
              {"residual_coeff", r.residual_coeff},
              {"residual_scale", r.residual_scale},
              {"membership_max", r.membership_max},
              {"norm_sampled", r.norm_sampled},
              {"norm_upper", r.norm_upper},
              {"g_norm_upper", r.g_norm_upper},
              {"fc_norm", r.fc_norm},
              {"norm_bound_rhs", r.norm_bound_rhs}};
}

Json dense_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace corona
