#pragma once

#include "json.hpp"

#include <vector>

#include "corona/bezout.hpp"
#include "corona/ideal.hpp"
#include "corona/kernel_matrix.hpp"
#include "corona/norms.hpp"
#include "corona/poly.hpp"
#include "corona/rational.hpp"
#include "corona/transfer.hpp"
#include "corona/tuple.hpp"

namespace corona {

using Json = nlohmann::json;

// [re, im]
Json complex_to_json(Complex c);
// Accepts [re, im] or a plain number. Throws ParseError.
Complex complex_from_json(const Json& j);

Json complex_list_to_json(const std::vector<Complex>& v);
std::vector<Complex> complex_list_from_json(const Json& j);

// Ascending-degree array of [re, im] pairs.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// {"num": [...], "den": [...]}; a polynomial serializes with den [[1, 0]].
Json rational_to_json(const RationalFn& f);
// Accepts the object form or a bare polynomial array.
RationalFn rational_from_json(const Json& j, double pole_margin = kDefaultPoleMargin);

Json tuple_to_json(const FnTuple& t);
// Either an array of entries or {"entries": [...], "tail_bound": t}.
FnTuple tuple_from_json(const Json& j, double pole_margin = kDefaultPoleMargin);

// {"zeros": [{"point": [re, im], "multiplicity": m}, ...]}
Json ideal_to_json(const ZeroIdeal& ideal);
ZeroIdeal ideal_from_json(const Json& j);

Json grid_to_json(const DiskGrid& grid);
DiskGrid grid_from_json(const Json& j);

Json bezout_to_json(const BezoutCertificate& cert);
Json transfer_to_json(const TransferResult& r);

// Row-major matrix of [re, im] pairs.
Json dense_to_json(const Eigen::MatrixXcd& m);

}  // namespace corona
