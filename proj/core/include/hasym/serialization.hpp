#pragma once

// JSON encodings of exact objects. Integers are decimal strings so that
// arbitrary precision survives any JSON reader.
//
//   series:     {"order": N, "coeffs": [["num", "den"], ...]}
//   polynomial: {"terms": [{"c_pow": i, "z_pow": j, "num": "...", "den": "..."}, ...]}

#include <json.hpp>

#include "hasym/bivariate_poly.hpp"
#include "hasym/series.hpp"

namespace hasym {

nlohmann::json to_json(const RationalSeries& s);
nlohmann::json to_json(const BivariatePoly& p);

/// Throws DomainError on malformed input (wrong shape, order/length
/// mismatch, zero denominator, non-integer strings).
RationalSeries series_from_json(const nlohmann::json& j);
BivariatePoly poly_from_json(const nlohmann::json& j);

}  // namespace hasym
