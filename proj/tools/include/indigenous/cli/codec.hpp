#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "indigenous/elem.hpp"
#include "indigenous/ideal.hpp"
#include "indigenous/poly.hpp"
#include "indigenous/semiring.hpp"
#include "indigenous/series.hpp"

// Machine-readable forms: finite values and 0 as integers, m as "m".
// Polynomials are {"coeffs": [...]}, windows add "depth".

namespace indigenous::cli {

nlohmann::json elem_to_json(Elem e);
/// Accepts an integer or "m" (also any parse_elem token as a string).
/// Throws ParseError.
Elem elem_from_json(const nlohmann::json& j);

nlohmann::json elems_to_json(const std::vector<Elem>& elems);
std::vector<Elem> elems_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const SemiringCtx& ctx, const nlohmann::json& j);

nlohmann::json series_to_json(const TruncSeries& f);
TruncSeries series_from_json(const SemiringCtx& ctx, const nlohmann::json& j);

nlohmann::json ideal_to_json(const Ideal& ideal);

}  // namespace indigenous::cli
