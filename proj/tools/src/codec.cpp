#include "indigenous/cli/codec.hpp"

#include "indigenous/errors.hpp"

namespace indigenous::cli {

using nlohmann::json;

json elem_to_json(Elem e) {
  if (e.is_many()) return "m";
  return e.is_zero() ? 0u : e.value();
}

Elem elem_from_json(const json& j) {
  if (j.is_string()) return parse_elem(j.get<std::string>());
  if (j.is_number_unsigned()) {
    const auto n = j.get<std::uint64_t>();
    if (n > UINT32_MAX) throw ParseError("element value out of range: " + j.dump());
    return n == 0 ? Elem::zero() : Elem::fin(static_cast<std::uint32_t>(n));
  }
  if (j.is_number_integer() && j.get<std::int64_t>() == 0) return Elem::zero();
  throw ParseError("not an element: " + j.dump());
}

json elems_to_json(const std::vector<Elem>& elems) {
  json out = json::array();
  for (const Elem e : elems) out.push_back(elem_to_json(e));
  return out;
}

std::vector<Elem> elems_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of elements: " + j.dump());
  std::vector<Elem> out;
  for (const auto& item : j) out.push_back(elem_from_json(item));
  return out;
}

json poly_to_json(const Poly& f) { return json{{"coeffs", elems_to_json(f.coeffs())}}; }

Poly poly_from_json(const SemiringCtx& ctx, const json& j) {
  if (j.is_array()) return Poly(ctx, elems_from_json(j));
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("expected {\"coeffs\": [...]}");
  return Poly(ctx, elems_from_json(j.at("coeffs")));
}

json series_to_json(const TruncSeries& f) {
  return json{{"coeffs", elems_to_json(f.coeffs())}, {"depth", f.depth()}};
}

TruncSeries series_from_json(const SemiringCtx& ctx, const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("depth")) {
    throw ParseError("expected {\"coeffs\": [...], \"depth\": N}");
  }
  if (!j.at("depth").is_number_unsigned()) throw ParseError("depth must be a natural number");
  return TruncSeries(ctx, j.at("depth").get<std::size_t>(), elems_from_json(j.at("coeffs")));
}

json ideal_to_json(const Ideal& ideal) { return elems_to_json(ideal.members()); }

}  // namespace indigenous::cli
