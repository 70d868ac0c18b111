#pragma once

// JSON forms of results.  Every number is written as a decimal string.

#include <json.hpp>

#include "geoprog/identities.hpp"
#include "geoprog/pi_series.hpp"
#include "geoprog/series.hpp"
#include "geoprog/tables.hpp"

namespace geoprog {

inline nlohmann::ordered_json to_json(const SeriesResult& r) {
  nlohmann::ordered_json j;
  j["value"] = r.value.to_string();
  j["depth"] = r.depth_used;
  auto terms = nlohmann::ordered_json::array();
  for (const SeriesTerm& t : r.terms) {
    terms.push_back({{"k", t.k}, {"label", t.label}, {"value", t.value.to_string()}});
  }
  j["terms"] = std::move(terms);
  if (r.tail) {
    j["tail"] = {{"estimate", r.tail->estimate.to_string()},
                 {"kind", std::string(tail_kind_name(r.tail->kind))}};
  } else {
    j["tail"] = nullptr;
  }
  if (r.identity_residual) j["identity_residual"] = r.identity_residual->to_string();
  j["converged"] = r.converged;
  return j;
}

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
  return {{"name", r.name},
          {"lhs", r.lhs.to_string()},
          {"rhs", r.rhs.to_string()},
          {"residual", r.residual.to_string()},
          {"tolerance", r.tolerance.to_string()},
          {"passed", r.passed}};
}

inline nlohmann::ordered_json to_json(const EulerTable& t, bool euler_style = false,
                                      AngleStyle labels = AngleStyle::euler) {
  const auto num = [&](const std::string& s) { return euler_style ? to_comma(s) : s; };
  nlohmann::ordered_json j;
  j["table"] = t.name;
  auto rows = nlohmann::ordered_json::array();
  for (const TableRow& r : t.rows) {
    rows.push_back({{"label", r.label(labels)},
                    {"value", num(r.value_7dp)},
                    {"kind", std::string(row_kind_name(r.kind))}});
    if (r.kind == RowKind::subtotal) j["subtotal"] = num(r.value_7dp);
  }
  j["rows"] = std::move(rows);
  j["final_pi"] = num(t.final_pi);
  j["final_display"] = num(t.final_display);
  j["diagnostics"] = t.diagnostics;
  return j;
}

inline nlohmann::ordered_json to_json(const PiResult& r) {
  return {{"method", std::string(pi_method_name(r.method))},
          {"digits", r.decimals},
          {"value", r.text()},
          {"lower", r.lower.to_string()},
          {"upper", r.upper.to_string()},
          {"depth", r.depth}};
}

}  // namespace geoprog
