#pragma once

// JSON encodings of results.  nlohmann::json keeps object keys sorted, which
// makes serialised reports byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "gspecht/characters.hpp"

namespace gspecht {

using Json = nlohmann::json;

inline constexpr const char* report_schema = "gspecht/1";

inline Json to_json(const CheckResult& r) {
  Json j{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}};
  if (r.instances) j["instances"] = r.instances;
  return j;
}

inline Json to_json(const std::vector<CheckResult>& rs) {
  Json a = Json::array();
  for (auto& r : rs) a.push_back(to_json(r));
  return a;
}

/// {"<exponent>": coefficient}
inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (auto& [k, c] : p.terms()) j[std::to_string(k)] = c;
  return j;
}

inline Json to_json(const Node& n) { return Json::array({n.row, n.col, n.comp}); }

/// [{"weight": [...], "poly": {...}}, ...], weights in lexicographic order.
inline Json character_json(const GradedCharacter& ch) {
  Json a = Json::array();
  for (auto& [i, p] : ch) a.push_back({{"weight", i}, {"poly", to_json(p)}});
  return a;
}

/// True when every check object under j (recursively) has "ok": true.
inline bool all_ok(const Json& j) {
  if (j.is_object()) {
    if (auto it = j.find("ok"); it != j.end() && it->is_boolean() && !it->get<bool>()) return false;
    for (auto& [k, v] : j.items())
      if (!all_ok(v)) return false;
  } else if (j.is_array()) {
    for (auto& v : j)
      if (!all_ok(v)) return false;
  }
  return true;
}

}  // namespace gspecht
