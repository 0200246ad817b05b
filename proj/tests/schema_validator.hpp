#pragma once

// Validator for the JSON Schema subset used by docs/report.schema.json:
// type (string or list), enum, required, properties, additionalProperties
// (false or a schema) and items.

#include <json.hpp>

#include <string>
#include <vector>

namespace schema {

using nlohmann::json;

inline bool has_type(const json& v, const std::string& t) {
  if (t == "null") return v.is_null();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "string") return v.is_string();
  if (t == "array") return v.is_array();
  if (t == "object") return v.is_object();
  return false;
}

inline void validate(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) {
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
    } else {
      ok = has_type(v, s["type"].get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch, expected " + s["type"].dump());
      return;
    }
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": value " + v.dump() + " not in enum");
  }
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& key : s["required"])
        if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing key " + key.get<std::string>());
    for (const auto& [key, val] : v.items()) {
      if (s.contains("properties") && s["properties"].contains(key)) {
        validate(val, s["properties"][key], path + "." + key, errors);
      } else if (s.contains("additionalProperties")) {
        const auto& ap = s["additionalProperties"];
        if (ap.is_boolean() && !ap.get<bool>())
          errors.push_back(path + ": unexpected key " + key);
        else if (ap.is_object())
          validate(val, ap, path + "." + key, errors);
      }
    }
  }
  if (v.is_array() && s.contains("items"))
    for (std::size_t k = 0; k < v.size(); ++k) validate(v[k], s["items"], path + "[" + std::to_string(k) + "]", errors);
}

inline std::vector<std::string> validate(const json& v, const json& s) {
  std::vector<std::string> errors;
  validate(v, s, "$", errors);
  return errors;
}

}  // namespace schema
