#pragma once

// Validator for the subset of JSON Schema used by schema/audit_report.schema.json:
// type, enum, const, required, properties, additionalProperties, items,
// minItems, minLength, minimum, maximum, oneOf and local "#/$defs/..." refs.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "number") return v.is_number();
  if (t == "integer") {
    if (v.is_number_integer()) return true;
    return v.is_number_float() && std::nearbyint(v.get<double>()) == v.get<double>();
  }
  return false;
}

class Validator {
 public:
  explicit Validator(json root) : root_(std::move(root)) {}

  // Returns an empty string when valid, else the first violation.
  std::string validate(const json& doc) const { return check(doc, root_, "$"); }

 private:
  const json& resolve(const json& schema) const {
    if (!schema.contains("$ref")) return schema;
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return root_.at("$defs").at(ref.substr(prefix.size()));
  }

  std::string check(const json& v, const json& schema_in, const std::string& path) const {
    const json& s = resolve(schema_in);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || type_matches(v, t.get<std::string>());
      } else {
        ok = type_matches(v, s["type"].get<std::string>());
      }
      if (!ok) return path + ": type mismatch, expected " + s["type"].dump();
    }
    if (s.contains("const") && v != s["const"]) return path + ": expected const " + s["const"].dump();
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) return path + ": value not in enum";
    }
    if (s.contains("oneOf")) {
      int matches = 0;
      for (const auto& alt : s["oneOf"]) matches += check(v, alt, path).empty() ? 1 : 0;
      if (matches != 1) return path + ": oneOf matched " + std::to_string(matches) + " alternatives";
    }
    if (v.is_number()) {
      const double d = v.get<double>();
      if (s.contains("minimum") && d < s["minimum"].get<double>()) return path + ": below minimum";
      if (s.contains("maximum") && d > s["maximum"].get<double>()) return path + ": above maximum";
    }
    if (v.is_string() && s.contains("minLength") && v.get<std::string>().size() < s["minLength"].get<std::size_t>())
      return path + ": string too short";
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return path + ": too few items";
      if (s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
          if (auto e = check(v[i], s["items"], path + "[" + std::to_string(i) + "]"); !e.empty()) return e;
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& key : s["required"])
          if (!v.contains(key.get<std::string>())) return path + ": missing " + key.get<std::string>();
      const json props = s.value("properties", json::object());
      for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string sub = path + "." + it.key();
        if (props.contains(it.key())) {
          if (auto e = check(it.value(), props[it.key()], sub); !e.empty()) return e;
        } else if (s.contains("additionalProperties")) {
          const json& extra = s["additionalProperties"];
          if (extra.is_boolean()) {
            if (!extra.get<bool>()) return sub + ": unexpected property";
          } else if (auto e = check(it.value(), extra, sub); !e.empty()) {
            return e;
          }
        }
      }
    }
    return {};
  }

  json root_;
};

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

}  // namespace schema_check
