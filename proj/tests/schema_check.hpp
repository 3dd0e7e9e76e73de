#pragma once

// Structural validator for the JSON-schema subset used by the bundled
// report schema: type, enum, pattern, properties, required,
// additionalProperties (boolean form), items (single schema), minItems.

#include <regex>
#include <string>

#include <nlohmann/json.hpp>

namespace schema {

using Json = nlohmann::ordered_json;

inline bool type_matches(const std::string& t, const Json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  return false;
}

// Empty string when valid; otherwise "<path>: <reason>".
inline std::string validate(const Json& sch, const Json& v,
                            const std::string& path = "$") {
  if (sch.contains("type")) {
    const Json& t = sch["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), v);
    } else {
      for (const Json& alt : t)
        if (type_matches(alt.get<std::string>(), v)) ok = true;
    }
    if (!ok) return path + ": type mismatch, got " + v.type_name();
  }
  if (sch.contains("enum")) {
    bool ok = false;
    for (const Json& alt : sch["enum"])
      if (alt == v) ok = true;
    if (!ok) return path + ": value not in enum";
  }
  if (sch.contains("pattern") && v.is_string()) {
    std::regex re(sch["pattern"].get<std::string>());
    if (!std::regex_search(v.get<std::string>(), re))
      return path + ": pattern mismatch on \"" + v.get<std::string>() + "\"";
  }
  if (v.is_object()) {
    if (sch.contains("required"))
      for (const Json& key : sch["required"])
        if (!v.contains(key.get<std::string>()))
          return path + ": missing required key " + key.get<std::string>();
    const Json* props = sch.contains("properties") ? &sch["properties"] : nullptr;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (props && props->contains(it.key())) {
        std::string err = validate((*props)[it.key()], it.value(),
                                   path + "." + it.key());
        if (!err.empty()) return err;
      } else if (sch.contains("additionalProperties") &&
                 sch["additionalProperties"].is_boolean() &&
                 !sch["additionalProperties"].get<bool>()) {
        return path + ": unexpected key " + it.key();
      }
    }
  }
  if (v.is_array()) {
    if (sch.contains("minItems") &&
        v.size() < sch["minItems"].get<std::size_t>())
      return path + ": fewer than minItems entries";
    if (sch.contains("items")) {
      std::size_t k = 0;
      for (const Json& el : v) {
        std::string err =
            validate(sch["items"], el, path + "[" + std::to_string(k) + "]");
        if (!err.empty()) return err;
        ++k;
      }
    }
  }
  return "";
}

}  // namespace schema
