// Minimal structural validator for the JSON schemas shipped under
// schema/: types, required keys, item/property recursion, rational
// string patterns, bounds and local $ref. Exits 0 when the instance
// conforms.

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>

using nlohmann::json;

namespace {

std::filesystem::path schema_dir;

json load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  return json::parse(f);
}

bool validate(const json& schema, const json& value, std::string* why);

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  return false;
}

bool validate(const json& schema, const json& value, std::string* why) {
  if (schema.contains("$ref"))
    return validate(load(schema_dir / schema["$ref"].get<std::string>()),
                    value, why);

  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const json& alt : schema["oneOf"]) {
      std::string ignored;
      if (validate(alt, value, &ignored)) ++hits;
    }
    if (hits != 1) {
      *why = "oneOf matched " + std::to_string(hits) + " alternatives";
      return false;
    }
    return true;
  }

  if (schema.contains("type") &&
      !type_matches(schema["type"].get<std::string>(), value)) {
    *why = "expected type " + schema["type"].get<std::string>();
    return false;
  }

  if (schema.contains("pattern") && value.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_match(value.get<std::string>(), re)) {
      *why = "pattern mismatch for '" + value.get<std::string>() + "'";
      return false;
    }
  }

  if (schema.contains("minimum") && value.is_number() &&
      value.get<double>() < schema["minimum"].get<double>()) {
    *why = "below minimum";
    return false;
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          *why = "missing required key " + key.get<std::string>();
          return false;
        }
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validate(props[it.key()], it.value(), why)) {
          *why = it.key() + ": " + *why;
          return false;
        }
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_object()) {
        if (!validate(schema["additionalProperties"], it.value(), why)) {
          *why = it.key() + ": " + *why;
          return false;
        }
      }
    }
  }

  if (value.is_array()) {
    if (schema.contains("minItems") &&
        value.size() < schema["minItems"].get<std::size_t>()) {
      *why = "too few items";
      return false;
    }
    if (schema.contains("maxItems") &&
        value.size() > schema["maxItems"].get<std::size_t>()) {
      *why = "too many items";
      return false;
    }
    if (schema.contains("items"))
      for (std::size_t i = 0; i < value.size(); ++i)
        if (!validate(schema["items"], value[i], why)) {
          *why = "item " + std::to_string(i) + ": " + *why;
          return false;
        }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: schema_check <schema.json> <instance.json>\n";
    return 2;
  }
  try {
    std::filesystem::path schema_path(argv[1]);
    schema_dir = schema_path.parent_path();
    json schema = load(schema_path);
    json instance = load(argv[2]);
    std::string why;
    if (!validate(schema, instance, &why)) {
      std::cerr << "schema violation: " << why << "\n";
      return 1;
    }
    std::cout << "ok\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
