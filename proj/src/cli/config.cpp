// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qd/cli/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qd/cli/schema_data.hpp"

namespace qd::cli {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Experiment, std::string_view>, 9> kNames{{
    {Experiment::superdense, "superdense"},
    {Experiment::grover, "grover"},
    {Experiment::two_ham, "two-ham"},
    {Experiment::fixed_time, "fixed-time"},
    {Experiment::eliminate, "eliminate"},
    {Experiment::phase_est, "phase-est"},
    {Experiment::metrology, "metrology"},
    {Experiment::figure1, "figure1"},
    {Experiment::theorem_check, "theorem-check"},
}};

std::string type_name(const json& v) {
  if (v.is_number_integer()) return "integer";
  if (v.is_number()) return "number";
  return v.type_name();
}

bool has_type(const json& v, const std::string& t) {
  if (t == "integer") {
    if (v.is_number_integer()) return true;
    // 3.0 counts as an integer in JSON Schema.
    return v.is_number_float() && std::isfinite(v.get<double>()) && v.get<double>() == std::floor(v.get<double>());
  }
  if (t == "number") return v.is_number();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "null") return v.is_null();
  return false;
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void check(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) const {
    if (s.is_boolean()) {
      if (!s.get<bool>()) errors.push_back(path + ": not allowed");
      return;
    }
    if (auto it = s.find("$ref"); it != s.end()) {
      check(v, resolve(it->get<std::string>()), path, errors);
      return;
    }
    if (auto it = s.find("type"); it != s.end()) {
      bool ok = false;
      if (it->is_string()) ok = has_type(v, it->get<std::string>());
      else for (const auto& t : *it) ok = ok || has_type(v, t.get<std::string>());
      if (!ok) {
        errors.push_back(path + ": expected " + it->dump() + ", got " + type_name(v));
        return;
      }
    }
    if (auto it = s.find("enum"); it != s.end()) {
      bool found = false;
      for (const auto& e : *it) found = found || e == v;
      if (!found) errors.push_back(path + ": must be one of " + it->dump());
    }
    if (auto it = s.find("const"); it != s.end() && *it != v) errors.push_back(path + ": must equal " + it->dump());
    if (v.is_number()) check_number(v.get<double>(), s, path, errors);
    if (v.is_string()) {
      if (auto it = s.find("minLength"); it != s.end() && v.get<std::string>().size() < it->get<std::size_t>()) {
        errors.push_back(path + ": string too short");
      }
    }
    if (v.is_array()) check_array(v, s, path, errors);
    if (v.is_object()) check_object(v, s, path, errors);
    if (auto it = s.find("allOf"); it != s.end()) {
      for (const auto& sub : *it) check(v, sub, path, errors);
    }
    if (auto it = s.find("if"); it != s.end()) {
      std::vector<std::string> probe;
      check(v, *it, path, probe);
      const char* branch = probe.empty() ? "then" : "else";
      if (auto b = s.find(branch); b != s.end()) check(v, *b, path, errors);
    }
  }

 private:
  const json& resolve(const std::string& ref) const {
    if (ref.rfind("#", 0) != 0) throw ConfigError("schema: only local references are supported: " + ref);
    return root_.at(json::json_pointer(ref.substr(1)));
  }

  static void check_number(double x, const json& s, const std::string& path, std::vector<std::string>& errors) {
    auto bound = [&](const char* key, auto fails, const char* what) {
      if (auto it = s.find(key); it != s.end() && fails(x, it->template get<double>())) {
        errors.push_back(path + ": must be " + what + " " + it->dump());
      }
    };
    bound("minimum", [](double a, double b) { return a < b; }, ">=");
    bound("maximum", [](double a, double b) { return a > b; }, "<=");
    bound("exclusiveMinimum", [](double a, double b) { return a <= b; }, ">");
    bound("exclusiveMaximum", [](double a, double b) { return a >= b; }, "<");
  }

  void check_array(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) const {
    if (auto it = s.find("minItems"); it != s.end() && v.size() < it->get<std::size_t>()) {
      errors.push_back(path + ": needs at least " + it->dump() + " items");
    }
    if (auto it = s.find("maxItems"); it != s.end() && v.size() > it->get<std::size_t>()) {
      errors.push_back(path + ": allows at most " + it->dump() + " items");
    }
    if (auto it = s.find("items"); it != s.end()) {
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], *it, path + "/" + std::to_string(i), errors);
    }
  }

  void check_object(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) const {
    if (auto it = s.find("required"); it != s.end()) {
      for (const auto& key : *it) {
        if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing required key " + key.dump());
      }
    }
    const auto props = s.find("properties");
    for (const auto& [key, value] : v.items()) {
      const std::string child = path + "/" + key;
      if (props != s.end() && props->contains(key)) {
        check(value, (*props)[key], child, errors);
      } else if (auto extra = s.find("additionalProperties"); extra != s.end()) {
        if (extra->is_boolean() && !extra->get<bool>()) errors.push_back(child + ": unknown key");
        else if (extra->is_object()) check(value, *extra, child, errors);
      }
    }
  }

  const json& root_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> list = [] {
    std::vector<Experiment> out;
    for (const auto& [e, name] : kNames) out.push_back(e);
    return out;
  }();
  return list;
}

std::string_view to_string(Experiment e) {
  for (const auto& [value, name] : kNames) {
    if (value == e) return name;
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto& [value, n] : kNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

std::string_view to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

const nlohmann::json& schema() {
  static const json parsed = json::parse(kSchemaText);
  return parsed;
}

std::vector<std::string> validate(const nlohmann::json& doc, const nlohmann::json& schema_doc) {
  std::vector<std::string> errors;
  Validator(schema_doc).check(doc, schema_doc, "", errors);
  for (auto& e : errors) {
    if (e.front() == ':') e.insert(0, "/");
  }
  return errors;
}

nlohmann::json default_parameters(Experiment e) {
  json out = json::object();
  const json& props = schema().at("definitions").at(std::string(to_string(e))).at("properties");
  for (const auto& [key, spec] : props.items()) {
    if (spec.contains("default")) out[key] = spec["default"];
  }
  return out;
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  const auto errors = validate(doc, schema());
  if (!errors.empty()) {
    std::string msg = "config does not match the schema:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw ConfigError(msg);
  }

  ExperimentConfig cfg;
  cfg.experiment = *parse_experiment(doc.at("experiment").get<std::string>());
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  cfg.parameters = default_parameters(cfg.experiment);
  if (doc.contains("parameters")) {
    for (const auto& [key, value] : doc["parameters"].items()) cfg.parameters[key] = value;
  }
  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (out.contains("path")) cfg.output_path = out["path"].get<std::string>();
    if (out.contains("format")) cfg.format = *parse_format(out["format"].get<std::string>());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

}  // namespace qd::cli
