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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qd::cli {

enum class Experiment {
  superdense,
  grover,
  two_ham,
  fixed_time,
  eliminate,
  phase_est,
  metrology,
  figure1,
  theorem_check,
};

enum class Format { csv, json };

inline constexpr std::uint64_t kDefaultSeed = 1998;

const std::vector<Experiment>& all_experiments();
std::string_view to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);
std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

/// Config file problems: bad syntax or a schema violation.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::grover;
  /// Experiment parameters with schema defaults filled in.
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> output_path;
  Format format = Format::csv;
};

const nlohmann::json& schema();

/// Every violation of the supported draft-07 subset, as "path: message".
std::vector<std::string> validate(const nlohmann::json& doc, const nlohmann::json& schema);

/// Parses and validates a config document. Throws ConfigError.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Schema defaults for an experiment's parameters.
nlohmann::json default_parameters(Experiment e);

}  // namespace qd::cli
