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
#include <ostream>
#include <string>

#include "qd/cli/config.hpp"

namespace qd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

/// Directory used when neither the command line nor the config names an
/// output path.
inline constexpr const char* kOutputDirEnv = "QD_OUTPUT_DIR";

struct RunOptions {
  std::string experiment;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<Format> format;
  bool check = false;
  int threads = 0;  ///< 0 picks the hardware concurrency
};

/// Loads the config, runs the experiment and writes the report. Prints a
/// one-line summary to `out` and diagnostics to `err`.
int run(const RunOptions& opts, std::ostream& out, std::ostream& err);

/// Same, for an already parsed config.
int run_config(ExperimentConfig cfg, const RunOptions& opts, std::ostream& out, std::ostream& err);

void list_experiments(std::ostream& out);

}  // namespace qd::cli
