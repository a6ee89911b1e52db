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

#include <string_view>

#include "qd/cli/config.hpp"
#include "qd/cli/report.hpp"

namespace qd::cli {

struct ExperimentInfo {
  Experiment experiment;
  std::string_view topic;
  std::string_view summary;
};

const std::vector<ExperimentInfo>& experiment_catalog();

/// Runs one experiment and evaluates its acceptance checks. Thread count
/// only affects speed: rows come out in input order and Monte Carlo streams
/// are seeded per item. Library errors propagate unchanged.
Report run_experiment(const ExperimentConfig& cfg, int threads);

}  // namespace qd::cli
