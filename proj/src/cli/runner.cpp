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

#include "qd/cli/runner.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "qd/cli/experiments.hpp"
#include "qd/cli/report.hpp"
#include "qd/errors.hpp"

namespace qd::cli {
namespace {

std::string resolve_output(const ExperimentConfig& cfg, const RunOptions& opts, Format format) {
  if (opts.out) return *opts.out;
  if (cfg.output_path) return *cfg.output_path;
  const char* dir = std::getenv(kOutputDirEnv);
  std::filesystem::path base = dir && *dir ? dir : ".";
  return (base / (std::string(to_string(cfg.experiment)) + "." + std::string(to_string(format)))).string();
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int run_config(ExperimentConfig cfg, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  if (!opts.experiment.empty() && opts.experiment != to_string(cfg.experiment)) {
    err << "error: config is for '" << to_string(cfg.experiment) << "', not '" << opts.experiment << "'\n";
    return kExitConfig;
  }
  if (opts.seed) cfg.seed = *opts.seed;
  const Format format = opts.format.value_or(cfg.format);
  const std::string path = resolve_output(cfg, opts, format);

  const auto start = std::chrono::steady_clock::now();
  Report report;
  std::string text;
  try {
    report = run_experiment(cfg, resolve_threads(opts.threads));
    text = render(report, format);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad parameter: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  try {
    write_atomically(path, text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  out << report.experiment << ": " << report.rows.size() << " rows";
  for (const auto& [key, value] : report.summary) out << ", " << key << "=" << format_cell(value);
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", seconds);
  out << ", wrote " << path << " in " << secs << " s\n";

  if (!opts.check) return kExitOk;
  bool all = true;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    all = all && c.pass;
  }
  return all ? kExitOk : kExitCheckFailed;
}

int run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(opts.config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return run_config(std::move(cfg), opts, out, err);
}

void list_experiments(std::ostream& out) {
  for (const auto& info : experiment_catalog()) {
    out << to_string(info.experiment) << "\n  topic: " << info.topic << "\n  " << info.summary << "\n  defaults: "
        << default_parameters(info.experiment).dump() << "\n";
  }
}

}  // namespace qd::cli
