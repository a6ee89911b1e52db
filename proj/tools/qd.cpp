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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qd/cli/config.hpp"
#include "qd/cli/runner.hpp"

int main(int argc, char** argv) {
  using namespace qd::cli;
  CLI::App app{"Run reproducible quantum discrimination and metrology experiments."};
  app.require_subcommand(1);

  app.add_subcommand("list", "List the experiments and their default parameters")->callback([] {
    list_experiments(std::cout);
  });

  RunOptions opts;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
  for (const Experiment e : all_experiments()) {
    const std::string name(to_string(e));
    auto* sub = app.add_subcommand(name, "Run the " + name + " experiment");
    sub->add_option("--config", opts.config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "Override the config seed");
    sub->add_option("--out", out_path, "Report path (default $" + std::string(kOutputDirEnv) + "/<experiment>.<format>)");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--check", opts.check, "Evaluate the experiment's acceptance checks; exit 1 on failure");
    sub->add_option("--threads", opts.threads, "Worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  CLI::App* sub = app.get_subcommands().front();
  if (sub->get_name() == "list") return kExitOk;
  opts.experiment = sub->get_name();
  if (sub->count("--seed")) opts.seed = seed;
  if (!out_path.empty()) opts.out = out_path;
  if (!format.empty()) opts.format = parse_format(format);
  return run(opts, std::cout, std::cerr);
}
