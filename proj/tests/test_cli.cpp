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

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "qd/cli/config.hpp"
#include "qd/cli/experiments.hpp"
#include "qd/cli/report.hpp"
#include "qd/cli/runner.hpp"
#include "qd/errors.hpp"

using namespace qd::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "qd_test_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("experiment names round-trip") {
  REQUIRE(all_experiments().size() == 9);
  for (Experiment e : all_experiments()) CHECK(parse_experiment(to_string(e)) == e);
  CHECK(to_string(Experiment::two_ham) == "two-ham");
  CHECK_FALSE(parse_experiment("two_ham"));
  CHECK(parse_format("json") == Format::json);
  CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("shipped example configs validate") {
  for (Experiment e : all_experiments()) {
    const std::string path = std::string(QD_SOURCE_DIR) + "/config/examples/" + std::string(to_string(e)) + ".json";
    const ExperimentConfig cfg = load_config(path);
    CHECK(cfg.experiment == e);
    CHECK(cfg.parameters == default_parameters(e));
  }
}

TEST_CASE("defaults are filled in") {
  const ExperimentConfig cfg = parse_config(R"({"experiment": "grover", "parameters": {"energy": 2.5}})");
  CHECK(cfg.seed == kDefaultSeed);
  CHECK(cfg.format == Format::csv);
  CHECK_FALSE(cfg.output_path);
  CHECK(cfg.parameters["energy"] == 2.5);
  CHECK(cfg.parameters["sizes"] == json::array({2, 4, 16, 256, 1024}));
}

TEST_CASE("output section is honoured") {
  const ExperimentConfig cfg =
      parse_config(R"({"experiment": "figure1", "seed": 7, "output": {"path": "x.json", "format": "json"}})");
  CHECK(cfg.seed == 7);
  CHECK(cfg.output_path == "x.json");
  CHECK(cfg.format == Format::json);
}

TEST_CASE("invalid configs are rejected") {
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config("[]"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"seed": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "nope"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "grover", "seed": -1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "grover", "seed": 1.5})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "grover", "bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "grover", "parameters": {"sizes": []}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "grover", "parameters": {"energy": "big"}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "figure1", "parameters": {"ratio_min": 0}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "figure1", "parameters": {"sizes": [2]}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": "grover", "output": {"format": "xml"}})"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/qd.json"), ConfigError);
}

TEST_CASE("validator reports paths") {
  const json schema = json::parse(R"({
    "type": "object", "required": ["a"],
    "properties": {"a": {"type": "array", "items": {"type": "integer", "maximum": 3}}}})");
  CHECK(validate(json::parse(R"({"a": [1, 2, 3]})"), schema).empty());
  const auto errors = validate(json::parse(R"({"a": [1, 5]})"), schema);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("/a/1") != std::string::npos);
  CHECK(validate(json::parse("{}"), schema).size() == 1);
}

TEST_CASE("cells use 17 significant digits") {
  CHECK(format_cell(0.1) == "0.10000000000000001");
  CHECK(format_cell(std::int64_t{-3}) == "-3");
  CHECK(format_cell(true) == "true");
  CHECK(format_cell(std::string("a")) == "a");
  CHECK(std::stod(format_cell(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK_THROWS_AS(format_cell(std::numeric_limits<double>::quiet_NaN()), qd::PreconditionViolation);
  CHECK_THROWS_AS(format_cell(std::numeric_limits<double>::infinity()), qd::PreconditionViolation);
}

TEST_CASE("CSV quoting and line endings") {
  Report r;
  r.experiment = "x";
  r.columns = {"name", "value"};
  r.add_row({std::string("plain"), 1.5});
  r.add_row({std::string("a,b"), std::int64_t{2}});
  r.add_row({std::string("say \"hi\""), false});
  r.add_row({std::string("two\nlines"), 0.0});
  CHECK(to_csv(r) == "name,value\nplain,1.5\n\"a,b\",2\n\"say \"\"hi\"\"\",false\n\"two\nlines\",0\n");
  CHECK_THROWS(r.add_row({1.0}));
}

TEST_CASE("JSON report parses back") {
  Report r;
  r.experiment = "grover";
  r.seed = 42;
  r.parameters = json{{"energy", 1.0}};
  r.columns = {"n", "p"};
  r.add_row({std::int64_t{4}, 0.1});
  r.summary.emplace_back("min", 0.1);
  const json doc = json::parse(to_json(r));
  CHECK(doc["experiment"] == "grover");
  CHECK(doc["seed"] == 42);
  CHECK(doc["parameters"]["energy"] == 1.0);
  CHECK(doc["columns"] == json::array({"n", "p"}));
  CHECK(doc["rows"][0][0] == 4);
  CHECK(doc["rows"][0][1].get<double>() == 0.1);
  CHECK(doc["summary"]["min"].get<double>() == 0.1);
}

TEST_CASE("atomic writes leave no temporaries") {
  const fs::path dir = scratch("atomic");
  const fs::path target = dir / "out.csv";
  write_atomically(target.string(), "one\n");
  write_atomically(target.string(), "two\n");
  CHECK(slurp(target) == "two\n");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  CHECK_THROWS(write_atomically((dir / "missing" / "out.csv").string(), "x"));
  CHECK_FALSE(fs::exists(dir / "missing"));
}

TEST_CASE("runner output is byte-identical across runs and thread counts") {
  const fs::path dir = scratch("determinism");
  for (const char* name : {"eliminate", "fixed-time", "phase-est", "superdense"}) {
    ExperimentConfig cfg = load_config(std::string(QD_SOURCE_DIR) + "/config/examples/" + name + ".json");
    std::string first;
    for (int threads : {1, 4, 1}) {
      RunOptions opts;
      opts.out = (dir / (std::string(name) + std::to_string(threads) + ".csv")).string();
      opts.threads = threads;
      std::ostringstream out, err;
      REQUIRE(run_config(cfg, opts, out, err) == kExitOk);
      const std::string text = slurp(*opts.out);
      if (first.empty()) first = text;
      CHECK(text == first);
    }
  }
}

TEST_CASE("seed override changes Monte Carlo output") {
  const fs::path dir = scratch("seed");
  ExperimentConfig cfg = load_config(std::string(QD_SOURCE_DIR) + "/config/examples/phase-est.json");
  RunOptions a, b;
  a.out = (dir / "a.csv").string();
  b.out = (dir / "b.csv").string();
  b.seed = 12345;
  std::ostringstream out, err;
  REQUIRE(run_config(cfg, a, out, err) == kExitOk);
  REQUIRE(run_config(cfg, b, out, err) == kExitOk);
  CHECK(slurp(*a.out) != slurp(*b.out));
}

TEST_CASE("runner exit codes") {
  const fs::path dir = scratch("exit");
  std::ostringstream out, err;

  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << R"({"experiment": "grover", "parameters": {"energy": -1}})";
  RunOptions opts;
  opts.config_path = bad.string();
  opts.out = (dir / "bad.csv").string();
  CHECK(run(opts, out, err) == kExitConfig);
  CHECK_FALSE(fs::exists(dir / "bad.csv"));

  const fs::path good = dir / "grover.json";
  std::ofstream(good) << R"({"experiment": "grover", "parameters": {"sizes": [2, 4]}})";
  opts.config_path = good.string();
  opts.experiment = "figure1";
  CHECK(run(opts, out, err) == kExitConfig);

  opts.experiment = "grover";
  opts.out = (dir / "no" / "such" / "dir.csv").string();
  CHECK(run(opts, out, err) == kExitIo);

  ExperimentConfig regime = parse_config(R"({"experiment": "theorem-check", "parameters": {"h_norm_max": 3.5}})");
  RunOptions ropts;
  ropts.out = (dir / "regime.csv").string();
  CHECK(run_config(regime, ropts, out, err) == kExitNumerical);
  CHECK_FALSE(fs::exists(dir / "regime.csv"));

  ExperimentConfig f1 = parse_config(R"({"experiment": "figure1", "parameters": {"points": 20, "grid": 256}})");
  RunOptions fopts;
  fopts.out = (dir / "f1.csv").string();
  fopts.check = true;
  std::ostringstream fout;
  const int code = run_config(f1, fopts, fout, err);
  CHECK((code == kExitOk || code == kExitCheckFailed));
  CHECK(fout.str().find("PASS") != std::string::npos);
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = scratch("env");
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  ExperimentConfig cfg = parse_config(R"({"experiment": "grover", "parameters": {"sizes": [2]}})");
  std::ostringstream out, err;
  CHECK(run_config(cfg, RunOptions{}, out, err) == kExitOk);
  ::unsetenv(kOutputDirEnv);
  CHECK(fs::exists(dir / "grover.csv"));
  CHECK(out.str().find("grover: 1 rows") == 0);
}

TEST_CASE("figure1 report has a header and a peak row") {
  const fs::path dir = scratch("figure1");
  ExperimentConfig cfg = parse_config(R"({"experiment": "figure1", "parameters": {"points": 30, "grid": 512}})");
  RunOptions opts;
  opts.out = (dir / "f.csv").string();
  std::ostringstream out, err;
  REQUIRE(run_config(cfg, opts, out, err) == kExitOk);
  const std::string text = slurp(*opts.out);
  CHECK(text.rfind("kind,", 0) == 0);
  CHECK(text.find("\npeak,") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("experiment listing is stable") {
  std::ostringstream a, b;
  list_experiments(a);
  list_experiments(b);
  CHECK(a.str() == b.str());
  for (Experiment e : all_experiments()) CHECK(a.str().find(std::string(to_string(e)) + "\n") != std::string::npos);
  CHECK(experiment_catalog().size() == 9);
}
