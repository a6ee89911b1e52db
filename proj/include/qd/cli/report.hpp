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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qd/cli/config.hpp"

namespace qd::cli {

using Cell = std::variant<std::string, double, std::int64_t, bool>;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Tabular result of one experiment. Holds no timing information so that
/// equal inputs give equal bytes.
struct Report {
  std::string experiment;
  std::uint64_t seed = 0;
  nlohmann::json parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Short key/value facts for the one-line summary and the JSON header.
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<CheckResult> checks;

  void add_row(std::vector<Cell> row);
};

/// %.17g for doubles; throws PreconditionViolation on non-finite values.
std::string format_cell(const Cell& cell);

/// Header row plus one line per row. Fields containing a comma, quote, CR or
/// LF are quoted with doubled quotes. LF line endings.
std::string to_csv(const Report& report);

/// {"experiment", "seed", "parameters", "summary", "columns", "rows"}.
std::string to_json(const Report& report);

std::string render(const Report& report, Format format);

/// Writes to a sibling temporary file and renames it over `path`. Throws
/// std::runtime_error on failure, leaving no partial file behind.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace qd::cli
