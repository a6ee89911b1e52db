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

#include "qd/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

#include "qd/errors.hpp"

namespace qd::cli {
namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) throw PreconditionViolation("report: non-finite value");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_cell(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return nlohmann::json(*s).dump();
  return format_cell(cell);
}

}  // namespace

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("Report: row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return std::to_string(v);
      },
      cell);
}

std::string to_csv(const Report& report) {
  std::string out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(report.columns[i]);
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(format_cell(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& report) {
  std::string out = "{\n";
  out += "  \"experiment\": " + nlohmann::json(report.experiment).dump() + ",\n";
  out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
  // nlohmann keeps keys sorted, which keeps this stable.
  out += "  \"parameters\": " + report.parameters.dump() + ",\n";
  out += "  \"summary\": {";
  for (std::size_t i = 0; i < report.summary.size(); ++i) {
    out += i ? ", " : "";
    out += nlohmann::json(report.summary[i].first).dump() + ": " + json_cell(report.summary[i].second);
  }
  out += "},\n  \"columns\": [";
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out += i ? ", " : "";
    out += nlohmann::json(report.columns[i]).dump();
  }
  out += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (std::size_t i = 0; i < report.rows[r].size(); ++i) {
      out += i ? ", " : "";
      out += json_cell(report.rows[r][i]);
    }
    out += "]";
  }
  out += report.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string render(const Report& report, Format format) {
  return format == Format::csv ? to_csv(report) : to_json(report);
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + target.string() + ": " + ec.message());
  }
}

}  // namespace qd::cli
