// Copyright 2026 The codim Authors
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

#include "cli/output.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include <fmt/format.h>

namespace codim::cli {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("row width does not match the table header");
  }
  rows_.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.12g}", x);
}

namespace {

const char* status_name(Status status) {
  switch (status) {
    case Status::kOk:
      return "ok";
    case Status::kViolation:
      return "violation";
    case Status::kError:
      return "error";
  }
  return "error";
}

nlohmann::json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          // Non-finite values have no JSON number form.
          if (!std::isfinite(v)) return format_double(v);
          return std::strtod(format_double(v).c_str(), nullptr);
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cell_csv(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return csv_quote(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? format_double(v) : csv_quote(format_double(v));
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

}  // namespace

nlohmann::json to_json(const OutputRecord& record) {
  nlohmann::json j;
  j["command"] = record.command;
  j["params"] = record.params;
  j["status"] = status_name(record.status);
  nlohmann::json payload = nlohmann::json::object();
  const auto& columns = record.payload.columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    nlohmann::json column = nlohmann::json::array();
    for (const auto& row : record.payload.rows()) column.push_back(cell_json(row[c]));
    payload[columns[c]] = std::move(column);
  }
  j["payload"] = std::move(payload);
  if (record.violation) {
    j["violation"] = {{"index", record.violation->index},
                      {"lhs", record.violation->lhs},
                      {"rhs", record.violation->rhs}};
  }
  if (record.status == Status::kError) j["error"] = record.error;
  return j;
}

void write_json(const OutputRecord& record, std::ostream& out) {
  out << to_json(record).dump(2) << '\n';
}

void write_csv(const OutputRecord& record, std::ostream& out) {
  if (record.status == Status::kError) {
    out << "error\n" << csv_quote(record.error) << '\n';
    return;
  }
  const auto& columns = record.payload.columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << (c ? "," : "") << columns[c];
  }
  out << '\n';
  for (const auto& row : record.payload.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << cell_csv(row[c]);
    }
    out << '\n';
  }
}

int exit_code(Status status) {
  switch (status) {
    case Status::kOk:
      return 0;
    case Status::kViolation:
      return 1;
    case Status::kError:
      return 2;
  }
  return 2;
}

}  // namespace codim::cli
