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

#ifndef CODIM_TOOLS_CLI_OUTPUT_HPP
#define CODIM_TOOLS_CLI_OUTPUT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace codim::cli {

enum class Status { kOk, kViolation, kError };

// Strings carry exact values ("p/q" rationals, decimal big integers) and are
// always quoted in CSV; doubles are printed with 12 significant digits.
using Cell = std::variant<std::string, std::int64_t, double, bool>;

// Column-oriented payload. Every column has one cell per row.
class Table {
 public:
  explicit Table(std::vector<std::string> columns = {});

  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

struct Violation {
  std::size_t index;
  std::string lhs;
  std::string rhs;
};

struct OutputRecord {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::kOk;
  Table payload;
  std::optional<Violation> violation;
  std::string error;
};

enum class Format { kJson, kCsv };

std::string format_double(double x);
nlohmann::json to_json(const OutputRecord& record);
void write_json(const OutputRecord& record, std::ostream& out);
void write_csv(const OutputRecord& record, std::ostream& out);

int exit_code(Status status);

}  // namespace codim::cli

#endif  // CODIM_TOOLS_CLI_OUTPUT_HPP
