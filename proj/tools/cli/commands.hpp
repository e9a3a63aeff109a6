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

#ifndef CODIM_TOOLS_CLI_COMMANDS_HPP
#define CODIM_TOOLS_CLI_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/output.hpp"

namespace codim::cli {

OutputRecord cmd_series(const std::string& variety, std::size_t order);

struct OracleParams {
  std::string check;  // qm | rm | tilde-q | tilde-r | kuzmin | poisson-basis | cbm
  unsigned m = 3;
  std::optional<std::size_t> n_max;  // defaults to the check's cap
  bool char_two = false;             // cbm only
  bool force = false;
};
OutputRecord cmd_oracle(const OracleParams& params);

OutputRecord cmd_bound(const std::string& lhs, const std::string& rhs,
                       std::size_t order);

OutputRecord cmd_asym_psi(unsigned q, double alpha, std::size_t n,
                          std::optional<std::size_t> n_max);
OutputRecord cmd_asym_sher(const std::string& variety, double lambda, unsigned q,
                           std::size_t n_min, std::size_t n_max,
                           std::optional<std::size_t> order);
OutputRecord cmd_asym_tower(unsigned m, double r);
OutputRecord cmd_asym_upper_ratio(const std::string& variety, unsigned m,
                                  std::size_t n_min, std::size_t n_max);

// Parses argv-style arguments (without the program name), runs the command
// and writes the record to `out` or to --output. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace codim::cli

#endif  // CODIM_TOOLS_CLI_COMMANDS_HPP
