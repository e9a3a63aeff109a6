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

#include "cli/commands.hpp"

#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "codim/asymptotics.hpp"
#include "codim/egf_series.hpp"
#include "codim/errors.hpp"
#include "codim/variety.hpp"
#include "codim/words.hpp"

namespace codim::cli {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::int64_t idx(std::size_t n) { return static_cast<std::int64_t>(n); }

OutputRecord error_record(std::string command, nlohmann::json params,
                          std::string message) {
  OutputRecord record;
  record.command = std::move(command);
  record.params = std::move(params);
  record.status = Status::kError;
  record.error = std::move(message);
  return record;
}

// Runs `body`, turning library exceptions into an error record.
OutputRecord guarded(const std::string& command, const nlohmann::json& params,
                     const std::function<OutputRecord()>& body) {
  try {
    OutputRecord record = body();
    record.command = command;
    record.params = params;
    return record;
  } catch (const codim::Error& e) {
    return error_record(command, params, e.what());
  }
}

void mark_violation(OutputRecord& record, std::size_t n, std::string lhs,
                    std::string rhs) {
  if (record.violation) return;
  record.status = Status::kViolation;
  record.violation = Violation{n, std::move(lhs), std::move(rhs)};
}

std::vector<BigInt> catalog_codims(const std::string& name, std::size_t order) {
  const CodimSequence c = codims_from_series(complexity(parse_variety(name), order));
  return {c.values().begin(), c.values().end()};
}

std::size_t cap_for(const std::string& check) {
  if (check == "kuzmin" || check == "cbm") return kKuzminCap;
  if (check == "tilde-q" || check == "tilde-r") return kTildeCap;
  if (check == "poisson-basis") return kPartitionCap;
  return kPermutationCap;
}

// Fills one oracle row: brute-force counts next to the catalog count, flagging
// the first disagreement.
void add_count_row(OutputRecord& record, std::size_t n,
                   const std::vector<std::uint64_t>& counts,
                   const BigInt& series) {
  std::vector<Cell> row{idx(n)};
  for (std::uint64_t c : counts) row.emplace_back(str(c));
  row.emplace_back(to_string(series));
  for (std::uint64_t c : counts) {
    if (BigInt(static_cast<unsigned long>(c)) != series) {
      mark_violation(record, n, str(counts.front()),
                     c == counts.front() ? to_string(series) : str(c));
      break;
    }
  }
  record.payload.add_row(std::move(row));
}

}  // namespace

OutputRecord cmd_series(const std::string& variety, std::size_t order) {
  const nlohmann::json params{{"variety", variety}, {"order", order}};
  return guarded("series", params, [&] {
    const EgfSeries f = complexity(parse_variety(variety), order);
    const CodimSequence c = codims_from_series(f);
    OutputRecord record;
    record.payload = Table({"n", "taylor", "codim"});
    for (std::size_t n = 0; n <= f.order(); ++n) {
      record.payload.add_row({idx(n), to_string(f[n]), to_string(c[n])});
    }
    return record;
  });
}

OutputRecord cmd_oracle(const OracleParams& p) {
  const std::size_t cap = cap_for(p.check);
  const std::size_t n_max = p.n_max.value_or(cap);
  nlohmann::json params{{"check", p.check}, {"n_max", n_max}, {"force", p.force}};
  if (p.check == "qm" || p.check == "rm" || p.check == "tilde-q" ||
      p.check == "tilde-r") {
    params["m"] = p.m;
  }
  if (p.check == "cbm") params["char2"] = p.char_two;

  return guarded("oracle", params, [&]() -> OutputRecord {
    if (n_max > cap && !p.force) {
      throw ParameterError("n_max " + std::to_string(n_max) + " exceeds the cap " +
                           std::to_string(cap) + " for check '" + p.check +
                           "'; pass --force to override");
    }
    OutputRecord record;
    if (p.check == "qm") {
      const auto series = catalog_codims("indecomp-q:" + std::to_string(p.m), n_max);
      record.payload =
          Table({"n", "count_recursive", "count_naive", "count_series"});
      for (std::size_t n = 0; n <= n_max; ++n) {
        const WordCountReport r = count_Qm(n, p.m);
        add_count_row(record, n, {r.count_recursive, *r.count_naive}, series[n]);
      }
    } else if (p.check == "rm") {
      const auto series = catalog_codims("indecomp-r:" + std::to_string(p.m), n_max);
      record.payload = Table(
          {"n", "count_recursive", "count_naive", "count_shifted", "count_series"});
      for (std::size_t n = 1; n <= n_max; ++n) {
        const WordCountReport r = count_Rm(n, p.m);
        // c_n(R_m) = c_{n-1}(Q_{m-1}); R_1 is empty.
        const std::uint64_t shifted =
            p.m >= 2 ? count_Qm(n - 1, p.m - 1, false).count_recursive : 0;
        add_count_row(record, n, {r.count_recursive, *r.count_naive, shifted},
                      series[n]);
      }
    } else if (p.check == "tilde-q" || p.check == "tilde-r") {
      const bool is_q = p.check == "tilde-q";
      const auto series = catalog_codims(
          (is_q ? "tower-q:" : "tower-r:") + std::to_string(p.m), n_max);
      record.payload =
          Table({"n", "count_recursive", "count_multilinear", "count_series"});
      for (std::size_t n = is_q ? 0 : 1; n <= n_max; ++n) {
        const WordCountReport r =
            count_tilde(n, p.m, is_q ? TildeKind::Q : TildeKind::R);
        add_count_row(record, n, {r.count_recursive, *r.count_naive}, series[n]);
      }
    } else if (p.check == "kuzmin") {
      record.payload = Table({"n", "count", "formula"});
      for (std::size_t n = 4; n <= n_max; ++n) {
        add_count_row(record, n, {count_kuzmin(n)}, BigInt(static_cast<unsigned long>(n * (n - 3) / 2)));
      }
    } else if (p.check == "poisson-basis") {
      const auto series = catalog_codims("poisson", n_max);
      record.payload = Table({"n", "count", "count_series"});
      for (std::size_t n = 1; n <= n_max; ++n) {
        add_count_row(record, n, {count_free_poisson_multilinear(n)}, series[n]);
      }
    } else if (p.check == "cbm") {
      const auto series = catalog_codims(p.char_two ? "cbm:char2" : "cbm:char0", n_max);
      const auto metab = catalog_codims("metab", n_max);
      record.payload = Table({"n", "metabelian", "second_derived", "count",
                              "count_series"});
      for (std::size_t n = 4; n <= n_max; ++n) {
        const std::uint64_t second = count_cbm_second_derived(n, p.char_two);
        // The metabelian quotient has c_n = n - 1.
        const std::uint64_t total = (n - 1) + second;
        std::vector<Cell> row{idx(n), to_string(metab[n]), str(second), str(total),
                              to_string(series[n])};
        if (BigInt(static_cast<unsigned long>(total)) != series[n]) {
          mark_violation(record, n, str(total), to_string(series[n]));
        }
        record.payload.add_row(std::move(row));
      }
    } else {
      throw ParameterError("unknown oracle check '" + p.check + "'");
    }
    return record;
  });
}

OutputRecord cmd_bound(const std::string& lhs, const std::string& rhs,
                       std::size_t order) {
  const nlohmann::json params{{"lhs", lhs}, {"rhs", rhs}, {"order", order}};
  return guarded("bound", params, [&] {
    const EgfSeries f = complexity(parse_variety(lhs), order);
    const EgfSeries g = complexity(parse_variety(rhs), order);
    OutputRecord record;
    record.payload = Table({"n", "lhs", "rhs", "le"});
    for (std::size_t n = 0; n <= order; ++n) {
      record.payload.add_row({idx(n), to_string(f[n]), to_string(g[n]), f[n] <= g[n]});
    }
    const DominanceResult d = coeff_le(f, g);
    if (!d.holds) {
      const std::size_t n = *d.first_violation;
      mark_violation(record, n, to_string(f[n]), to_string(g[n]));
    }
    return record;
  });
}

OutputRecord cmd_asym_psi(unsigned q, double alpha, std::size_t n,
                          std::optional<std::size_t> n_max) {
  nlohmann::json params{{"q", q}, {"alpha", alpha}, {"n", n}};
  if (n_max) params["n_max"] = *n_max;
  return guarded("asym psi", params, [&] {
    OutputRecord record;
    record.payload = Table({"n", "log_psi"});
    for (std::size_t k = n; k <= n_max.value_or(n); ++k) {
      record.payload.add_row({idx(k), psi_log({q, alpha, k})});
    }
    return record;
  });
}

OutputRecord cmd_asym_sher(const std::string& variety, double lambda, unsigned q,
                           std::size_t n_min, std::size_t n_max,
                           std::optional<std::size_t> order) {
  const std::size_t depth = order.value_or(n_max);
  const nlohmann::json params{{"variety", variety}, {"lambda", lambda}, {"q", q},
                              {"n_min", n_min},     {"n_max", n_max},   {"order", depth}};
  return guarded("asym sher", params, [&] {
    const EgfSeries f = complexity(parse_variety(variety), depth);
    const GrowthDiagnostics d = sher_diagnostic(f, lambda, q, n_min, n_max);
    OutputRecord record;
    record.payload = Table({"n", "s_n", "running_sup"});
    for (const SherSample& s : d.samples) {
      record.payload.add_row({idx(s.n), s.value, s.running_sup});
    }
    return record;
  });
}

OutputRecord cmd_asym_tower(unsigned m, double r) {
  const nlohmann::json params{{"m", m}, {"r", r}};
  return guarded("asym tower", params, [&] {
    OutputRecord record;
    record.payload = Table({"m", "r", "ratio"});
    record.payload.add_row({static_cast<std::int64_t>(m), r, tower_growth_ratio(m, r)});
    return record;
  });
}

OutputRecord cmd_asym_upper_ratio(const std::string& variety, unsigned m,
                                  std::size_t n_min, std::size_t n_max) {
  const nlohmann::json params{
      {"variety", variety}, {"m", m}, {"n_min", n_min}, {"n_max", n_max}};
  return guarded("asym upper-ratio", params, [&] {
    const CodimSequence c =
        codims_from_series(complexity(parse_variety(variety), n_max));
    OutputRecord record;
    record.payload = Table({"n", "log_codim", "log_scale", "margin"});
    for (const UpperRatioRow& row : upper_bound_ratio(c, m, n_min, n_max)) {
      record.payload.add_row({idx(row.n), row.log_codim, row.log_scale, row.margin});
    }
    return record;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Codimension sequences and complexity functions of Lie and "
               "Poisson varieties"};
  app.name("codim");
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output, "Write the record to this path");

  std::function<OutputRecord()> action;

  auto* series = app.add_subcommand("series", "Expand a complexity function");
  std::string series_variety;
  std::size_t series_order = 20;
  series->add_option("--variety", series_variety, "Variety name")->required();
  series->add_option("--order", series_order, "Truncation order");
  series->callback([&] { action = [&] { return cmd_series(series_variety, series_order); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force word oracles");
  OracleParams oracle_params;
  std::size_t oracle_n_max = 0;
  oracle->add_option("--check", oracle_params.check, "Which oracle")
      ->required()
      ->check(CLI::IsMember(
          {"qm", "rm", "tilde-q", "tilde-r", "kuzmin", "poisson-basis", "cbm"}));
  oracle->add_option("--m", oracle_params.m, "Indecomposability parameter m")
      ->check(CLI::PositiveNumber);
  auto* n_max_opt = oracle->add_option("--n-max", oracle_n_max, "Largest degree");
  oracle->add_flag("--char2", oracle_params.char_two,
                   "Characteristic 2 (cbm check only)");
  oracle->add_flag("--force", oracle_params.force, "Ignore brute-force caps");
  oracle->callback([&] {
    if (n_max_opt->count() > 0) oracle_params.n_max = oracle_n_max;
    action = [&] { return cmd_oracle(oracle_params); };
  });

  auto* bound = app.add_subcommand("bound", "Coefficientwise dominance check");
  std::string lhs, rhs;
  std::size_t bound_order = 20;
  bound->add_option("--lhs", lhs, "Dominated variety")->required();
  bound->add_option("--rhs", rhs, "Dominating variety")->required();
  bound->add_option("--order", bound_order, "Truncation order");
  bound->callback([&] { action = [&] { return cmd_bound(lhs, rhs, bound_order); }; });

  auto* asym = app.add_subcommand("asym", "Asymptotic diagnostics");
  asym->require_subcommand(1);

  auto* psi = asym->add_subcommand("psi", "ln Psi^q_alpha(n)");
  unsigned psi_q = 2;
  double psi_alpha = 1;
  std::size_t psi_n = 3, psi_n_max = 0;
  psi->add_option("--q", psi_q)->required();
  psi->add_option("--alpha", psi_alpha)->required();
  psi->add_option("--n", psi_n)->required();
  auto* psi_n_max_opt = psi->add_option("--n-max", psi_n_max, "Evaluate n..n-max");
  psi->callback([&] {
    std::optional<std::size_t> upto;
    if (psi_n_max_opt->count() > 0) upto = psi_n_max;
    action = [&, upto] { return cmd_asym_psi(psi_q, psi_alpha, psi_n, upto); };
  });

  auto* sher = asym->add_subcommand("sher", "Coefficient growth diagnostic");
  std::string sher_variety;
  double sher_lambda = 1;
  unsigned sher_q = 3;
  std::size_t sher_n_min = 1, sher_n_max = 100, sher_order = 0;
  sher->add_option("--variety", sher_variety)->required();
  sher->add_option("--lambda", sher_lambda);
  sher->add_option("--q", sher_q);
  sher->add_option("--n-min", sher_n_min);
  sher->add_option("--n-max", sher_n_max);
  auto* sher_order_opt = sher->add_option("--order", sher_order,
                                          "Truncation order (defaults to n-max)");
  sher->callback([&] {
    std::optional<std::size_t> order;
    if (sher_order_opt->count() > 0) order = sher_order;
    action = [&, order] {
      return cmd_asym_sher(sher_variety, sher_lambda, sher_q, sher_n_min,
                           sher_n_max, order);
    };
  });

  auto* tower = asym->add_subcommand("tower", "Growth ratio of q~_m");
  unsigned tower_m = 3;
  double tower_r = 20;
  tower->add_option("--m", tower_m)->required();
  tower->add_option("--r", tower_r)->required();
  tower->callback([&] { action = [&] { return cmd_asym_tower(tower_m, tower_r); }; });

  auto* upper = asym->add_subcommand("upper-ratio",
                                     "Log margin of c_n over n!/(ln^(m-2) n)^n");
  std::string upper_variety;
  unsigned upper_m = 3;
  std::size_t upper_n_min = 16, upper_n_max = 30;
  upper->add_option("--variety", upper_variety)->required();
  upper->add_option("--m", upper_m)->required();
  upper->add_option("--n-min", upper_n_min);
  upper->add_option("--n-max", upper_n_max);
  upper->callback([&] {
    action = [&] {
      return cmd_asym_upper_ratio(upper_variety, upper_m, upper_n_min, upper_n_max);
    };
  });

  for (CLI::App* sub : {series, oracle, bound, asym, psi, sher, tower, upper}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  OutputRecord record;
  try {
    app.parse(reversed);
    record = action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    record = error_record("", nlohmann::json::object(), e.what());
  }

  std::ostringstream rendered;
  if (format == "csv") {
    write_csv(record, rendered);
  } else {
    write_json(record, rendered);
  }
  if (output.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "cannot open " << output << " for writing\n";
      return 2;
    }
    file << rendered.str();
  }
  if (record.status == Status::kError) err << "error: " << record.error << '\n';
  return exit_code(record.status);
}

}  // namespace codim::cli
