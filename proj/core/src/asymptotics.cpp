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

#include "codim/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "codim/errors.hpp"

namespace codim {

double iter_ln(unsigned k, double x) {
  for (unsigned level = 1; level <= k; ++level) {
    if (!(x > 0)) {
      throw DomainError("iterated logarithm: argument of level " +
                        std::to_string(level) + " is not positive");
    }
    x = std::log(x);
  }
  return x;
}

double iter_exp(unsigned k, double x) {
  for (unsigned level = 0; level < k; ++level) x = std::exp(x);
  return x;
}

double log_factorial(std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 2; j <= n; ++j) acc += std::log(static_cast<double>(j));
  return acc;
}

double psi_log(const ScaleQuery& query) {
  if (query.q < 2) throw DomainError("scale level q must be at least 2");
  if (query.q == 2) {
    if (!(query.alpha >= 1)) throw DomainError("q = 2 needs alpha >= 1");
    return (1.0 - 1.0 / query.alpha) * log_factorial(query.n);
  }
  if (!(query.alpha > 0)) throw DomainError("alpha must be positive");
  if (query.n < 3) throw DomainError("Psi needs n >= 3");
  const double inner = iter_ln(query.q - 2, static_cast<double>(query.n));
  if (!(inner > 1)) {
    throw DomainError("ln^(" + std::to_string(query.q - 2) + ") " +
                      std::to_string(query.n) + " must exceed 1");
  }
  return log_factorial(query.n) -
         static_cast<double>(query.n) / query.alpha * std::log(inner);
}

GrowthDiagnostics sher_diagnostic(const EgfSeries& coeffs, double lambda,
                                  unsigned q, std::size_t n_min,
                                  std::size_t n_max,
                                  const std::vector<double>& radii) {
  if (q < 3) throw DomainError("sher_diagnostic needs q >= 3");
  if (!(lambda > 0)) throw DomainError("lambda must be positive");
  if (n_max > coeffs.order()) {
    throw DomainError("window ends at " + std::to_string(n_max) +
                      " past truncation order " + std::to_string(coeffs.order()));
  }
  for (std::size_t n = 0; n <= coeffs.order(); ++n) {
    if (coeffs[n] < 0) {
      throw NegativeCoefficient("coefficient " + std::to_string(n) +
                                " is negative");
    }
  }

  GrowthDiagnostics out{lambda, q, {}, -std::numeric_limits<double>::infinity(), {}};
  for (std::size_t n = std::max<std::size_t>(n_min, 1); n <= n_max; ++n) {
    if (coeffs[n] == 0) continue;
    double scale_term = static_cast<double>(n);
    bool defined = true;
    for (unsigned level = 0; level < q - 2; ++level) {
      if (!(scale_term > 0)) {
        defined = false;
        break;
      }
      scale_term = std::log(scale_term);
    }
    if (!defined || !(scale_term > 0)) continue;
    const double value =
        std::exp(lambda / static_cast<double>(n) * log_positive(coeffs[n])) *
        scale_term;
    out.running_sup = std::max(out.running_sup, value);
    out.samples.push_back({n, value, out.running_sup});
  }

  for (double r : radii) {
    // ln^{(q-1)} M(r) = ln^{(q-2)} of ln M(r).
    const double log_m = eval_log_real(coeffs, r);
    const double top = iter_ln(q - 2, log_m);
    out.r_samples.push_back({r, top / std::pow(r, lambda)});
  }
  return out;
}

double tower_growth_ratio(unsigned m, double r) {
  if (m < 2) throw DomainError("tower_growth_ratio needs m >= 2");
  if (!(r > 0)) throw DomainError("tower_growth_ratio needs r > 0");
  // r~_1 = 0, r~_{k+1} = r exp(r~_k), ln q~_m = r~_m. Forward values may
  // overflow to +inf; only their reciprocals enter below.
  std::vector<double> tower_r(m + 1, 0.0);
  for (unsigned k = 2; k <= m; ++k) tower_r[k] = r * std::exp(tower_r[k - 1]);
  if (m == 2) return tower_r[2] / r;

  // ln^{(j)} q~_m = ln r + r~_{m-j+1} + eps_j for j >= 2, eps_2 = 0 and
  // eps_{j+1} = log1p((ln r + eps_j) / r~_{m-j+1}).
  const double log_r = std::log(r);
  double eps = 0.0;
  for (unsigned j = 2; j < m - 1; ++j) {
    const double big = tower_r[m - j + 1];
    const double rel = (log_r + eps) / big;
    if (!(rel > -1)) {
      throw DomainError("iterated logarithm of level " + std::to_string(j + 1) +
                        " is undefined at this r");
    }
    eps = std::log1p(rel);
  }
  return (log_r + tower_r[2] + eps) / r;
}

std::vector<UpperRatioRow> upper_bound_ratio(const CodimSequence& c, unsigned m,
                                             std::size_t n_min,
                                             std::size_t n_max) {
  if (m < 3) throw DomainError("upper_bound_ratio needs m >= 3");
  if (n_max >= c.size()) {
    throw DomainError("window ends past the codimension sequence");
  }
  std::vector<UpperRatioRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const double inner = iter_ln(m - 2, static_cast<double>(n));
    if (!(inner > 1)) {
      throw DomainError("ln^(" + std::to_string(m - 2) + ") " + std::to_string(n) +
                        " must exceed 1");
    }
    const double log_scale =
        log_factorial(n) - static_cast<double>(n) * std::log(inner);
    const double log_codim = log_abs(c[n]);
    rows.push_back({n, log_codim, log_scale, log_codim - log_scale});
  }
  return rows;
}

}  // namespace codim
