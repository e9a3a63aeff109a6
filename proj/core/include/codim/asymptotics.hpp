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

#ifndef CODIM_ASYMPTOTICS_HPP
#define CODIM_ASYMPTOTICS_HPP

// Real-valued growth diagnostics. Everything is computed in log space from
// exact inputs, so factorial-scale quantities never overflow.

#include <cstddef>
#include <optional>
#include <vector>

#include "codim/egf_series.hpp"

namespace codim {

// ln^{(k)} x. Throws DomainError naming the level whose argument is <= 0.
double iter_ln(unsigned k, double x);
// exp^{(k)} x.
double iter_exp(unsigned k, double x);

// ln n! by summing ln j.
double log_factorial(std::size_t n);

struct ScaleQuery {
  unsigned q;
  double alpha;
  std::size_t n;
};

// ln Psi^q_alpha(n): (1 - 1/alpha) ln n! for q = 2 (alpha >= 1), and
// ln n! - (n/alpha) ln ln^{(q-2)} n for q >= 3 (alpha > 0, ln^{(q-2)} n > 1).
double psi_log(const ScaleQuery& query);

struct SherSample {
  std::size_t n;
  double value;        // a_n^{lambda/n} ln^{(q-2)} n
  double running_sup;  // sup of value over the window up to n
};

struct RadiusSample {
  double r;
  double value;  // ln^{(q-1)} M_f(r) / r^lambda on the truncated series
};

struct GrowthDiagnostics {
  double lambda;
  unsigned q;
  std::vector<SherSample> samples;
  double running_sup;
  std::vector<RadiusSample> r_samples;
};

// Samples taken on n_min..n_max wherever a_n > 0 and ln^{(q-2)} n > 0.
// Throws DomainError (q < 3, lambda <= 0, window past the truncation order)
// and NegativeCoefficient.
GrowthDiagnostics sher_diagnostic(const EgfSeries& coeffs, double lambda,
                                  unsigned q, std::size_t n_min,
                                  std::size_t n_max,
                                  const std::vector<double>& radii = {});

// ln^{(m-1)} q~_m(r) / r from the closed recursion ln q~_m = r q~_{m-1}.
double tower_growth_ratio(unsigned m, double r);

struct UpperRatioRow {
  std::size_t n;
  double log_codim;  // -infinity when c_n = 0
  double log_scale;  // ln n! - n ln ln^{(m-2)} n
  double margin;     // log_codim - log_scale
};

// Compares c_n against n! / (ln^{(m-2)} n)^n for n_min..n_max. Requires
// m >= 3, n_max < c.size() and ln^{(m-2)} n > 1 on the window.
std::vector<UpperRatioRow> upper_bound_ratio(const CodimSequence& c, unsigned m,
                                             std::size_t n_min,
                                             std::size_t n_max);

}  // namespace codim

#endif  // CODIM_ASYMPTOTICS_HPP
