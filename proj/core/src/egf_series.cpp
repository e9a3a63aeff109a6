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

#include "codim/egf_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "codim/errors.hpp"

namespace codim {

CodimSequence::CodimSequence(std::vector<BigInt> values)
    : values_(std::move(values)) {
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (values_[n] < 0) {
      throw ParameterError("negative codimension at n=" + std::to_string(n));
    }
  }
}

EgfSeries::EgfSeries() : taylor_(1) {}

EgfSeries::EgfSeries(std::vector<Rational> taylor) : taylor_(std::move(taylor)) {
  if (taylor_.empty()) throw ParameterError("series needs at least one coefficient");
}

EgfSeries EgfSeries::zero(std::size_t order) {
  return EgfSeries(std::vector<Rational>(order + 1));
}

EgfSeries EgfSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> t(order + 1);
  t[0] = c;
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::variable(std::size_t order) {
  return monomial(1, 1, order);
}

EgfSeries EgfSeries::monomial(const Rational& a, std::size_t k,
                              std::size_t order) {
  std::vector<Rational> t(order + 1);
  if (k <= order) t[k] = a;
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::exponential(std::size_t order) {
  std::vector<Rational> t(order + 1);
  Rational term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) term /= static_cast<unsigned long>(n);
    t[n] = term;
  }
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::geometric(std::size_t order) {
  return EgfSeries(std::vector<Rational>(order + 1, Rational(1)));
}

EgfSeries EgfSeries::neg_log_one_minus(std::size_t order) {
  std::vector<Rational> t(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    t[n] = Rational(1, static_cast<unsigned long>(n));
  }
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::sinh(std::size_t order) {
  EgfSeries e = exponential(order);
  std::vector<Rational> t(order + 1);
  for (std::size_t n = 1; n <= order; n += 2) t[n] = e[n];
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw ParameterError("cannot extend a truncated series from order " +
                         std::to_string(order()) + " to " +
                         std::to_string(new_order));
  }
  return EgfSeries(std::vector<Rational>(taylor_.begin(),
                                         taylor_.begin() + new_order + 1));
}

EgfSeries series_from_codims(const CodimSequence& c) {
  if (c.size() == 0) return EgfSeries();
  std::vector<Rational> t(c.size());
  BigInt fact = 1;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    t[n] = make_rational(c[n], fact);
  }
  return EgfSeries(std::move(t));
}

CodimSequence codims_from_series(const EgfSeries& f) {
  std::vector<BigInt> values(f.order() + 1);
  BigInt fact = 1;
  for (std::size_t n = 0; n <= f.order(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    const Rational c = f[n] * fact;
    if (c.get_den() != 1 || c < 0) {
      throw IntegralityError("n!*a_n = " + to_string(c) + " at n=" +
                             std::to_string(n) +
                             " is not a non-negative integer");
    }
    values[n] = c.get_num();
  }
  return CodimSequence(std::move(values));
}

EgfSeries add(const EgfSeries& f, const EgfSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> t(order + 1);
  for (std::size_t n = 0; n <= order; ++n) t[n] = f[n] + g[n];
  return EgfSeries(std::move(t));
}

EgfSeries sub(const EgfSeries& f, const EgfSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> t(order + 1);
  for (std::size_t n = 0; n <= order; ++n) t[n] = f[n] - g[n];
  return EgfSeries(std::move(t));
}

EgfSeries mul(const EgfSeries& f, const EgfSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> t(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (g[j] != 0) t[i + j] += f[i] * g[j];
    }
  }
  return EgfSeries(std::move(t));
}

EgfSeries scale(const EgfSeries& f, const Rational& q) {
  std::vector<Rational> t(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) t[n] = f[n] * q;
  return EgfSeries(std::move(t));
}

EgfSeries pow(const EgfSeries& f, unsigned k) {
  EgfSeries result = EgfSeries::one(f.order());
  EgfSeries base = f;
  // Square-and-multiply; truncation commutes with multiplication.
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

EgfSeries operator+(const EgfSeries& f, const EgfSeries& g) { return add(f, g); }
EgfSeries operator-(const EgfSeries& f, const EgfSeries& g) { return sub(f, g); }
EgfSeries operator*(const EgfSeries& f, const EgfSeries& g) { return mul(f, g); }
EgfSeries operator*(const Rational& q, const EgfSeries& f) { return scale(f, q); }

EgfSeries exp_series(const EgfSeries& f) {
  if (f[0] != 0) {
    throw NonzeroConstantTerm("exp_series needs a zero constant term, got " +
                              to_string(f[0]));
  }
  const std::size_t order = f.order();
  std::vector<Rational> b(order + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] != 0) acc += static_cast<unsigned long>(k) * f[k] * b[n - k];
    }
    b[n] = acc / static_cast<unsigned long>(n);
  }
  return EgfSeries(std::move(b));
}

EgfSeries log_series(const EgfSeries& f) {
  if (f[0] != 1) {
    throw BadConstantTerm("log_series needs constant term 1, got " +
                          to_string(f[0]));
  }
  // g = ln f satisfies f' = g' f, i.e. n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
  const std::size_t order = f.order();
  std::vector<Rational> g(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = static_cast<unsigned long>(n) * f[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (g[k] != 0) acc -= static_cast<unsigned long>(k) * g[k] * f[n - k];
    }
    g[n] = acc / static_cast<unsigned long>(n);
  }
  return EgfSeries(std::move(g));
}

EgfSeries integrate(const EgfSeries& f) {
  std::vector<Rational> t(f.order() + 2);
  for (std::size_t n = 1; n <= f.order() + 1; ++n) {
    t[n] = f[n - 1] / static_cast<unsigned long>(n);
  }
  return EgfSeries(std::move(t));
}

EgfSeries derivative(const EgfSeries& f) {
  if (f.order() == 0) return EgfSeries::zero(0);
  std::vector<Rational> t(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    t[n - 1] = static_cast<unsigned long>(n) * f[n];
  }
  return EgfSeries(std::move(t));
}

DominanceResult coeff_le(const EgfSeries& f, const EgfSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  for (std::size_t n = 0; n <= order; ++n) {
    if (f[n] > g[n]) return {false, n};
  }
  return {};
}

double eval_log_real(const EgfSeries& f, double r) {
  if (!(r > 0)) throw DomainError("eval_log_real needs r > 0");
  const double log_r = std::log(r);
  std::vector<double> terms;
  terms.reserve(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    const int sign = sgn(f[n]);
    if (sign < 0) {
      throw NegativeCoefficient("coefficient " + std::to_string(n) +
                                " is negative");
    }
    if (sign > 0) {
      terms.push_back(log_positive(f[n]) + static_cast<double>(n) * log_r);
    }
  }
  if (terms.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

}  // namespace codim
