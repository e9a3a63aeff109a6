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

#ifndef CODIM_EGF_SERIES_HPP
#define CODIM_EGF_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "codim/rational.hpp"

namespace codim {

// Codimension sequence c_0..c_N. Every entry is non-negative.
class CodimSequence {
 public:
  explicit CodimSequence(std::vector<BigInt> values);

  std::size_t size() const { return values_.size(); }
  const BigInt& operator[](std::size_t n) const { return values_[n]; }
  std::span<const BigInt> values() const { return values_; }

  friend bool operator==(const CodimSequence&, const CodimSequence&) = default;

 private:
  std::vector<BigInt> values_;
};

// Truncated Taylor series a_0 + a_1 z + ... + a_N z^N with exact rational
// coefficients. For a complexity function a_n = c_n / n!.
class EgfSeries {
 public:
  // The zero series of order 0.
  EgfSeries();
  // Throws ParameterError if taylor is empty.
  explicit EgfSeries(std::vector<Rational> taylor);

  static EgfSeries zero(std::size_t order);
  static EgfSeries constant(const Rational& c, std::size_t order);
  static EgfSeries one(std::size_t order) { return constant(1, order); }
  // The series z (zero when order is 0).
  static EgfSeries variable(std::size_t order);
  // a_k z^k truncated at order.
  static EgfSeries monomial(const Rational& a, std::size_t k, std::size_t order);
  static EgfSeries exponential(std::size_t order);  // e^z
  static EgfSeries geometric(std::size_t order);    // 1/(1-z)
  static EgfSeries neg_log_one_minus(std::size_t order);  // -ln(1-z)
  static EgfSeries sinh(std::size_t order);

  std::size_t order() const { return taylor_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return taylor_[n]; }
  std::span<const Rational> taylor() const { return taylor_; }

  // Drops every coefficient above new_order; new_order must not exceed order().
  EgfSeries truncated(std::size_t new_order) const;

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  std::vector<Rational> taylor_;
};

EgfSeries series_from_codims(const CodimSequence& c);
// Throws IntegralityError when some n!*a_n is not a non-negative integer.
CodimSequence codims_from_series(const EgfSeries& f);

// Binary operations truncate to min(f.order(), g.order()).
EgfSeries add(const EgfSeries& f, const EgfSeries& g);
EgfSeries sub(const EgfSeries& f, const EgfSeries& g);
EgfSeries mul(const EgfSeries& f, const EgfSeries& g);
EgfSeries scale(const EgfSeries& f, const Rational& q);
EgfSeries pow(const EgfSeries& f, unsigned k);

EgfSeries operator+(const EgfSeries& f, const EgfSeries& g);
EgfSeries operator-(const EgfSeries& f, const EgfSeries& g);
EgfSeries operator*(const EgfSeries& f, const EgfSeries& g);
EgfSeries operator*(const Rational& q, const EgfSeries& f);

// exp(f) via n b_n = sum_{k=1..n} k a_k b_{n-k}. Requires a_0 == 0, throws
// NonzeroConstantTerm otherwise.
EgfSeries exp_series(const EgfSeries& f);
// Inverse of exp_series. Requires a_0 == 1, throws BadConstantTerm otherwise.
EgfSeries log_series(const EgfSeries& f);

// Antiderivative with zero constant term. The result has order f.order()+1.
EgfSeries integrate(const EgfSeries& f);
// Term-by-term derivative; the result has order max(f.order(), 1) - 1.
EgfSeries derivative(const EgfSeries& f);

struct DominanceResult {
  bool holds = true;
  std::optional<std::size_t> first_violation;

  explicit operator bool() const { return holds; }
};

// f ⪯ g: a_n(f) <= a_n(g) for every n up to the common order.
DominanceResult coeff_le(const EgfSeries& f, const EgfSeries& g);

// ln(sum_{n<=N} a_n r^n) by log-sum-exp in double precision. Throws
// NegativeCoefficient if any a_n < 0 and DomainError if r <= 0. Returns
// -infinity for the zero series.
double eval_log_real(const EgfSeries& f, double r);

}  // namespace codim

#endif  // CODIM_EGF_SERIES_HPP
