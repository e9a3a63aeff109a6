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

#include "codim/rational.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "codim/errors.hpp"

namespace codim {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw ParameterError("malformed rational: '" + std::string(whole) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw ParameterError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  return make_rational(parse_integer(text.substr(0, slash), text),
                       parse_integer(text.substr(slash + 1), text));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

double log_abs(const BigInt& z) {
  if (z == 0) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(std::fabs(mantissa)) +
         static_cast<double>(exponent) * std::numbers::ln2;
}

double log_positive(const Rational& q) {
  if (q <= 0) throw DomainError("logarithm of a non-positive rational");
  return log_abs(q.get_num()) - log_abs(q.get_den());
}

}  // namespace codim
