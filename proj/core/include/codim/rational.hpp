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

#ifndef CODIM_RATIONAL_HPP
#define CODIM_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace codim {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw numerator/denominator pairs go
// through make_rational, which canonicalizes.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q"; throws ParameterError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt factorial(unsigned long n);

// Natural logarithm of a positive big integer, accurate to double precision
// for any magnitude.
double log_abs(const BigInt& z);

// ln(q) for q > 0, computed as ln(num) - ln(den).
double log_positive(const Rational& q);

}  // namespace codim

#endif  // CODIM_RATIONAL_HPP
