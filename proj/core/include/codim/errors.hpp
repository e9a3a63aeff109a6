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

#ifndef CODIM_ERRORS_HPP
#define CODIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codim {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n!*a_n is not a non-negative integer for some n.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class BadConstantTerm : public Error {
 public:
  using Error::Error;
};

class NegativeCoefficient : public Error {
 public:
  using Error::Error;
};

// Raised by real-valued diagnostics outside their domain (iterated logs of
// non-positive values, r <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class EmptyWord : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace codim

#endif  // CODIM_ERRORS_HPP
