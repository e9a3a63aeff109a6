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

#ifndef CODIM_VARIETY_HPP
#define CODIM_VARIETY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "codim/egf_series.hpp"
#include "codim/rational.hpp"

namespace codim {

namespace variety {

struct Assoc {};
struct Comm {};
struct Lie {};
struct Poisson {};
struct NilpotentLie {
  unsigned s;
};
struct Metabelian {};
// Lie algebras with [[[X1,X2],[X3,X4]],X5] = 0 over a field of
// characteristic 2 (char_two) or different from 2.
struct CentreByMetabelian {
  bool char_two;
};
// Poisson algebras with {X1,X2}...{X_{2s-1},X_{2s}} = 0.
struct MixedW {
  unsigned s;
};
struct TowerQ {
  unsigned m;
};
struct TowerR {
  unsigned m;
};
struct IndecompQ {
  unsigned m;
};
struct IndecompR {
  unsigned m;
};

}  // namespace variety

using VarietySpec =
    std::variant<variety::Assoc, variety::Comm, variety::Lie, variety::Poisson,
                 variety::NilpotentLie, variety::Metabelian,
                 variety::CentreByMetabelian, variety::MixedW, variety::TowerQ,
                 variety::TowerR, variety::IndecompQ, variety::IndecompR>;

// Throws ParameterError when a parameter is out of range.
void validate(const VarietySpec& spec);

// Accepts assoc, comm, lie, poisson, nilp:<s>, metab, cbm:char2, cbm:char0,
// w:<s>, tower-q:<m>, tower-r:<m>, indecomp-q:<m>, indecomp-r:<m>.
// Throws ParameterError for unknown names and out-of-range parameters.
VarietySpec parse_variety(std::string_view name);
std::string variety_name(const VarietySpec& spec);

// Exact complexity function of the variety truncated at `order`.
EgfSeries complexity(const VarietySpec& spec, std::size_t order);

// h(z) = -z - ln(1-z), the generating function of the commutator part of the
// free Lie algebra.
EgfSeries commutator_series(std::size_t order);

// 1/(1-z) - e^z * sum_{k>=s} h(z)^k / k!, the inner sum stopped once 2k > order.
EgfSeries tws_alternate_form(unsigned s, std::size_t order);

// (z^2/2) e^z + z - z^3/6: dominates every centre-by-metabelian variety.
EgfSeries centre_by_metabelian_bound(std::size_t order);

// r~_m, the bound for Lie varieties with an identity of degree m (m >= 2).
EgfSeries tbound_lie(unsigned m, std::size_t order);
// q~_m = exp(r~_m), the bound for Poisson varieties with a Lie identity of
// degree m (m >= 2).
EgfSeries tbound_poisson(unsigned m, std::size_t order);

// floor(e * k!), evaluated from exact partial sums of sum_j k!/j! with a
// rational bound on the tail.
BigInt floor_e_factorial(unsigned long k);

struct RatseevRow {
  std::size_t n;
  BigInt codim;
  BigInt bound;  // floor(e (n-1)!) - 1
  bool pass;
};

// c_n(W_s) >= floor(e (n-1)!) - 1 for 1 <= n <= n_max.
std::vector<RatseevRow> ratseev_check(unsigned s, std::size_t n_max);

}  // namespace codim

#endif  // CODIM_VARIETY_HPP
