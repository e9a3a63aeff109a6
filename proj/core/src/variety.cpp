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

#include "codim/variety.hpp"

#include <charconv>
#include <string>
#include <type_traits>

#include "codim/errors.hpp"

namespace codim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// q_m and r_m of the m-Lie indecomposable words.
EgfSeries indecomp_r(unsigned m, std::size_t order);

EgfSeries indecomp_q(unsigned m, std::size_t order) {
  if (m == 1) return EgfSeries::one(order);
  return exp_series(indecomp_r(m, order));
}

EgfSeries indecomp_r(unsigned m, std::size_t order) {
  if (m == 1 || order == 0) return EgfSeries::zero(order);
  return integrate(indecomp_q(m - 1, order - 1));
}

EgfSeries tower_r(unsigned m, std::size_t order);

EgfSeries tower_q(unsigned m, std::size_t order) {
  if (m == 1) return EgfSeries::one(order);
  return exp_series(tower_r(m, order));
}

EgfSeries tower_r(unsigned m, std::size_t order) {
  if (m == 1) return EgfSeries::zero(order);
  return mul(EgfSeries::variable(order), tower_q(m - 1, order));
}

// 1 + z + e^z (z - 1)
EgfSeries metabelian(std::size_t order) {
  const EgfSeries z = EgfSeries::variable(order);
  const EgfSeries one = EgfSeries::one(order);
  return one + z + EgfSeries::exponential(order) * (z - one);
}

EgfSeries mixed_w(unsigned s, std::size_t order) {
  const EgfSeries h = commutator_series(order);
  EgfSeries inner = EgfSeries::one(order);
  EgfSeries power = EgfSeries::one(order);
  Rational inv_fact = 1;
  for (unsigned k = 1; k < s; ++k) {
    power = mul(power, h);
    inv_fact /= k;
    inner = inner + inv_fact * power;
  }
  return EgfSeries::exponential(order) * inner;
}

unsigned parse_parameter(std::string_view text, std::string_view name) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParameterError("bad parameter in variety name '" + std::string(name) +
                         "'");
  }
  return value;
}

}  // namespace

void validate(const VarietySpec& spec) {
  std::visit(
      Overloaded{
          [](const variety::NilpotentLie& v) {
            require(v.s >= 1, "nilp:<s> needs s >= 1");
          },
          [](const variety::MixedW& v) {
            require(v.s >= 2, "w:<s> needs s >= 2");
          },
          [](const variety::TowerQ& v) {
            require(v.m >= 1, "tower-q:<m> needs m >= 1");
          },
          [](const variety::TowerR& v) {
            require(v.m >= 1, "tower-r:<m> needs m >= 1");
          },
          [](const variety::IndecompQ& v) {
            require(v.m >= 1, "indecomp-q:<m> needs m >= 1");
          },
          [](const variety::IndecompR& v) {
            require(v.m >= 1, "indecomp-r:<m> needs m >= 1");
          },
          [](const auto&) {},
      },
      spec);
}

VarietySpec parse_variety(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const std::string_view arg = has_arg ? name.substr(colon + 1) : std::string_view{};

  VarietySpec spec;
  if (!has_arg && head == "assoc") {
    spec = variety::Assoc{};
  } else if (!has_arg && head == "comm") {
    spec = variety::Comm{};
  } else if (!has_arg && head == "lie") {
    spec = variety::Lie{};
  } else if (!has_arg && head == "poisson") {
    spec = variety::Poisson{};
  } else if (!has_arg && head == "metab") {
    spec = variety::Metabelian{};
  } else if (has_arg && head == "cbm" && arg == "char2") {
    spec = variety::CentreByMetabelian{true};
  } else if (has_arg && head == "cbm" && arg == "char0") {
    spec = variety::CentreByMetabelian{false};
  } else if (has_arg && head == "nilp") {
    spec = variety::NilpotentLie{parse_parameter(arg, name)};
  } else if (has_arg && head == "w") {
    spec = variety::MixedW{parse_parameter(arg, name)};
  } else if (has_arg && head == "tower-q") {
    spec = variety::TowerQ{parse_parameter(arg, name)};
  } else if (has_arg && head == "tower-r") {
    spec = variety::TowerR{parse_parameter(arg, name)};
  } else if (has_arg && head == "indecomp-q") {
    spec = variety::IndecompQ{parse_parameter(arg, name)};
  } else if (has_arg && head == "indecomp-r") {
    spec = variety::IndecompR{parse_parameter(arg, name)};
  } else {
    throw ParameterError("unknown variety '" + std::string(name) + "'");
  }
  validate(spec);
  return spec;
}

std::string variety_name(const VarietySpec& spec) {
  return std::visit(
      Overloaded{
          [](const variety::Assoc&) -> std::string { return "assoc"; },
          [](const variety::Comm&) -> std::string { return "comm"; },
          [](const variety::Lie&) -> std::string { return "lie"; },
          [](const variety::Poisson&) -> std::string { return "poisson"; },
          [](const variety::Metabelian&) -> std::string { return "metab"; },
          [](const variety::NilpotentLie& v) {
            return "nilp:" + std::to_string(v.s);
          },
          [](const variety::CentreByMetabelian& v) -> std::string {
            return v.char_two ? "cbm:char2" : "cbm:char0";
          },
          [](const variety::MixedW& v) { return "w:" + std::to_string(v.s); },
          [](const variety::TowerQ& v) {
            return "tower-q:" + std::to_string(v.m);
          },
          [](const variety::TowerR& v) {
            return "tower-r:" + std::to_string(v.m);
          },
          [](const variety::IndecompQ& v) {
            return "indecomp-q:" + std::to_string(v.m);
          },
          [](const variety::IndecompR& v) {
            return "indecomp-r:" + std::to_string(v.m);
          },
      },
      spec);
}

EgfSeries commutator_series(std::size_t order) {
  return EgfSeries::neg_log_one_minus(order) - EgfSeries::variable(order);
}

EgfSeries centre_by_metabelian_bound(std::size_t order) {
  const EgfSeries half_z2 = EgfSeries::monomial(Rational(1, 2), 2, order);
  return half_z2 * EgfSeries::exponential(order) + EgfSeries::variable(order) -
         EgfSeries::monomial(Rational(1, 6), 3, order);
}

EgfSeries complexity(const VarietySpec& spec, std::size_t order) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&](const variety::Assoc&) { return EgfSeries::geometric(order); },
          [&](const variety::Comm&) { return EgfSeries::exponential(order); },
          [&](const variety::Lie&) {
            return EgfSeries::neg_log_one_minus(order);
          },
          [&](const variety::Poisson&) { return EgfSeries::geometric(order); },
          [&](const variety::NilpotentLie& v) {
            std::vector<Rational> t(order + 1);
            for (std::size_t n = 1; n <= std::min<std::size_t>(v.s, order); ++n) {
              t[n] = Rational(1, static_cast<unsigned long>(n));
            }
            return EgfSeries(std::move(t));
          },
          [&](const variety::Metabelian&) { return metabelian(order); },
          [&](const variety::CentreByMetabelian& v) {
            if (v.char_two) return centre_by_metabelian_bound(order);
            const EgfSeries half_z2 = EgfSeries::monomial(Rational(1, 2), 2, order);
            return half_z2 * EgfSeries::exponential(order) +
                   EgfSeries::monomial(2, 1, order) - EgfSeries::sinh(order);
          },
          [&](const variety::MixedW& v) { return mixed_w(v.s, order); },
          [&](const variety::TowerQ& v) { return tower_q(v.m, order); },
          [&](const variety::TowerR& v) { return tower_r(v.m, order); },
          [&](const variety::IndecompQ& v) { return indecomp_q(v.m, order); },
          [&](const variety::IndecompR& v) { return indecomp_r(v.m, order); },
      },
      spec);
}

EgfSeries tws_alternate_form(unsigned s, std::size_t order) {
  require(s >= 2, "tws_alternate_form needs s >= 2");
  const EgfSeries h = commutator_series(order);
  // h has valuation 2, so h^k vanishes below degree 2k.
  EgfSeries tail = EgfSeries::zero(order);
  EgfSeries power = pow(h, s);
  Rational inv_fact = make_rational(BigInt(1), factorial(s));
  for (unsigned long k = s; 2 * k <= order; ++k) {
    tail = tail + inv_fact * power;
    power = mul(power, h);
    inv_fact /= k + 1;
  }
  return EgfSeries::geometric(order) - EgfSeries::exponential(order) * tail;
}

EgfSeries tbound_lie(unsigned m, std::size_t order) {
  require(m >= 2, "tbound_lie needs m >= 2");
  return complexity(variety::TowerR{m}, order);
}

EgfSeries tbound_poisson(unsigned m, std::size_t order) {
  require(m >= 2, "tbound_poisson needs m >= 2");
  return complexity(variety::TowerQ{m}, order);
}

BigInt floor_e_factorial(unsigned long k) {
  // e k! = sum_{j<=k} k!/j! + F, where the first sum is an integer and
  // F = sum_{j>k} k!/j! is refined until its floor is pinned.
  const BigInt k_fact = factorial(k);
  BigInt whole;
  for (unsigned long j = 0; j <= k; ++j) whole += k_fact / factorial(j);

  Rational lower;
  Rational term = 1;
  for (unsigned long j = k + 1;; ++j) {
    term /= j;
    lower += term;
    // sum_{i>j} k!/i! < term/(j+1) * (1 + 1/(j+2) + 1/(j+2)^2 + ...)
    const Rational upper = lower + term / (j + 1) * make_rational(static_cast<long>(j + 2), static_cast<long>(j + 1));
    BigInt lower_floor, upper_floor;
    mpz_fdiv_q(lower_floor.get_mpz_t(), lower.get_num_mpz_t(),
               lower.get_den_mpz_t());
    mpz_fdiv_q(upper_floor.get_mpz_t(), upper.get_num_mpz_t(),
               upper.get_den_mpz_t());
    if (lower_floor == upper_floor) return whole + lower_floor;
  }
}

std::vector<RatseevRow> ratseev_check(unsigned s, std::size_t n_max) {
  require(s >= 2, "ratseev_check needs s >= 2");
  std::vector<RatseevRow> rows;
  if (n_max == 0) return rows;
  const CodimSequence c = codims_from_series(complexity(variety::MixedW{s}, n_max));
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt bound = floor_e_factorial(n - 1) - 1;
    const bool pass = c[n] >= bound;
    rows.push_back({n, c[n], std::move(bound), pass});
  }
  return rows;
}

}  // namespace codim
