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

// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Every check is exact except the float diagnostics of criterion 10.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "codim/asymptotics.hpp"
#include "codim/egf_series.hpp"
#include "codim/variety.hpp"
#include "codim/words.hpp"

namespace {

using namespace codim;

// Collects the first failure message of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<void(Check&)> body;
};

Rational R(long p, long q) { return make_rational(p, q); }

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::string at(std::size_t n, unsigned m) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

void golden_mixed_w(Check& c) {
  struct Golden {
    unsigned s;
    std::size_t n;
    Rational a;
  };
  const std::vector<Golden> golden{
      {2, 4, R(7, 8)},          {2, 5, R(17, 24)},         {2, 6, R(41, 72)},
      {2, 7, R(169, 360)},      {2, 8, R(51, 128)},        {2, 9, R(25133, 72576)},
      {2, 10, R(556037, 1814400)}, {3, 6, R(47, 48)},      {3, 7, R(15, 16)},
      {3, 8, R(1021, 1152)},    {3, 9, R(43249, 51840)},   {3, 10, R(509, 648)},
      {4, 8, R(383, 384)},      {4, 9, R(1141, 1152)},     {4, 10, R(5641, 5760)},
      {5, 10, R(3839, 3840)}};
  for (const Golden& g : golden) {
    const EgfSeries w = complexity(variety::MixedW{g.s}, 10);
    c.expect(w[g.n] == g.a, "W_" + std::to_string(g.s) + " a_" + std::to_string(g.n) +
                                " = " + to_string(w[g.n]) + ", expected " + to_string(g.a));
  }
}

void tws_forms_agree(Check& c) {
  for (unsigned s = 2; s <= 5; ++s) {
    const EgfSeries first = complexity(variety::MixedW{s}, 40);
    const EgfSeries second = tws_alternate_form(s, 40);
    for (std::size_t n = 0; n <= 40; ++n) {
      c.expect(first[n] == second[n], "s=" + std::to_string(s) + " n=" + std::to_string(n));
    }
  }
}

void ratseev(Check& c) {
  for (unsigned s : {2u, 3u}) {
    for (const RatseevRow& row : ratseev_check(s, 25)) {
      c.expect(row.pass, "s=" + std::to_string(s) + " n=" + std::to_string(row.n) +
                             ": " + to_string(row.codim) + " < " + to_string(row.bound));
    }
  }
}

void indecomposable_oracle(Check& c) {
  for (unsigned m = 1; m <= 5; ++m) {
    const CodimSequence q = codims_from_series(complexity(variety::IndecompQ{m}, 7));
    const CodimSequence r = codims_from_series(complexity(variety::IndecompR{m}, 7));
    for (std::size_t n = 0; n <= 7; ++n) {
      const WordCountReport qr = count_Qm(n, m);
      c.expect(big(qr.count_recursive) == q[n], "Q " + at(n, m) + " vs series");
      c.expect(qr.count_naive == qr.count_recursive, "Q naive " + at(n, m));
      if (n == 0) continue;
      const WordCountReport rr = count_Rm(n, m);
      c.expect(big(rr.count_recursive) == r[n], "R " + at(n, m) + " vs series");
      c.expect(rr.count_naive == rr.count_recursive, "R naive " + at(n, m));
      if (m >= 2) {
        c.expect(rr.count_recursive == count_Qm(n - 1, m - 1, false).count_recursive,
                 "R shift " + at(n, m));
      }
    }
  }
  const std::vector<std::uint64_t> bell{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n < bell.size(); ++n) {
    c.expect(count_Qm(n, 3, false).count_recursive == bell[n], "Bell " + std::to_string(n));
  }
}

void tilde_oracle(Check& c) {
  for (unsigned m = 1; m <= 4; ++m) {
    const CodimSequence q = codims_from_series(complexity(variety::TowerQ{m}, 7));
    const CodimSequence r = codims_from_series(complexity(variety::TowerR{m}, 7));
    for (std::size_t n = 0; n <= 7; ++n) {
      const WordCountReport qr = count_tilde(n, m, TildeKind::Q);
      const WordCountReport rr = count_tilde(n, m, TildeKind::R);
      c.expect(qr.consistent() && big(qr.count_recursive) == q[n], "Q~ " + at(n, m));
      c.expect(rr.consistent() && big(rr.count_recursive) == r[n], "R~ " + at(n, m));
    }
  }
  const CodimSequence r3 = codims_from_series(complexity(variety::TowerR{3}, 7));
  const CodimSequence q2 = codims_from_series(complexity(variety::TowerQ{2}, 7));
  for (std::size_t n = 0; n <= 7; ++n) {
    c.expect(r3[n] == big(n), "TowerR(3) c_" + std::to_string(n));
    c.expect(q2[n] == 1, "TowerQ(2) c_" + std::to_string(n));
  }
}

void kuzmin_and_cbm(Check& c) {
  for (std::size_t n = 4; n <= 9; ++n) {
    c.expect(count_kuzmin(n) == n * (n - 3) / 2, "kuzmin n=" + std::to_string(n));
  }
  c.expect(count_kuzmin(4) == 2, "kuzmin(4)");
  c.expect(count_kuzmin(5) == 5, "kuzmin(5)");
  const CodimSequence c0 =
      codims_from_series(complexity(variety::CentreByMetabelian{false}, 9));
  const CodimSequence c2 =
      codims_from_series(complexity(variety::CentreByMetabelian{true}, 9));
  c.expect(c0[4] == 6 && c0[5] == 9, "char0 c_4, c_5");
  c.expect(c2[5] == 10, "char2 c_5");
  const CodimSequence metab = codims_from_series(complexity(variety::Metabelian{}, 9));
  for (std::size_t n = 4; n <= 9; ++n) {
    c.expect(metab[n] == big(n - 1), "metabelian c_" + std::to_string(n));
    c.expect(c0[n] == big(n - 1 + count_cbm_second_derived(n, false)),
             "char0 n=" + std::to_string(n));
    c.expect(c2[n] == big(n - 1 + count_cbm_second_derived(n, true)),
             "char2 n=" + std::to_string(n));
  }
}

void free_poisson(Check& c) {
  std::uint64_t fact = 1;
  for (std::size_t n = 1; n <= 12; ++n) {
    fact *= n;
    c.expect(count_free_poisson_multilinear(n) == fact, "n=" + std::to_string(n));
  }
  c.expect(exp_series(EgfSeries::neg_log_one_minus(50)) == EgfSeries::geometric(50),
           "exp(-ln(1-z)) != 1/(1-z)");
}

void expect_le(Check& c, const EgfSeries& f, const EgfSeries& g, const std::string& what) {
  const DominanceResult d = coeff_le(f, g);
  c.expect(d.holds, what + (d.first_violation
                                ? " fails at n=" + std::to_string(*d.first_violation)
                                : std::string()));
}

void coefficientwise_bounds(Check& c) {
  const std::size_t order = 40;
  expect_le(c, complexity(variety::Metabelian{}, order), tbound_lie(4, order), "metab <= r~_4");
  for (bool two : {false, true}) {
    expect_le(c, complexity(variety::CentreByMetabelian{two}, order), tbound_lie(5, order),
              std::string("cbm ") + (two ? "char2" : "char0") + " <= r~_5");
  }
  for (unsigned s = 1; s <= 3; ++s) {
    expect_le(c, complexity(variety::NilpotentLie{s}, order), tbound_lie(s + 2, order),
              "nilp:" + std::to_string(s) + " <= r~_" + std::to_string(s + 2));
  }
  for (unsigned m = 1; m <= 5; ++m) {
    expect_le(c, complexity(variety::IndecompQ{m}, order),
              complexity(variety::TowerQ{m}, order), "q_" + std::to_string(m) + " <= q~");
    expect_le(c, complexity(variety::IndecompR{m}, order),
              complexity(variety::TowerR{m}, order), "r_" + std::to_string(m) + " <= r~");
  }
}

void centre_by_metabelian_dominance(Check& c) {
  const std::size_t order = 50;
  const EgfSeries bound = centre_by_metabelian_bound(order);
  const EgfSeries c0 = complexity(variety::CentreByMetabelian{false}, order);
  const EgfSeries c2 = complexity(variety::CentreByMetabelian{true}, order);
  expect_le(c, c0, bound, "char0 <= bound");
  expect_le(c, c2, bound, "char2 <= bound");
  expect_le(c, c0, c2, "char0 <= char2");
}

void growth_diagnostics(Check& c) {
  const double tol = 1e-9;
  const double at20 = tower_growth_ratio(3, 20.0);
  c.expect(at20 > 1.0 && at20 < 1.16, "ratio(3,20) outside (1, 1.16)");
  c.expect(std::fabs(at20 - (20.0 + std::log(20.0)) / 20.0) < tol,
           "ratio(3,20) differs from (20 + ln 20)/20");
  const double at40 = tower_growth_ratio(3, 40.0);
  const double at80 = tower_growth_ratio(3, 80.0);
  c.expect(at40 < at20 && at80 < at40, "ratio(3,r) not decreasing on 20, 40, 80");
  for (double r : {20.0, 40.0, 80.0}) {
    c.expect(tower_growth_ratio(2, r) == 1.0, "ratio(2,r) != 1");
  }

  const GrowthDiagnostics tower = sher_diagnostic(tbound_poisson(3, 200), 1.0, 3, 100, 200);
  c.expect(tower.samples.size() == 101, "q~_3 window incomplete");
  for (std::size_t i = 1; i < tower.samples.size(); ++i) {
    c.expect(tower.samples[i].value < tower.samples[i - 1].value,
             "q~_3 s_n not decreasing at n=" + std::to_string(tower.samples[i].n));
  }
  const double last = tower.samples.back().value;
  c.expect(tower.samples.back().n == 200 && last > 1.0 && last < 3.0,
           "s_200 outside (1, 3)");

  const GrowthDiagnostics e = sher_diagnostic(EgfSeries::exponential(200), 1.0, 3, 50, 200);
  for (const SherSample& s : e.samples) {
    c.expect(s.value < 0.5, "exp(z) s_" + std::to_string(s.n) + " >= 0.5");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden W_s coefficients", 1, golden_mixed_w},
      {2, "both W_s closed forms agree to order 40", 5, tws_forms_agree},
      {3, "c_n(W_s) >= floor(e (n-1)!) - 1, n <= 25", 5, ratseev},
      {4, "Q_m / R_m brute force equals recurrence series", 60, indecomposable_oracle},
      {5, "tilde towers brute force equals closed forms", 60, tilde_oracle},
      {6, "Kuzmin counts and centre-by-metabelian codimensions", 30, kuzmin_and_cbm},
      {7, "free Poisson basis counts and exp(-ln(1-z))", 10, free_poisson},
      {8, "coefficientwise Lie and tower bounds to order 40", 10, coefficientwise_bounds},
      {9, "centre-by-metabelian dominance to order 50", 1, centre_by_metabelian_dominance},
      {10, "growth diagnostics", 60, growth_diagnostics},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time_note;
    time_note.precision(3);
    time_note << std::fixed << seconds << " s";
    if (seconds > criterion.time_limit_s) {
      check.expect(false, "took " + time_note.str() + ", limit " +
                              std::to_string(criterion.time_limit_s) + " s");
    }
    std::printf("[%s] AC%-2d %s (%s)%s%s\n", check.ok() ? "PASS" : "FAIL", criterion.id,
                criterion.title.c_str(), time_note.str().c_str(),
                check.ok() ? "" : ": ", check.failure().c_str());
    if (!check.ok()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
