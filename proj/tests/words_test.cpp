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

#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "codim/errors.hpp"
#include "codim/words.hpp"

namespace codim {
namespace {

TEST(MultilinearWordTest, RejectsRepeatsAndNonPositiveLetters) {
  EXPECT_THROW(MultilinearWord({1, 2, 1}), ParameterError);
  EXPECT_THROW(MultilinearWord({0, 2}), ParameterError);
  EXPECT_NO_THROW(MultilinearWord({}));
}

TEST(IsRegularTest, Examples) {
  EXPECT_TRUE(is_regular(MultilinearWord{3, 1, 2}));
  EXPECT_FALSE(is_regular(MultilinearWord{1, 3, 2}));
  EXPECT_TRUE(is_regular(MultilinearWord{5}));
  EXPECT_THROW(is_regular(MultilinearWord{}), EmptyWord);
  EXPECT_THROW(is_regular_by_rotation(MultilinearWord{}), EmptyWord);
}

TEST(IsRegularTest, BothCriteriaAgreeOnAllPermutations) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      const MultilinearWord w(p);
      EXPECT_EQ(is_regular_by_rotation(w), is_regular_by_leading_letter(w));
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(IsMIndecomposableTest, Examples) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> sorted(n);
    std::iota(sorted.begin(), sorted.end(), 1);
    EXPECT_TRUE(is_m_indecomposable(MultilinearWord(sorted), 2)) << n;
  }
  EXPECT_FALSE(is_m_indecomposable(MultilinearWord{2, 1}, 2));
  for (unsigned m = 1; m <= 5; ++m) {
    EXPECT_TRUE(is_m_indecomposable(MultilinearWord{}, m));
  }
  // Only the empty word is 1-indecomposable.
  EXPECT_FALSE(is_m_indecomposable(MultilinearWord{4}, 1));
  EXPECT_THROW(is_m_indecomposable_recursive({}, 0), ParameterError);
}

TEST(IsMIndecomposableTest, GapsInLettersAreAllowed) {
  EXPECT_EQ(is_m_indecomposable(MultilinearWord{9, 2, 5}, 2),
            is_m_indecomposable(MultilinearWord{3, 1, 2}, 2));
}

TEST(CountQmTest, Examples) {
  const std::vector<std::uint64_t> bell{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n < bell.size(); ++n) {
    const WordCountReport r = count_Qm(n, 3);
    EXPECT_EQ(r.count_recursive, bell[n]) << n;
    EXPECT_TRUE(r.consistent());
  }
  EXPECT_EQ(count_Qm(0, 1).count_recursive, 1u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(count_Qm(n, 1).count_recursive, 0u);
}

TEST(CountRmTest, Examples) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const WordCountReport r = count_Rm(n, 3);
    EXPECT_EQ(r.count_recursive, 1u) << n;
    EXPECT_TRUE(r.consistent());
  }
  EXPECT_THROW(count_Rm(0, 2), ParameterError);
}

TEST(CountRmTest, ShiftsQm) {
  for (unsigned m = 2; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 7; ++n) {
      EXPECT_EQ(count_Rm(n, m, false).count_recursive,
                count_Qm(n - 1, m - 1, false).count_recursive)
          << n << " " << m;
    }
  }
}

TEST(ConsistencyTest, FlagsDisagreement) {
  WordCountReport r{3, 2, 5, std::uint64_t{5}, BigInt(5)};
  EXPECT_TRUE(r.consistent());
  r.count_series = BigInt(6);
  EXPECT_FALSE(r.consistent());
  r.count_series.reset();
  r.count_naive = 4;
  EXPECT_FALSE(r.consistent());
}

TEST(CountTildeTest, Examples) {
  for (std::size_t n = 0; n <= 7; ++n) {
    EXPECT_EQ(count_tilde(n, 2, TildeKind::Q).count_recursive, 1u) << n;
  }
  EXPECT_EQ(count_tilde(2, 3, TildeKind::Q).count_recursive, 3u);
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(count_tilde(n, 3, TildeKind::R).count_recursive, n) << n;
  }
  EXPECT_EQ(count_tilde(0, 3, TildeKind::R).count_recursive, 0u);
  EXPECT_EQ(count_tilde(3, 1, TildeKind::Q).count_recursive, 0u);
}

TEST(CountTildeTest, EveryObjectIsAPermutationWord) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      for (TildeKind kind : {TildeKind::Q, TildeKind::R}) {
        EXPECT_TRUE(count_tilde(n, m, kind).consistent()) << n << " " << m;
      }
    }
  }
}

TEST(CountTildeTest, DominatesIndecomposableCounts) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      EXPECT_LE(count_Qm(n, m, false).count_recursive,
                count_tilde(n, m, TildeKind::Q).count_recursive);
      EXPECT_LE(count_Rm(n, m, false).count_recursive,
                count_tilde(n, m, TildeKind::R).count_recursive);
    }
  }
}

TEST(CountKuzminTest, Examples) {
  EXPECT_EQ(count_kuzmin(4), 2u);
  EXPECT_EQ(count_kuzmin(5), 5u);
  EXPECT_EQ(count_kuzmin(8), 20u);
  for (std::size_t n = 4; n <= 10; ++n) EXPECT_EQ(count_kuzmin(n), n * (n - 3) / 2);
  EXPECT_THROW(count_kuzmin(3), DegreeTooSmall);
}

TEST(CountCbmSecondDerivedTest, Examples) {
  EXPECT_EQ(count_cbm_second_derived(4, false), 3u);
  EXPECT_EQ(count_cbm_second_derived(4, true), 3u);
  EXPECT_EQ(count_cbm_second_derived(5, false), 5u);
  EXPECT_EQ(count_cbm_second_derived(5, true), 6u);
  EXPECT_EQ(count_cbm_second_derived(6, false), 10u);
  for (std::size_t n = 4; n <= 9; ++n) {
    EXPECT_EQ(count_cbm_second_derived(n, true), (n - 1) * (n - 2) / 2);
  }
  EXPECT_THROW(count_cbm_second_derived(2, true), DegreeTooSmall);
}

TEST(CountFreePoissonTest, Examples) {
  EXPECT_EQ(count_free_poisson_multilinear(1), 1u);
  EXPECT_EQ(count_free_poisson_multilinear(3), 6u);
  EXPECT_EQ(count_free_poisson_multilinear(8), 40320u);
  std::uint64_t fact = 1;
  for (std::size_t n = 1; n <= 12; ++n) {
    fact *= n;
    EXPECT_EQ(count_free_poisson_multilinear(n), fact) << n;
  }
}

TEST(CountRegularWordsTest, FreeLieDimensions) {
  std::uint64_t fact = 1;
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(count_regular_words(n), fact) << n;  // (n-1)!
    fact *= n;
  }
}

}  // namespace
}  // namespace codim
