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

#ifndef CODIM_WORDS_HPP
#define CODIM_WORDS_HPP

// Brute-force enumeration on multilinear words. Nothing here depends on the
// series engine; the counts serve as independent oracles for it.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "codim/rational.hpp"

namespace codim {

// A word in pairwise distinct letters x_i, i >= 1, stored by index. The
// empty word is allowed and stands for the unit 1.
class MultilinearWord {
 public:
  using Letter = int;

  MultilinearWord() = default;
  // Throws ParameterError on non-positive or repeated letters.
  explicit MultilinearWord(std::vector<Letter> letters);
  MultilinearWord(std::initializer_list<Letter> letters)
      : MultilinearWord(std::vector<Letter>(letters)) {}

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Lexicographic comparison on letter sequences.
  friend auto operator<=>(const MultilinearWord&, const MultilinearWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Caps used by the CLI unless --force is given.
inline constexpr std::size_t kPermutationCap = 8;
inline constexpr std::size_t kKuzminCap = 10;
inline constexpr std::size_t kTildeCap = 9;
inline constexpr std::size_t kPartitionCap = 12;

// w > ba for every split w = ab with a, b nonempty. Throws EmptyWord.
bool is_regular_by_rotation(const MultilinearWord& w);
// w starts with its maximal letter. Throws EmptyWord.
bool is_regular_by_leading_letter(const MultilinearWord& w);
// Both tests above; throws std::logic_error if they ever disagree.
bool is_regular(const MultilinearWord& w);

// Membership in Q_m by splitting at the maximal letter: w'x w'' lies in Q_m
// iff w' lies in Q_m and w'' in Q_{m-1}; Q_1 = {1}. Requires m >= 1.
bool is_m_indecomposable_recursive(std::span<const MultilinearWord::Letter> w,
                                   unsigned m);
// Membership in Q_m by searching every segmentation a w_m ... w_1 b with
// regular w_i whose leading letters strictly decrease. Requires m >= 1.
bool is_m_indecomposable_naive(std::span<const MultilinearWord::Letter> w,
                               unsigned m);
// Both tests; throws std::logic_error if they disagree.
bool is_m_indecomposable(const MultilinearWord& w, unsigned m);

struct WordCountReport {
  std::size_t n = 0;
  unsigned m = 0;
  std::uint64_t count_recursive = 0;
  std::optional<std::uint64_t> count_naive;
  std::optional<BigInt> count_series;

  // All present counts agree.
  bool consistent() const;
};

// Scans all n! permutation words of x_1..x_n. The naive count is filled only
// when `with_naive` is set.
WordCountReport count_Qm(std::size_t n, unsigned m, bool with_naive = true);
// As count_Qm, restricted to regular words. Requires n >= 1.
WordCountReport count_Rm(std::size_t n, unsigned m, bool with_naive = true);

enum class TildeKind { Q, R };

// Counts the formal objects of degree n generated by
//   R~_m = { x w0 : w0 in Q~_{m-1} },
//   Q~_m = { v_1 ... v_s : v_i in R~_m, v_1 < ... < v_s },
// with R~_1 empty and Q~_1 = {1}, by explicit construction on x_1..x_n.
// count_naive holds the number of constructed objects whose word is a
// permutation of x_1..x_n (it must equal count_recursive).
WordCountReport count_tilde(std::size_t n, unsigned m, TildeKind which);

// Permutations (i_1..i_n) with i_1 > i_2, i_3 > i_4, i_1 >= i_3 and
// i_4 <= i_2 <= i_5 <= ... <= i_n. Throws DegreeTooSmall for n < 4.
std::uint64_t count_kuzmin(std::size_t n);

// Rank of the multilinear degree-n part of the second derived algebra of the
// free centre-by-metabelian Lie algebra: Kuzmin elements plus one extra
// generator in even degree, or in odd degree when the characteristic is 2.
// Throws DegreeTooSmall for n < 4.
std::uint64_t count_cbm_second_derived(std::size_t n, bool char_two);

// Sum over set partitions of {1..n} of prod_B (|B|-1)!.
std::uint64_t count_free_poisson_multilinear(std::size_t n);

// Number of regular permutation words of degree n, i.e. c_n of the free Lie
// algebra.
std::uint64_t count_regular_words(std::size_t n);

}  // namespace codim

#endif  // CODIM_WORDS_HPP
