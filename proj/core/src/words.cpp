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

#include "codim/words.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "codim/errors.hpp"

namespace codim {

using Letter = MultilinearWord::Letter;
using Letters = std::span<const Letter>;

MultilinearWord::MultilinearWord(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  std::unordered_set<Letter> seen;
  for (Letter x : letters_) {
    if (x <= 0) throw ParameterError("letters must be positive integers");
    if (!seen.insert(x).second) {
      throw ParameterError("letter " + std::to_string(x) + " repeats");
    }
  }
}

bool is_regular_by_rotation(const MultilinearWord& w) {
  if (w.empty()) throw EmptyWord("regularity is undefined for the empty word");
  const Letters letters = w.letters();
  std::vector<Letter> rotated(letters.size());
  for (std::size_t cut = 1; cut < letters.size(); ++cut) {
    // w = ab with |a| = cut; compare w against ba.
    auto out = std::copy(letters.begin() + cut, letters.end(), rotated.begin());
    std::copy(letters.begin(), letters.begin() + cut, out);
    if (!std::lexicographical_compare(rotated.begin(), rotated.end(),
                                      letters.begin(), letters.end())) {
      return false;
    }
  }
  return true;
}

bool is_regular_by_leading_letter(const MultilinearWord& w) {
  if (w.empty()) throw EmptyWord("regularity is undefined for the empty word");
  return w[0] == *std::max_element(w.letters().begin(), w.letters().end());
}

bool is_regular(const MultilinearWord& w) {
  const bool by_rotation = is_regular_by_rotation(w);
  if (by_rotation != is_regular_by_leading_letter(w)) {
    throw std::logic_error("regularity tests disagree");
  }
  return by_rotation;
}

bool is_m_indecomposable_recursive(Letters w, unsigned m) {
  if (m == 0) throw ParameterError("m must be at least 1");
  if (w.empty()) return true;
  if (m == 1) return false;
  const auto top = std::max_element(w.begin(), w.end());
  const auto split = static_cast<std::size_t>(top - w.begin());
  return is_m_indecomposable_recursive(w.first(split), m) &&
         is_m_indecomposable_recursive(w.subspan(split + 1), m - 1);
}

namespace {

// Is segment [begin, end) regular, i.e. does it start with its maximal letter?
bool regular_segment(Letters w, std::size_t begin, std::size_t end) {
  return *std::max_element(w.begin() + begin, w.begin() + end) == w[begin];
}

// Can w[pos..] be continued by `remaining` adjacent regular blocks whose
// leading letters stay strictly below `bound`?
bool extends_chain(Letters w, std::size_t pos, unsigned remaining, Letter bound) {
  if (remaining == 0) return true;
  if (pos >= w.size() || w[pos] >= bound) return false;
  for (std::size_t end = pos + 1; end <= w.size(); ++end) {
    if (regular_segment(w, pos, end) &&
        extends_chain(w, end, remaining - 1, w[pos])) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_m_indecomposable_naive(Letters w, unsigned m) {
  if (m == 0) throw ParameterError("m must be at least 1");
  for (std::size_t start = 0; start < w.size(); ++start) {
    if (extends_chain(w, start, m, std::numeric_limits<Letter>::max())) {
      return false;
    }
  }
  return true;
}

bool is_m_indecomposable(const MultilinearWord& w, unsigned m) {
  const bool recursive = is_m_indecomposable_recursive(w.letters(), m);
  if (recursive != is_m_indecomposable_naive(w.letters(), m)) {
    throw std::logic_error("indecomposability tests disagree");
  }
  return recursive;
}

bool WordCountReport::consistent() const {
  if (count_naive && *count_naive != count_recursive) return false;
  if (count_series && *count_series != BigInt(static_cast<unsigned long>(count_recursive))) {
    return false;
  }
  return true;
}

namespace {

template <class Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
  std::vector<Letter> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    visit(Letters(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

WordCountReport scan_indecomposable(std::size_t n, unsigned m, bool regular_only,
                                    bool with_naive) {
  if (m == 0) throw ParameterError("m must be at least 1");
  WordCountReport report{n, m, 0, std::nullopt, std::nullopt};
  std::uint64_t naive = 0;
  for_each_permutation(n, [&](Letters w) {
    if (regular_only && !(w.size() > 0 && regular_segment(w, 0, w.size()))) return;
    if (is_m_indecomposable_recursive(w, m)) ++report.count_recursive;
    if (with_naive && is_m_indecomposable_naive(w, m)) ++naive;
  });
  if (with_naive) report.count_naive = naive;
  return report;
}

}  // namespace

WordCountReport count_Qm(std::size_t n, unsigned m, bool with_naive) {
  return scan_indecomposable(n, m, false, with_naive);
}

WordCountReport count_Rm(std::size_t n, unsigned m, bool with_naive) {
  if (n == 0) throw ParameterError("R_m has no words of degree 0");
  return scan_indecomposable(n, m, true, with_naive);
}

namespace {

using Word = std::vector<Letter>;
using Emit = std::function<void(const Word&)>;

void enumerate_tilde_q(unsigned m, const Word& letters, const Emit& emit);

// x w0 with x in `letters` and w0 in Q~_{m-1} on the rest.
void enumerate_tilde_r(unsigned m, const Word& letters, const Emit& emit) {
  if (m == 1 || letters.empty()) return;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Word rest;
    rest.reserve(letters.size() - 1);
    for (std::size_t j = 0; j < letters.size(); ++j) {
      if (j != i) rest.push_back(letters[j]);
    }
    const Letter head = letters[i];
    enumerate_tilde_q(m - 1, rest, [&](const Word& tail) {
      Word w;
      w.reserve(tail.size() + 1);
      w.push_back(head);
      w.insert(w.end(), tail.begin(), tail.end());
      emit(w);
    });
  }
}

// Builds the increasing products v_1 < ... < v_s factor by factor. Factors on
// disjoint letter sets compare by their leading letters, so each set
// partition of the letters into factors yields exactly one ordered product.
void build_products(unsigned m, const Word& remaining, std::vector<Word>& factors,
                    const Emit& emit) {
  if (remaining.empty()) {
    std::vector<Word> ordered = factors;
    std::sort(ordered.begin(), ordered.end());
    Word w;
    for (const Word& v : ordered) w.insert(w.end(), v.begin(), v.end());
    emit(w);
    return;
  }
  // The block holding remaining[0] is {remaining[0]} plus any subset of the rest.
  const std::size_t others = remaining.size() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others); ++mask) {
    Word block{remaining[0]};
    Word rest;
    for (std::size_t j = 0; j < others; ++j) {
      if (mask >> j & 1u) {
        block.push_back(remaining[j + 1]);
      } else {
        rest.push_back(remaining[j + 1]);
      }
    }
    enumerate_tilde_r(m, block, [&](const Word& v) {
      factors.push_back(v);
      build_products(m, rest, factors, emit);
      factors.pop_back();
    });
  }
}

void enumerate_tilde_q(unsigned m, const Word& letters, const Emit& emit) {
  if (letters.empty()) {
    emit(Word{});
    return;
  }
  if (m == 1) return;
  std::vector<Word> factors;
  build_products(m, letters, factors, emit);
}

}  // namespace

WordCountReport count_tilde(std::size_t n, unsigned m, TildeKind which) {
  if (m == 0) throw ParameterError("m must be at least 1");
  Word letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  WordCountReport report{n, m, 0, std::uint64_t{0}, std::nullopt};
  const Emit emit = [&](const Word& w) {
    ++report.count_recursive;
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == letters) ++*report.count_naive;
  };
  if (which == TildeKind::Q) {
    enumerate_tilde_q(m, letters, emit);
  } else {
    enumerate_tilde_r(m, letters, emit);
  }
  return report;
}

std::uint64_t count_kuzmin(std::size_t n) {
  if (n < 4) throw DegreeTooSmall("Kuzmin elements need degree n >= 4");
  std::uint64_t count = 0;
  for_each_permutation(n, [&](Letters i) {
    // i[0..3] are i_1..i_4 of the bracket [[x_{i1},x_{i2}],[x_{i3},x_{i4},...]].
    if (!(i[0] > i[1] && i[2] > i[3] && i[0] >= i[2] && i[3] <= i[1])) return;
    if (n > 4 && i[1] > i[4]) return;
    for (std::size_t j = 5; j < n; ++j) {
      if (i[j - 1] > i[j]) return;
    }
    ++count;
  });
  return count;
}

std::uint64_t count_cbm_second_derived(std::size_t n, bool char_two) {
  if (n < 4) throw DegreeTooSmall("the second derived part starts in degree 4");
  // Even degree: one extra free generator. Odd degree: a 2-torsion
  // generator, which survives only in characteristic 2.
  const bool extra = n % 2 == 0 || char_two;
  return count_kuzmin(n) + (extra ? 1 : 0);
}

std::uint64_t count_free_poisson_multilinear(std::size_t n) {
  if (n == 0) return 1;
  // Restricted growth strings enumerate the set partitions of {1..n}.
  std::vector<std::size_t> block_size(n + 1, 0);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;

  std::uint64_t total = 0;
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t i,
                                                            std::size_t blocks) {
    if (i == n) {
      std::uint64_t weight = 1;
      for (std::size_t b = 0; b < blocks; ++b) weight *= fact[block_size[b] - 1];
      total += weight;
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      ++block_size[b];
      place(i + 1, b == blocks ? blocks + 1 : blocks);
      --block_size[b];
    }
  };
  place(0, 0);
  return total;
}

std::uint64_t count_regular_words(std::size_t n) {
  if (n == 0) return 0;
  std::uint64_t count = 0;
  for_each_permutation(n, [&](Letters w) {
    if (is_regular_by_rotation(MultilinearWord(Word(w.begin(), w.end())))) ++count;
  });
  return count;
}

}  // namespace codim
