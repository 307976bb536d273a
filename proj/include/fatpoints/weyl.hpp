// Copyright 2026 The fatpoints Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FATPOINTS_WEYL_HPP_
#define FATPOINTS_WEYL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/lattice.hpp"

namespace fatpoints {

/// One reflection: Swap(i) exchanges E_i and E_{i+1} (1 <= i < n); Cremona is
/// the reflection s_0 in L - E_1 - E_2 - E_3.
struct Generator {
  enum class Kind { Swap, Cremona };
  Kind kind = Kind::Cremona;
  std::size_t index = 0;  // meaningful for Swap only

  static Generator swap(std::size_t i) { return {Kind::Swap, i}; }
  static Generator cremona() { return {Kind::Cremona, 0}; }

  bool operator==(const Generator&) const = default;
};

/// A product of generators, applied left to right.
class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<Generator> gens) : gens_(std::move(gens)) {}

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  void push_back(Generator g) { gens_.push_back(g); }
  void append(const WeylWord& other);

  /// The inverse word (each generator is an involution).
  WeylWord reversed() const;

  bool operator==(const WeylWord&) const = default;

  /// "s0 s2 s1 s0"; the empty word prints as "".
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on a bad token.
  static WeylWord parse(std::string_view text);

 private:
  std::vector<Generator> gens_;
};

/// Throws std::out_of_range for Swap(i) outside 1 <= i < n or Cremona with
/// n < 3.
DivisorClass apply_generator(const DivisorClass& f, Generator g);

/// Applies the generators in order, or in reverse order when inverse is set.
DivisorClass apply_word(const WeylWord& w, const DivisorClass& f, bool inverse = false);

enum class ReductionStatus { InChamber, NegL, NegLine };

std::string to_string(ReductionStatus s);

struct ReducedForm {
  DivisorClass reduced;  // word applied to the (padded) input
  WeylWord word;
  ReductionStatus status = ReductionStatus::InChamber;
};

/// When to stop reducing. Full keeps applying s_0 while 0 <= t < m_1+m_2+m_3,
/// so a class with t < m_1 may be pushed on to t < 0. FirstNegative stops at
/// the first sorted class with t < 0 or t < m_1.
enum class ReduceStop { Full, FirstNegative };

/// Sorts (recording adjacent swaps) and applies s_0 until the stopping rule
/// holds. Status: NegL if t < 0, NegLine if t < m_1, InChamber otherwise.
/// Inputs with fewer than three points are padded to three.
ReducedForm reduce(const DivisorClass& f, ReduceStop stop = ReduceStop::Full);

/// E^2 = -1, K.E = -1 and E reduces to a single E_i.
bool is_exceptional(const DivisorClass& e);

/// All exceptional classes with 1 <= t <= max_t, multiplicities sorted
/// descending and trailing zeros removed; sorted by (t, m).
std::vector<DivisorClass> enumerate_exceptional(std::int64_t max_t);

/// If C reduces to L, the word w with w(L) = C (C padded to at least three
/// points). Otherwise nullopt.
std::optional<WeylWord> orbit_of_line(const DivisorClass& c);

/// Word taking an exceptional class with t >= 1 to a class of degree one,
/// which then equals L - E_1 - E_2. The class is padded to three points.
struct DegreeOneReduction {
  WeylWord word;
  DivisorClass line_class;
};
DegreeOneReduction reduce_to_degree_one(const DivisorClass& e);

/// Word w with w(E) = E_1 for an exceptional class E (padded to three points).
/// Throws std::invalid_argument if E is not exceptional.
WeylWord word_to_first_exceptional(const DivisorClass& e);

}  // namespace fatpoints

#endif  // FATPOINTS_WEYL_HPP_
