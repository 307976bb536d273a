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

#ifndef FATPOINTS_SPLITTING_HPP_
#define FATPOINTS_SPLITTING_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatpoints/exactla.hpp"
#include "fatpoints/lattice.hpp"
#include "fatpoints/weyl.hpp"

namespace fatpoints {

/// O(-a) + O(-b) on the normalization, a <= b, a + b = degree.
struct SplittingType {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const SplittingType&) const = default;
  auto operator<=>(const SplittingType&) const = default;
  std::string to_string() const;
};

/// Points of the plane over F_p.
struct PointConfiguration {
  PrimeField field;
  std::uint64_t seed = 0;
  std::vector<std::array<Fp, 3>> points;

  /// n points with uniform coordinates, none the zero vector, drawn from a
  /// generator seeded by (seed, stream).
  static PointConfiguration random(PrimeField field, std::size_t n, std::uint64_t seed,
                                   std::uint64_t stream = 0);
};

/// The pairs (a, d-a) allowed by the closed-form bounds, with d = E.L and m
/// the largest multiplicity: min(m, d-m) <= a <= min(d-m, d/2). A single pair
/// when d <= 2m+1. Throws std::invalid_argument if E is not exceptional.
std::vector<SplittingType> split_bounds(const DivisorClass& e);

struct SplittingOptions {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = 3;
  int retry_cap = 10;
};

struct SplittingResult {
  SplittingType type;
  std::int64_t degree = 0;
  bool forced = false;       // read off split_bounds
  bool provisional = false;  // computed from random points mod p
  std::vector<SplittingType> per_trial;
  int retries = 0;
};

/// Raised when the random-point pipeline keeps degenerating.
class SplittingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a conjectural prediction has no admissible answer.
class ConjectureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One trial: Cremona-reduce E to a line, parametrize the line, pull the
/// parametrization back through the quadratic maps and read a off the least
/// syzygy. Throws SplittingFailure after retry_cap degenerate draws.
SplittingType splitting_trial(const DivisorClass& e, PrimeField field, std::uint64_t seed,
                              std::uint64_t trial, int retry_cap, int* retries = nullptr);

/// Majority over opts.trials trials. Requires E exceptional with E.L >= 1.
SplittingResult compute_splitting(const DivisorClass& e, const SplittingOptions& opts = {});

/// The forced pair when split_bounds is a singleton, otherwise
/// compute_splitting.
SplittingResult splitting_type(const DivisorClass& e, const SplittingOptions& opts = {});

/// sum over i of (a_i^2 - a_i)/2 + (b_i^2 - b_i)/2 for the types of w(E_i).
/// Throws std::invalid_argument if w(L)^2 != 1.
std::int64_t defect_sum(const WeylWord& w, std::size_t n, const SplittingOptions& opts = {});

/// (a-1)(a-2)/2 + (b-1)(b-2)/2.
std::int64_t genus_score(const SplittingType& s);

struct SplittingPrediction {
  SplittingType type;
  DivisorClass curve;    // the class C with C^2 = 1 that was scored
  std::int64_t defect = 0;
  bool forced = false;
  std::vector<std::pair<SplittingType, std::int64_t>> candidates;  // with scores
};

/// Smallest score among Lemma-interval pairs whose score is at least the
/// defect sum. C must satisfy C^2 = 1 and reduce to L, or be exceptional with
/// two simple points (those are dropped). Throws ConjectureViolation if no
/// pair qualifies.
SplittingPrediction predict_splitting(const DivisorClass& c, const SplittingOptions& opts = {});

/// Whether the cokernel equality for (E, s) is already a theorem: b - a <= 2
/// or a = d - m.
bool cokernel_equality_known(const DivisorClass& e, const SplittingType& s);

}  // namespace fatpoints

#endif  // FATPOINTS_SPLITTING_HPP_
