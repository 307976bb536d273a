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

#ifndef FATPOINTS_BETTI_HPP_
#define FATPOINTS_BETTI_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/lattice.hpp"
#include "fatpoints/linsys.hpp"
#include "fatpoints/splitting.hpp"

namespace fatpoints {

enum class BettiFlag { Exact, ConjecturalExact, Interval, Unknown };

std::string to_string(BettiFlag f);

/// Value of one exceptional component's cokernel term, with flags.
struct ComponentTerm {
  DivisorClass curve;
  std::int64_t degree = 0;    // d = L.C
  std::int64_t exponent = 0;  // c
  std::int64_t clipped = 0;   // k = min(c, d)
  SplittingType type;
  bool forced = true;
  bool conjectural = false;   // equality rests on the cokernel conjecture
  std::int64_t value = 0;     // binom2(k-a) + binom2(k-b)
};

/// A Betti number, or bounds lo <= value <= hi when it is not determined.
struct BettiEntry {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  BettiFlag flag = BettiFlag::Exact;
  std::string path;          // which rule produced the value
  bool provisional = false;  // uses a splitting type computed mod p
  std::vector<ComponentTerm> terms;  // exceptional components behind the value

  bool determined() const {
    return lo == hi && (flag == BettiFlag::Exact || flag == BettiFlag::ConjecturalExact);
  }
};

struct ResolutionTable {
  std::int64_t alpha = 0;
  /// First degree r >= alpha with expected h^1(F_r) = 0; g_i = 0 for i > r+1.
  std::int64_t regularity = 0;
  std::int64_t i_max = 0;
  std::map<std::int64_t, std::int64_t> hilbert;  // e(h_Z, t) for 0 <= t <= i_max
  std::map<std::int64_t, BettiEntry> g;          // all degrees alpha..i_max
  std::map<std::int64_t, BettiEntry> s;
};

ComponentTerm component_term(const Component& c, const SplittingOptions& opts);

struct ExpectedBetti {
  std::int64_t value = 0;
  std::vector<ComponentTerm> terms;
  std::int64_t correction = 0;  // e(h0, F_i) - e(h0, 2L + H + M)
  bool conjectural = false;
  bool provisional = false;
};

/// Expected number of generators in degree i >= alpha + 2 from the
/// decomposition of F_(i-2)(Z). Throws std::invalid_argument for smaller i.
ExpectedBetti expected_betti(const FatPointScheme& z, std::int64_t i,
                             const SplittingOptions& opts = {});

struct BoundComponent {
  DivisorClass curve;
  std::int64_t d = 0;
  std::int64_t c = 0;   // exponent in degree t-1
  std::int64_t c1 = 0;  // exponent in degree t
  std::int64_t c2 = 0;  // exponent in degree t+1
  SplittingType type;
  bool forced = true;
};

struct BettiBoundData {
  std::int64_t t = 0;
  std::vector<BoundComponent> components;

  /// sum d(c'-c'') - sum binom2(c'-c'') + sum [binom2(c-c'-a) + binom2(c-c'-b)].
  std::int64_t value() const;
};

/// Fixed-part exponents at degrees t-1, t, t+1 for t > alpha.
BettiBoundData bettibound_data(const FatPointScheme& z, std::int64_t t,
                               const SplittingOptions& opts = {});

/// g at alpha + 1, by the first rule that applies: e(alpha) = 1; no kernel
/// (l + q = 0); a decomposition F_(alpha-1) = H + N with h^1(H) = 0; bounds.
BettiEntry betti_alpha_plus_one(const FatPointScheme& z, const SplittingOptions& opts = {});

/// First degree t >= alpha with expected h^1(F_t) = 0.
std::int64_t regularity(const FatPointScheme& z);

/// Full table up to i_max (default: regularity + 3).
ResolutionTable assemble_resolution(const FatPointScheme& z,
                                    std::optional<std::int64_t> i_max = std::nullopt,
                                    const SplittingOptions& opts = {});

/// Third difference of the Hilbert function, h(t) = 0 for t < 0.
std::int64_t third_difference(const FatPointScheme& z, std::int64_t i);

}  // namespace fatpoints

#endif  // FATPOINTS_BETTI_HPP_
