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

#ifndef FATPOINTS_LINSYS_HPP_
#define FATPOINTS_LINSYS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatpoints/lattice.hpp"

namespace fatpoints {

/// An exceptional curve class with a positive coefficient.
struct Component {
  DivisorClass curve;
  std::int64_t multiplicity = 0;

  bool operator==(const Component&) const = default;
};

/// F = H + sum c_i C_i. Classes carry the padded point count used by
/// reduce (at least three).
struct Decomposition {
  DivisorClass free_part;
  std::vector<Component> components;
  /// Set when the reduced class sat on the m_2 = 0 edge of the case split.
  bool boundary = false;

  /// N = sum c_i C_i.
  DivisorClass fixed_part() const;
};

/// Thrown when h^0 - chi + h^2 comes out negative for the expected values.
class ShghInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// nullopt when F reduces to a class with t < 0 or t < m_1 (F not in Psi).
std::optional<Decomposition> decompose(const DivisorClass& f);

/// max(0, chi(H)) for F in Psi, else 0.
std::int64_t expected_h0(const DivisorClass& f);

/// expected_h0(F) - chi(F) + expected_h0(K - F). Throws ShghInconsistent if
/// negative.
std::int64_t expected_h1(const DivisorClass& f);

/// Least t with expected_h0(F_t(Z)) > 0.
std::int64_t alpha(const FatPointScheme& z);

/// Components of N for F_t(Z). Throws std::invalid_argument when F_t(Z) is
/// not in Psi.
std::vector<Component> fixed_part(const FatPointScheme& z, std::int64_t t);

struct HilbertRow {
  std::int64_t t = 0;
  std::int64_t value = 0;
  std::vector<Component> fixed;  // empty when F_t(Z) is not in Psi
  bool boundary = false;
};

struct HilbertReport {
  std::int64_t alpha = 0;
  std::vector<HilbertRow> rows;
};

/// Expected Hilbert function of I(Z) on the half-open range [t_begin, t_end).
HilbertReport hilbert(const FatPointScheme& z, std::int64_t t_begin, std::int64_t t_end);

}  // namespace fatpoints

#endif  // FATPOINTS_LINSYS_HPP_
