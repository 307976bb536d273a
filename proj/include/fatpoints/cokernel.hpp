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

#ifndef FATPOINTS_COKERNEL_HPP_
#define FATPOINTS_COKERNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatpoints/exactla.hpp"
#include "fatpoints/lattice.hpp"
#include "fatpoints/splitting.hpp"

namespace fatpoints {

/// h^0(mE, O_mE(t)) for a twist t of either sign: C(m+1,2) + mt when t >= 0,
/// C(m+t+1,2) (clamped) when t < 0. Requires m >= 1.
std::int64_t h0_mE(std::int64_t m, std::int64_t t);
/// h^1(mE, O_mE(t)): 0 when t >= 0; with s = -t, C(s,2) for s <= m and
/// sm - C(m+1,2) for s >= m.
std::int64_t h1_mE(std::int64_t m, std::int64_t t);

/// Default limit on matrix entries (rows * cols) for one elimination.
inline constexpr std::size_t kDefaultCeiling = 64'000'000;

/// A matrix would exceed the size ceiling.
class Infeasible : public std::runtime_error {
 public:
  Infeasible(const std::string& what, std::size_t rows, std::size_t cols)
      : std::runtime_error(what), rows_(rows), cols_(cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
};

/// Position of x^i y^j z^(d-i-j) among the degree-d monomials; independent of
/// d, ordered by i+j and then j.
constexpr std::size_t monomial_index(std::int64_t i, std::int64_t j) {
  const auto s = static_cast<std::size_t>(i + j);
  return s * (s + 1) / 2 + static_cast<std::size_t>(j);
}
constexpr std::size_t monomial_count(std::int64_t d) {
  return d < 0 ? 0 : static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

/// Vanishing conditions of order m_i at points[i] on degree-d forms: rows are
/// the Taylor coefficients of order < m_i in an affine chart, columns the
/// monomials in monomial_index order. Requires points.size() >= mults.size().
FpMatrix fat_point_matrix(const PointConfiguration& points, std::int64_t d,
                          const std::vector<std::int64_t>& mults,
                          std::size_t ceiling = kDefaultCeiling);

/// dim I(Z)_(t+1) - rank of I(Z)_t * <x,y,z> for Z = sum mults_i points_i,
/// built directly from nullspace bases.
std::int64_t mu_rank_oracle(const PointConfiguration& points,
                            const std::vector<std::int64_t>& mults, std::int64_t t,
                            std::size_t ceiling = kDefaultCeiling);

struct CokernelOptions {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  std::size_t ceiling = kDefaultCeiling;
  int retry_cap = 10;
  bool oracle = false;  // use mu_rank_oracle on L + mE instead of the formula
};

struct MuVerdict {
  DivisorClass curve;
  std::int64_t m = 0;
  std::int64_t computed = 0;
  std::int64_t predicted = 0;  // binom2(m-a) + binom2(m-b)
  SplittingType splitting;
  bool splitting_forced = false;
  std::string method;  // "formula" or "brute-force"
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rows = 0;  // largest matrix eliminated
  std::size_t cols = 0;
  int retries = 0;
  bool provisional = true;
};

/// dim cok mu_(L+mE) for an exceptional E and 0 <= m <= E.L. The formula
/// path moves E to E_1 with a Weyl word w, finds H^0(L') for L' = w(L) by
/// interpolation with the first point at (0:0:1), and measures the image of
/// the truncated products in the m-th neighborhood. Throws Infeasible past the
/// ceiling and SplittingFailure if the draws keep degenerating.
MuVerdict cok_dimension(const DivisorClass& e, std::int64_t m, const CokernelOptions& opts = {});

}  // namespace fatpoints

#endif  // FATPOINTS_COKERNEL_HPP_
