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

#ifndef FATPOINTS_LATTICE_HPP_
#define FATPOINTS_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

/// The class tL - m_1 E_1 - ... - m_n E_n on the blow up of the plane at n
/// points. Coefficients are exact integers of either sign.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::int64_t t, std::vector<std::int64_t> m)
      : t_(t), m_(std::move(m)) {}

  /// The zero class with n points.
  static DivisorClass zero(std::size_t n) { return {0, std::vector<std::int64_t>(n, 0)}; }
  /// L with n points.
  static DivisorClass line(std::size_t n) { return {1, std::vector<std::int64_t>(n, 0)}; }
  /// E_i (1-based) with n points; stored as t = 0, m_i = -1.
  static DivisorClass exceptional(std::size_t i, std::size_t n);

  std::int64_t t() const { return t_; }
  const std::vector<std::int64_t>& m() const { return m_; }
  /// Coefficient m_i, 1-based.
  std::int64_t m(std::size_t i) const { return m_.at(i - 1); }
  std::size_t n() const { return m_.size(); }

  /// Largest multiplicity, 0 when n = 0.
  std::int64_t max_multiplicity() const;

  /// Extends with zero multiplicities. Throws if n > new_n.
  DivisorClass pad_to(std::size_t new_n) const;
  /// Drops trailing zero multiplicities.
  DivisorClass stripped() const;
  /// Multiplicities sorted in descending order.
  DivisorClass sorted() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass operator*(std::int64_t k) const;
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& c) { return c * k; }

  bool operator==(const DivisorClass&) const = default;
  auto operator<=>(const DivisorClass&) const = default;

  /// "t;m1,...,mn", the CLI interchange format.
  std::string to_string() const;
  /// Readable form such as "12L-5E1-5E2+E3".
  std::string pretty() const;

  /// Parses "t;m1,...,mn" (whitespace-insensitive; "t" or "t;" for n = 0).
  /// Throws std::invalid_argument naming the offending token.
  static DivisorClass parse(std::string_view text);

 private:
  std::int64_t t_ = 0;
  std::vector<std::int64_t> m_;
};

/// Z = m_1 P_1 + ... + m_n P_n at general points.
class FatPointScheme {
 public:
  /// Throws std::invalid_argument on a negative or all-zero vector.
  explicit FatPointScheme(std::vector<std::int64_t> mults);

  const std::vector<std::int64_t>& mults() const { return mults_; }
  std::size_t n() const { return mults_.size(); }

  /// Parses "m1,...,mn"; whitespace-insensitive, and "k*r" or "kxr" repeats k
  /// r times.
  static FatPointScheme parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<std::int64_t> mults_;
};

/// t_F t_G - sum m_i(F) m_i(G). Throws std::invalid_argument on mismatched n
/// and std::overflow_error if the result leaves 64 bits.
std::int64_t intersect(const DivisorClass& f, const DivisorClass& g);

/// K = -3L + E_1 + ... + E_n, i.e. t = -3 and every m_i = -1.
DivisorClass canonical_class(std::size_t n);

/// Riemann-Roch: (F^2 - K.F)/2 + 1.
std::int64_t chi(const DivisorClass& f);

/// F_t(Z) = tL - m_1 E_1 - ... - m_n E_n.
DivisorClass class_of(const FatPointScheme& z, std::int64_t t);

/// x(x-1)/2 for x >= 2, otherwise 0.
constexpr std::int64_t binom2(std::int64_t x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

}  // namespace fatpoints

#endif  // FATPOINTS_LATTICE_HPP_
