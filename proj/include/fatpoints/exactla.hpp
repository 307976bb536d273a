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

#ifndef FATPOINTS_EXACTLA_HPP_
#define FATPOINTS_EXACTLA_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fatpoints {

/// Residue in [0, p).
using Fp = std::uint64_t;

inline constexpr std::uint64_t kDefaultPrime = 31991;

/// Arithmetic modulo a prime p with 2 < p < 2^31, so that a product of two
/// residues plus a residue fits in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  Fp reduce(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Fp>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  Fp add(Fp a, Fp b) const { return (a + b) % p_; }
  Fp sub(Fp a, Fp b) const { return (a + p_ - b) % p_; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const { return (a * b) % p_; }
  Fp pow(Fp a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Fp inv(Fp a) const;

  /// Binomial coefficient C(n, k) mod p; requires n < p.
  Fp binomial(std::uint64_t n, std::uint64_t k) const;

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint64_t n);

 private:
  std::uint64_t p_;
};

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  /// Stores x reduced mod p.
  void set(std::size_t r, std::size_t c, std::int64_t x) {
    entries_[r * cols_ + c] = field_.reduce(x);
  }
  void set_residue(std::size_t r, std::size_t c, Fp x) {
    entries_[r * cols_ + c] = x;
  }

  std::span<Fp> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Fp> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// Appends a row of residues; the row length must equal cols().
  void append_row(std::span<const Fp> values);

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fp> entries_;
};

/// Rank by Gaussian elimination (first nonzero pivot in each column).
std::size_t rank(FpMatrix m);

/// Basis of {v : M v = 0}, one vector per free column of the reduced row
/// echelon form. The result is deterministic for a fixed matrix.
std::vector<std::vector<Fp>> nullspace(FpMatrix m);

/// Homogeneous form sum_i c_i u^i v^(d-i) in two variables over F_p. A form
/// whose coefficients are all zero is the zero form, which carries no degree.
class BinaryForm {
 public:
  /// The zero form.
  explicit BinaryForm(PrimeField field);
  /// coeffs[i] is the coefficient of u^i v^(d-i), d = coeffs.size() - 1.
  BinaryForm(PrimeField field, std::vector<Fp> coeffs);

  static BinaryForm constant(PrimeField field, Fp c);
  /// alpha*u + beta*v.
  static BinaryForm linear(PrimeField field, Fp alpha, Fp beta);

  const PrimeField& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero form; throws std::logic_error on the zero form.
  std::size_t degree() const;
  /// Coefficient of u^i v^(degree - i).
  Fp coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Fp>& coeffs() const { return coeffs_; }

  BinaryForm operator*(const BinaryForm& other) const;
  BinaryForm scaled(Fp c) const;
  /// Sum of two forms of equal degree (either may be zero).
  BinaryForm operator+(const BinaryForm& other) const;

  /// Scales so that the coefficient of the highest power of u is 1.
  BinaryForm monic() const;

  bool operator==(const BinaryForm& other) const = default;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::vector<Fp> coeffs_;
};

/// Monic greatest common divisor. Throws std::invalid_argument when both
/// inputs are zero.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

/// Exact quotient f / g. Throws std::invalid_argument when g does not divide f.
BinaryForm form_divide(const BinaryForm& f, const BinaryForm& g);

/// Least e >= 0 with a nonzero syzygy s0*phi0 + s1*phi1 + s2*phi2 = 0 with
/// forms s_i of degree e. The three forms share a degree d and must have no
/// common factor; that case throws std::invalid_argument.
std::size_t min_syzygy_degree(const BinaryForm& phi0, const BinaryForm& phi1,
                              const BinaryForm& phi2);

}  // namespace fatpoints

#endif  // FATPOINTS_EXACTLA_HPP_
