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

#include "fatpoints/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fatpoints {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a prime in (2, 2^31)");
  }
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp result = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Fp PrimeField::inv(Fp a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Fp PrimeField::binomial(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Fp num = 1;
  Fp den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mul(num, (n - i) % p_);
    den = mul(den, (i + 1) % p_);
  }
  return mul(num, inv(den));
}

// ---------------------------------------------------------------------------

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

void FpMatrix::append_row(std::span<const Fp> values) {
  if (values.size() != cols_) {
    throw std::invalid_argument("append_row: row length mismatch");
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

namespace {

// In-place reduction to row echelon form. With `full`, entries above each
// pivot are cleared as well and pivots are normalized to 1 (RREF). Returns
// the pivot column of each nonzero row.
std::vector<std::size_t> echelonize(FpMatrix& m, bool full) {
  const PrimeField& f = m.field();
  const std::uint64_t p = f.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = r;
    while (pivot_row < rows && m(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      auto a = m.row(pivot_row);
      auto b = m.row(r);
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(c), a.end(),
                       b.begin() + static_cast<std::ptrdiff_t>(c));
    }
    auto pivot = m.row(r);
    const Fp scale = f.inv(pivot[c]);
    for (std::size_t k = c; k < cols; ++k) pivot[k] = f.mul(pivot[k], scale);

    const std::size_t first = full ? 0 : r + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r) continue;
      auto target = m.row(i);
      const Fp factor = target[c];
      if (factor == 0) continue;
      const Fp neg = p - factor;
      for (std::size_t k = c; k < cols; ++k) {
        target[k] = (target[k] + neg * pivot[k]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Univariate helpers on coefficient vectors, lowest degree first, trimmed.
using Poly = std::vector<Fp>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Returns {quotient, remainder}.
std::pair<Poly, Poly> poly_divmod(const PrimeField& f, Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const Fp lead_inv = f.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Fp coef = f.mul(a[i], lead_inv);
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = coef;
    if (coef != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = f.sub(a[shift + j], f.mul(coef, b[j]));
      }
    }
    if (i == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Fp s = f.inv(a.back());
    for (Fp& c : a) c = f.mul(c, s);
  }
  return a;
}

// Multiplicity of the factor v: degree minus the u-degree.
std::size_t v_order(const BinaryForm& g) {
  const auto& c = g.coeffs();
  std::size_t top = c.size() - 1;
  while (c[top] == 0) --top;
  return g.degree() - top;
}

Poly dehomogenize(const BinaryForm& g) {
  Poly a = g.coeffs();
  trim(a);
  return a;
}

BinaryForm homogenize(const PrimeField& field, const Poly& a,
                      std::size_t degree) {
  std::vector<Fp> coeffs(degree + 1, 0);
  std::copy(a.begin(), a.end(), coeffs.begin());
  return BinaryForm(field, std::move(coeffs));
}

}  // namespace

std::size_t rank(FpMatrix m) { return echelonize(m, false).size(); }

std::vector<std::vector<Fp>> nullspace(FpMatrix m) {
  const std::vector<std::size_t> pivots = echelonize(m, true);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Fp>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(m(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------

BinaryForm::BinaryForm(PrimeField field) : field_(field) {}

BinaryForm::BinaryForm(PrimeField field, std::vector<Fp> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  bool all_zero = true;
  for (Fp& c : coeffs_) {
    c %= field_.modulus();
    all_zero = all_zero && c == 0;
  }
  if (all_zero) coeffs_.clear();
}

BinaryForm BinaryForm::constant(PrimeField field, Fp c) {
  return BinaryForm(field, std::vector<Fp>{c});
}

BinaryForm BinaryForm::linear(PrimeField field, Fp alpha, Fp beta) {
  return BinaryForm(field, std::vector<Fp>{beta, alpha});
}

std::size_t BinaryForm::degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero form");
  return coeffs_.size() - 1;
}

BinaryForm BinaryForm::operator*(const BinaryForm& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("field mismatch");
  if (is_zero() || other.is_zero()) return BinaryForm(field_);
  std::vector<Fp> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = (out[i + j] + coeffs_[i] * other.coeffs_[j]) % p;
    }
  }
  return BinaryForm(field_, std::move(out));
}

BinaryForm BinaryForm::scaled(Fp c) const {
  std::vector<Fp> out = coeffs_;
  for (Fp& x : out) x = field_.mul(x, c % field_.modulus());
  return BinaryForm(field_, std::move(out));
}

BinaryForm BinaryForm::operator+(const BinaryForm& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (coeffs_.size() != other.coeffs_.size()) {
    throw std::invalid_argument("sum of forms of different degrees");
  }
  std::vector<Fp> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.add(coeffs_[i], other.coeffs_[i]);
  }
  return BinaryForm(field_, std::move(out));
}

BinaryForm BinaryForm::monic() const {
  if (is_zero()) return *this;
  std::size_t top = coeffs_.size() - 1;
  while (coeffs_[top] == 0) --top;
  return scaled(field_.inv(coeffs_[top]));
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const std::size_t d = degree();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coeffs_[i];
    if (i > 0) out << "*u^" << i;
    if (d - i > 0) out << "*v^" << d - i;
  }
  return out.str();
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) {
    throw std::invalid_argument("gcd of two zero forms");
  }
  if (!(f.field() == g.field())) throw std::invalid_argument("field mismatch");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const std::size_t vpow = std::min(v_order(f), v_order(g));
  const Poly common = poly_gcd(f.field(), dehomogenize(f), dehomogenize(g));
  return homogenize(f.field(), common, common.size() - 1 + vpow);
}

BinaryForm form_divide(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero form");
  if (f.is_zero()) return f;
  if (g.degree() > f.degree() || v_order(g) > v_order(f)) {
    throw std::invalid_argument("form does not divide");
  }
  auto [q, r] = poly_divmod(f.field(), dehomogenize(f), dehomogenize(g));
  if (!r.empty()) throw std::invalid_argument("form does not divide");
  return homogenize(f.field(), q, f.degree() - g.degree());
}

std::size_t min_syzygy_degree(const BinaryForm& phi0, const BinaryForm& phi1,
                              const BinaryForm& phi2) {
  const BinaryForm* phis[3] = {&phi0, &phi1, &phi2};
  std::size_t d = 0;
  bool have_degree = false;
  for (const BinaryForm* phi : phis) {
    if (phi->is_zero()) continue;
    if (have_degree && phi->degree() != d) {
      throw std::invalid_argument("syzygy input forms differ in degree");
    }
    d = phi->degree();
    have_degree = true;
  }
  if (!have_degree) throw std::invalid_argument("all syzygy input forms are zero");

  BinaryForm common(phi0.field());
  for (const BinaryForm* phi : phis) {
    common = common.is_zero() ? (phi->is_zero() ? common : phi->monic())
                              : (phi->is_zero() ? common : form_gcd(common, *phi));
  }
  if (common.degree() > 0) {
    throw std::invalid_argument("syzygy input forms share the factor " +
                                common.to_string());
  }

  const PrimeField& field = phi0.field();
  for (std::size_t e = 0;; ++e) {
    FpMatrix m(field, d + e + 1, 3 * (e + 1));
    for (std::size_t i = 0; i < 3; ++i) {
      if (phis[i]->is_zero()) continue;
      for (std::size_t j = 0; j <= e; ++j) {
        for (std::size_t k = 0; k <= d; ++k) {
          m.set_residue(j + k, i * (e + 1) + j, phis[i]->coeff(k));
        }
      }
    }
    if (rank(std::move(m)) < 3 * (e + 1)) return e;
  }
}

}  // namespace fatpoints
