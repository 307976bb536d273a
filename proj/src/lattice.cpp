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

#include "fatpoints/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  }
  return out;
}

std::int64_t parse_integer(std::string_view token) {
  std::int64_t value = 0;
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed integer token '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

DivisorClass combine(const DivisorClass& a, const DivisorClass& b,
                     const std::function<std::int64_t(std::int64_t, std::int64_t)>& op) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("classes have different numbers of points: " +
                                std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
  std::vector<std::int64_t> m(a.n());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = op(a.m()[i], b.m()[i]);
  return {op(a.t(), b.t()), std::move(m)};
}

}  // namespace

DivisorClass DivisorClass::exceptional(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw std::out_of_range("exceptional class index out of range");
  DivisorClass e = zero(n);
  e.m_[i - 1] = -1;
  return e;
}

std::int64_t DivisorClass::max_multiplicity() const {
  if (m_.empty()) return 0;
  return *std::max_element(m_.begin(), m_.end());
}

DivisorClass DivisorClass::pad_to(std::size_t new_n) const {
  if (new_n < n()) {
    throw std::invalid_argument("pad_to cannot shrink a class from " +
                                std::to_string(n()) + " to " + std::to_string(new_n));
  }
  std::vector<std::int64_t> m = m_;
  m.resize(new_n, 0);
  return {t_, std::move(m)};
}

DivisorClass DivisorClass::stripped() const {
  std::vector<std::int64_t> m = m_;
  while (!m.empty() && m.back() == 0) m.pop_back();
  return {t_, std::move(m)};
}

DivisorClass DivisorClass::sorted() const {
  std::vector<std::int64_t> m = m_;
  std::sort(m.begin(), m.end(), std::greater<>());
  return {t_, std::move(m)};
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  return combine(*this, other, std::plus<>());
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  return combine(*this, other, std::minus<>());
}

DivisorClass DivisorClass::operator-() const { return *this * -1; }

DivisorClass DivisorClass::operator*(std::int64_t k) const {
  std::vector<std::int64_t> m = m_;
  for (auto& x : m) x *= k;
  return {t_ * k, std::move(m)};
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  out << t_ << ';';
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i > 0) out << ',';
    out << m_[i];
  }
  return out.str();
}

std::string DivisorClass::pretty() const {
  std::ostringstream out;
  bool empty = true;
  auto term = [&](std::int64_t coeff, const std::string& symbol) {
    if (coeff == 0) return;
    if (coeff < 0) {
      out << '-';
    } else if (!empty) {
      out << '+';
    }
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out << mag;
    out << symbol;
    empty = false;
  };
  term(t_, "L");
  for (std::size_t i = 0; i < m_.size(); ++i) term(-m_[i], "E" + std::to_string(i + 1));
  if (empty) out << '0';
  return out.str();
}

DivisorClass DivisorClass::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto semicolon = s.find(';');
  if (semicolon == std::string::npos) {
    if (s.empty()) throw std::invalid_argument("empty class string");
    return {parse_integer(s), {}};
  }
  const std::int64_t t = parse_integer(s.substr(0, semicolon));
  const std::string rest = s.substr(semicolon + 1);
  std::vector<std::int64_t> m;
  if (!rest.empty()) {
    for (const std::string& token : split(rest, ',')) m.push_back(parse_integer(token));
  }
  return {t, std::move(m)};
}

// ---------------------------------------------------------------------------

FatPointScheme::FatPointScheme(std::vector<std::int64_t> mults)
    : mults_(std::move(mults)) {
  bool positive = false;
  for (std::int64_t m : mults_) {
    if (m < 0) throw std::invalid_argument("negative multiplicity " + std::to_string(m));
    positive = positive || m > 0;
  }
  if (!positive) throw std::invalid_argument("fat point scheme needs a positive multiplicity");
}

FatPointScheme FatPointScheme::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  // Accept the multiplication sign as a repeat marker.
  for (std::size_t pos; (pos = s.find("\xC3\x97")) != std::string::npos;) {
    s.replace(pos, 2, "x");
  }
  if (s.empty()) throw std::invalid_argument("empty multiplicity list");
  std::vector<std::int64_t> mults;
  for (const std::string& token : split(s, ',')) {
    const auto mark = token.find_first_of("x*");
    if (mark == std::string::npos) {
      mults.push_back(parse_integer(token));
      continue;
    }
    const std::int64_t value = parse_integer(token.substr(0, mark));
    const std::int64_t count = parse_integer(token.substr(mark + 1));
    if (count < 0 || count > 100000) {
      throw std::invalid_argument("bad repeat count in token '" + token + "'");
    }
    mults.insert(mults.end(), static_cast<std::size_t>(count), value);
  }
  return FatPointScheme(std::move(mults));
}

std::string FatPointScheme::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (i > 0) out << ',';
    out << mults_[i];
  }
  return out.str();
}

std::int64_t intersect(const DivisorClass& f, const DivisorClass& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("intersect: classes have different numbers of points: " +
                                std::to_string(f.n()) + " vs " + std::to_string(g.n()));
  }
  __int128 acc = static_cast<__int128>(f.t()) * g.t();
  for (std::size_t i = 0; i < f.n(); ++i) {
    acc -= static_cast<__int128>(f.m()[i]) * g.m()[i];
  }
  if (acc > std::numeric_limits<std::int64_t>::max() ||
      acc < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("intersection number exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

DivisorClass canonical_class(std::size_t n) {
  return {-3, std::vector<std::int64_t>(n, -1)};
}

std::int64_t chi(const DivisorClass& f) {
  const std::int64_t twice = intersect(f, f) - intersect(canonical_class(f.n()), f);
  // F^2 + K.F is even for every class (t^2 + 3t and m^2 + m are even).
  if (twice % 2 != 0) {
    throw std::logic_error("Riemann-Roch parity violated for " + f.to_string());
  }
  return twice / 2 + 1;
}

DivisorClass class_of(const FatPointScheme& z, std::int64_t t) {
  return {t, z.mults()};
}

}  // namespace fatpoints
