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

#include "fatpoints/linsys.hpp"

#include <algorithm>
#include <numeric>

#include "fatpoints/weyl.hpp"

namespace fatpoints {

DivisorClass Decomposition::fixed_part() const {
  DivisorClass n = DivisorClass::zero(free_part.n());
  for (const Component& c : components) n = n + c.multiplicity * c.curve;
  return n;
}

std::optional<Decomposition> decompose(const DivisorClass& f) {
  const ReducedForm r = reduce(f);
  if (r.status != ReductionStatus::InChamber) return std::nullopt;

  const std::int64_t t = r.reduced.t();
  const std::vector<std::int64_t>& m = r.reduced.m();
  const std::size_t n = m.size();

  Decomposition out;
  out.boundary = m[1] == 0 && m[2] < 0;

  DivisorClass h_prime;
  std::vector<Component> parts;
  auto negative_points = [&](std::size_t from) {
    for (std::size_t i = from; i < n; ++i) {
      if (m[i] < 0) parts.push_back({DivisorClass::exceptional(i + 1, n), -m[i]});
    }
  };

  if (m[2] >= 0 || m[1] <= 0) {
    std::vector<std::int64_t> hm(n, 0);
    for (std::size_t i = 0; i < n; ++i) hm[i] = std::max<std::int64_t>(m[i], 0);
    h_prime = DivisorClass(t, std::move(hm));
    negative_points(0);
  } else {
    const std::int64_t c = t - m[0] - m[1];
    std::vector<std::int64_t> hm(n, 0);
    if (c < 0) {
      hm[0] = m[0] + c;
      hm[1] = m[1] + c;
      h_prime = DivisorClass(t + c, std::move(hm));
      std::vector<std::int64_t> line(n, 0);
      line[0] = line[1] = 1;
      parts.push_back({DivisorClass(1, std::move(line)), -c});
    } else {
      hm[0] = m[0];
      hm[1] = m[1];
      h_prime = DivisorClass(t, std::move(hm));
    }
    negative_points(2);
  }

  out.free_part = apply_word(r.word, h_prime, /*inverse=*/true);
  for (Component& p : parts) {
    out.components.push_back({apply_word(r.word, p.curve, true), p.multiplicity});
  }
  return out;
}

std::int64_t expected_h0(const DivisorClass& f) {
  const auto d = decompose(f);
  if (!d) return 0;
  return std::max<std::int64_t>(0, chi(d->free_part));
}

std::int64_t expected_h1(const DivisorClass& f) {
  const std::int64_t h0 = expected_h0(f);
  const std::int64_t h2 = expected_h0(canonical_class(f.n()) - f);
  const std::int64_t h1 = h0 - chi(f) + h2;
  if (h1 < 0) {
    throw ShghInconsistent("expected h^1 is negative (" + std::to_string(h1) + ") for " +
                           f.to_string());
  }
  return h1;
}

std::int64_t alpha(const FatPointScheme& z) {
  // m_i lines through each P_i give a curve of degree sum m_i.
  const std::int64_t bound =
      std::accumulate(z.mults().begin(), z.mults().end(), std::int64_t{0});
  for (std::int64_t t = 0; t <= bound; ++t) {
    if (expected_h0(class_of(z, t)) > 0) return t;
  }
  throw std::logic_error("no positive expected value up to degree " + std::to_string(bound));
}

std::vector<Component> fixed_part(const FatPointScheme& z, std::int64_t t) {
  const auto d = decompose(class_of(z, t));
  if (!d) {
    throw std::invalid_argument("F_" + std::to_string(t) + " is not effective for " +
                                z.to_string());
  }
  return d->components;
}

HilbertReport hilbert(const FatPointScheme& z, std::int64_t t_begin, std::int64_t t_end) {
  HilbertReport report;
  report.alpha = alpha(z);
  for (std::int64_t t = t_begin; t < t_end; ++t) {
    HilbertRow row;
    row.t = t;
    if (const auto d = decompose(class_of(z, t))) {
      row.value = std::max<std::int64_t>(0, chi(d->free_part));
      row.fixed = d->components;
      row.boundary = d->boundary;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace fatpoints
