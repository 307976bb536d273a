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


// Test-side oracles and generators. Nothing here calls into the library's
// algorithms; they are written from the definitions.

#ifndef FATPOINTS_TESTS_SUPPORT_HPP_
#define FATPOINTS_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fatpoints/lattice.hpp"
#include "fatpoints/weyl.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

// t;m with m sorted descending, trailing zeros dropped.
inline Vec canonical(std::int64_t t, Vec m) {
  std::sort(m.begin(), m.end(), std::greater<>());
  while (!m.empty() && m.back() == 0) m.pop_back();
  m.insert(m.begin(), t);
  return m;
}

// Plain Cremona reduction on (t, m). True iff it ends at a single -1 entry.
inline bool reduces_to_point(std::int64_t t, Vec m) {
  while (m.size() < 3) m.push_back(0);
  for (int guard = 0; guard < 10000; ++guard) {
    std::sort(m.begin(), m.end(), std::greater<>());
    if (t < 0) return false;
    const std::int64_t excess = m[0] + m[1] + m[2] - t;
    if (excess <= 0) break;
    t -= excess;
    for (int k = 0; k < 3; ++k) m[k] -= excess;
  }
  if (t != 0) return false;
  std::int64_t neg = 0, nonzero = 0;
  for (auto x : m) {
    if (x != 0) ++nonzero;
    if (x == -1) ++neg;
  }
  return nonzero == 1 && neg == 1;
}

// All exceptional classes with 1 <= t <= max_t by exhaustive search over
// sorted positive multiplicities with sum 3t-1 and square sum t^2+1.
inline std::set<Vec> brute_exceptional(std::int64_t max_t) {
  std::set<Vec> out;
  for (std::int64_t t = 1; t <= max_t; ++t) {
    const std::int64_t sum = 3 * t - 1, sq = t * t + 1;
    Vec cur;
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
        [&](std::int64_t cap, std::int64_t rs, std::int64_t rq) {
          if (rs == 0 && rq == 0) {
            if (reduces_to_point(t, cur)) out.insert(canonical(t, cur));
            return;
          }
          if (rs <= 0 || rq <= 0) return;
          for (std::int64_t v = std::min(cap, rs); v >= 1; --v) {
            if (v * v > rq) continue;
            // the rest, all <= v, needs at least rs - v entries of square >= 1
            if (rq - v * v < rs - v) continue;
            if ((rs - v) * v < rq - v * v) break;
            cur.push_back(v);
            rec(v, rs - v, rq - v * v);
            cur.pop_back();
          }
        };
    rec(t, sum, sq);
  }
  return out;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Rank by textbook elimination.
inline std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = powmod(a[r][c], p - 2, p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = (a[i][k] + p - f * a[r][k] % p) % p;
    }
    ++r;
  }
  return r;
}

// Univariate polynomials over F_p, low degree first; used for division checks
// on dehomogenized forms.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by g (g nonzero).
inline Poly poly_rem(Poly f, Poly g, std::uint64_t p) {
  trim(f);
  trim(g);
  const std::uint64_t inv = powmod(g.back(), p - 2, p);
  while (f.size() >= g.size()) {
    const std::uint64_t q = f.back() * inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
      f[shift + k] = (f[shift + k] + p - q * g[k] % p) % p;
    }
    trim(f);
  }
  return f;
}

// Random class with n points and |entries| bounded.
inline fatpoints::DivisorClass random_class(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> m(n);
  for (auto& x : m) x = d(rng);
  return {d(rng), m};
}

inline fatpoints::WeylWord random_word(std::mt19937_64& rng, std::size_t n, std::size_t len) {
  fatpoints::WeylWord w;
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t g = rng() % n;  // 0 = Cremona, else swap g
    w.push_back(g == 0 ? fatpoints::Generator::cremona() : fatpoints::Generator::swap(g));
  }
  return w;
}

// Random element of Psi: nonnegative combination of exceptional classes and
// -K, shuffled, with t <= max_t.
inline fatpoints::DivisorClass random_in_psi(std::mt19937_64& rng,
                                             const std::vector<fatpoints::DivisorClass>& pool,
                                             std::size_t n, std::int64_t max_t) {
  fatpoints::DivisorClass f = fatpoints::DivisorClass::zero(n);
  const int parts = 1 + static_cast<int>(rng() % 6);
  for (int k = 0; k < parts; ++k) {
    fatpoints::DivisorClass c;
    const auto pick = rng() % (pool.size() + n + 1);
    if (pick < pool.size()) {
      if (pool[pick].n() > n) continue;
      c = pool[pick].pad_to(n);
      auto m = c.m();
      std::shuffle(m.begin(), m.end(), rng);
      c = fatpoints::DivisorClass(c.t(), m);
    } else if (pick < pool.size() + n) {
      c = fatpoints::DivisorClass::exceptional(pick - pool.size() + 1, n);
    } else {
      c = -fatpoints::canonical_class(n);
    }
    const std::int64_t mult = 1 + static_cast<std::int64_t>(rng() % 4);
    if (f.t() + mult * c.t() > max_t) continue;
    f = f + mult * c;
  }
  return f;
}

}  // namespace oracle

#endif  // FATPOINTS_TESTS_SUPPORT_HPP_
