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


#include <random>

#include "doctest.h"
#include "fatpoints/cokernel.hpp"
#include "fatpoints/linsys.hpp"
#include "fatpoints/weyl.hpp"
#include "support.hpp"

using namespace fatpoints;

namespace {

const FatPointScheme kZ3 = FatPointScheme::parse("77x7,44,11,11,11");
const FatPointScheme kZ4 = FatPointScheme::parse("50,50,38,38,26,26,22,18,14,14");
const FatPointScheme kZ8 = FatPointScheme::parse("48,33,33,33,32,32,32,24,16");
const DivisorClass kC1(8, {4, 4, 3, 3, 2, 2, 1, 2, 1, 1});
const DivisorClass kC2(8, {4, 4, 3, 3, 2, 2, 2, 1, 1, 1});

}  // namespace

TEST_CASE("decomposition examples") {
  const auto d209 = decompose(class_of(kZ3, 209));
  REQUIRE(d209.has_value());
  CHECK(d209->free_part == DivisorClass::zero(11));
  CHECK(d209->fixed_part() == class_of(kZ3, 209));

  const auto d102 = decompose(class_of(kZ4, 102));
  REQUIRE(d102.has_value());
  CHECK(d102->free_part == DivisorClass(38, {18, 18, 14, 14, 10, 10, 8, 8, 6, 6}));
  REQUIRE(d102->components.size() == 2);
  std::set<std::pair<DivisorClass, std::int64_t>> comps;
  for (const auto& c : d102->components) comps.insert({c.curve, c.multiplicity});
  CHECK(comps == std::set<std::pair<DivisorClass, std::int64_t>>{{kC1, 2}, {kC2, 6}});

  const DivisorClass nef(10, {3, 3, 3, 1});
  const auto dn = decompose(nef);
  REQUIRE(dn.has_value());
  CHECK(dn->free_part == nef);
  CHECK(dn->components.empty());

  CHECK_FALSE(decompose(class_of(kZ3, 208)).has_value());
}

TEST_CASE("expected h0 and h1") {
  CHECK(expected_h0(class_of(kZ3, 208)) == 0);
  CHECK(expected_h0(class_of(kZ3, 209)) == 1);
  CHECK(expected_h0(class_of(kZ4, 103)) == 92);
  CHECK(expected_h0(class_of(kZ4, 104)) == 197);
  CHECK(expected_h1(DivisorClass::zero(3)) == 0);
  CHECK(expected_h1(DivisorClass(1, {0, 1, 1, 1, 0, 0, 0, 0, 0})) == 0);
  CHECK_FALSE(decompose(DivisorClass(1, {0, 1, 1, 1, 0, 0, 0, 0, 0})).has_value());
  CHECK(expected_h1(-DivisorClass::exceptional(1, 1)) == 0);
  // double line through two points: h0 = 1, chi = 0; through three: h0 = 0, chi = -3
  CHECK(expected_h1(DivisorClass(2, {2, 2})) == 1);
  CHECK(expected_h1(DivisorClass(2, {2, 2, 2})) == 3);
}

TEST_CASE("Hilbert functions") {
  const auto r4 = hilbert(kZ4, 95, 105);
  CHECK(r4.alpha == 102);
  for (const auto& row : r4.rows) {
    if (row.t < 102) CHECK(row.value == 0);
  }
  CHECK(r4.rows[102 - 95].value == 4);
  CHECK(r4.rows[103 - 95].value == 92);
  CHECK(r4.rows[104 - 95].value == 197);

  const auto r8 = hilbert(kZ8, 97, 99);
  CHECK(r8.alpha == 98);
  CHECK(r8.rows[0].value == 0);
  CHECK(r8.rows[1].value == 71);

  const FatPointScheme pt({1});
  CHECK(alpha(pt) == 1);
  for (const auto& row : hilbert(pt, 1, 30).rows) {
    CHECK(row.value == (row.t + 2) * (row.t + 1) / 2 - 1);
  }
  CHECK(hilbert(kZ3, 208, 210).rows[1].value == 1);
}

TEST_CASE("fixed parts") {
  const auto f102 = fixed_part(kZ4, 102);
  CHECK(f102.size() == 2);
  CHECK(fixed_part(kZ4, 103).empty());
  CHECK(fixed_part(FatPointScheme({1}), 1).empty());
  CHECK_THROWS_AS(fixed_part(kZ4, 100), std::invalid_argument);
}

TEST_CASE("expected h0 is a Weyl invariant") {
  std::mt19937_64 rng(31);
  const auto pool = enumerate_exceptional(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    // half effective-ish, half arbitrary
    const DivisorClass f = trial % 2 ? oracle::random_in_psi(rng, pool, n, 30)
                                     : oracle::random_class(rng, n, 15);
    const auto w = oracle::random_word(rng, n, 1 + rng() % 20);
    CHECK(expected_h0(apply_word(w, f)) == expected_h0(f));
  }
}

TEST_CASE("decompositions are orthogonal sums of exceptional curves") {
  std::mt19937_64 rng(32);
  const auto pool = enumerate_exceptional(8);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t n = 3 + rng() % 8;
    const DivisorClass f = oracle::random_in_psi(rng, pool, n, 30);
    if (f.t() < 0) continue;
    ++checked;
    const auto d = decompose(f);
    REQUIRE(d.has_value());
    CHECK(d->free_part + d->fixed_part() == f);
    const auto& h = d->free_part;
    CHECK(intersect(h, DivisorClass::line(n)) >= 0);
    for (std::size_t a = 0; a < d->components.size(); ++a) {
      const auto& c = d->components[a];
      CHECK(c.multiplicity > 0);
      CHECK(is_exceptional(c.curve));
      CHECK(intersect(h, c.curve) == 0);
      for (std::size_t b = a + 1; b < d->components.size(); ++b) {
        CHECK(intersect(c.curve, d->components[b].curve) == 0);
      }
    }
    // H meets every exceptional class nonnegatively (checked on E_i and a
    // sample of low degree curves)
    for (std::size_t i = 1; i <= n; ++i) CHECK(intersect(h, DivisorClass::exceptional(i, n)) >= 0);
    for (const auto& e : pool) {
      if (e.n() > n) continue;
      CHECK(intersect(h, e.pad_to(n)) >= 0);
    }
  }
}

TEST_CASE("expected dimensions match fat point ideals on random points") {
  std::mt19937_64 rng(33);
  int schemes = 0;
  while (schemes < 100) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<std::int64_t> m(n);
    for (auto& x : m) x = static_cast<std::int64_t>(rng() % 5);
    if (*std::max_element(m.begin(), m.end()) == 0) continue;
    ++schemes;
    const FatPointScheme z(m);
    const std::int64_t a = alpha(z);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto config = PointConfiguration::random(PrimeField(31991), n, seed * 1000 + schemes);
      for (std::int64_t t = a; t <= a + 3; ++t) {
        const auto dim = nullspace(fat_point_matrix(config, t, m)).size();
        INFO("scheme " << z.to_string() << " t=" << t << " seed " << seed);
        CHECK(static_cast<std::int64_t>(dim) == expected_h0(class_of(z, t)));
      }
      if (a > 0) CHECK(nullspace(fat_point_matrix(config, a - 1, m)).empty());
    }
  }
}
