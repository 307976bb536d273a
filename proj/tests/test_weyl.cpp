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
#include <set>

#include "doctest.h"
#include "fatpoints/weyl.hpp"
#include "support.hpp"

using namespace fatpoints;

namespace {

const DivisorClass kF208(208, {77, 77, 77, 77, 77, 77, 77, 44, 11, 11, 11});

bool status_holds(const ReducedForm& r) {
  const auto& f = r.reduced;
  switch (r.status) {
    case ReductionStatus::NegL: return f.t() < 0;
    case ReductionStatus::NegLine: return f.t() >= 0 && f.t() < f.m(1);
    case ReductionStatus::InChamber:
      if (f.t() < f.m(1) + f.m(2) + f.m(3)) return false;
      for (std::size_t i = 1; i < f.n(); ++i) {
        if (f.m(i) < f.m(i + 1)) return false;
      }
      return true;
  }
  return false;
}

std::vector<oracle::Vec> as_vecs(const std::vector<DivisorClass>& cs) {
  std::vector<oracle::Vec> out;
  for (const auto& c : cs) out.push_back(oracle::canonical(c.t(), c.m()));
  return out;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(apply_generator(kF208, Generator::cremona()) ==
        DivisorClass(185, {54, 54, 54, 77, 77, 77, 77, 44, 11, 11, 11}));
  CHECK(apply_generator(DivisorClass(9, {2, 5}), Generator::swap(1)) == DivisorClass(9, {5, 2}));
  CHECK(apply_generator(DivisorClass::line(3), Generator::cremona()) == DivisorClass(2, {1, 1, 1}));
  CHECK_THROWS(apply_generator(DivisorClass::line(3), Generator::swap(3)));
}

TEST_CASE("reduction of the eleven point scheme") {
  const auto r208 = reduce(kF208);
  CHECK(r208.status == ReductionStatus::NegL);
  CHECK(r208.reduced == DivisorClass(-23, {8, -1, -5, -5, -5, -5, -8, -8, -14, -17, -17}));
  const auto r209 = reduce(kF208 + DivisorClass::line(11));
  CHECK(r209.reduced == 11 * DivisorClass::exceptional(11, 11));
  const auto r210 = reduce(kF208 + 2 * DivisorClass::line(11));
  CHECK(r210.status == ReductionStatus::InChamber);
  CHECK(r210.reduced == DivisorClass(27, {8, 8, 8, 8, 5, 5, 5, 5, 5, 5, 5}));
  const std::pair<const ReducedForm*, DivisorClass> runs[] = {
      {&r208, kF208},
      {&r209, kF208 + DivisorClass::line(11)},
      {&r210, kF208 + 2 * DivisorClass::line(11)}};
  for (const auto& [r, f] : runs) {
    CHECK(status_holds(*r));
    CHECK(apply_word(r->word, f) == r->reduced);
  }
}

TEST_CASE("stopping at the first negative line") {
  const auto r = reduce(kF208, ReduceStop::FirstNegative);
  CHECK(r.status != ReductionStatus::InChamber);
  CHECK(status_holds(r));
  CHECK(apply_word(r.word, kF208) == r.reduced);
}

TEST_CASE("words") {
  const WeylWord w = WeylWord::parse("s0 s2 s1 s0");
  CHECK(w.size() == 4);
  CHECK(w.to_string() == "s0 s2 s1 s0");
  CHECK(WeylWord::parse("").empty());
  CHECK_THROWS_AS(WeylWord::parse("s0 t2"), std::invalid_argument);
  const DivisorClass f(7, {3, 2, 2, 1});
  CHECK(apply_word(WeylWord{}, f) == f);
  CHECK(apply_word(w.reversed(), apply_word(w, f)) == f);
  CHECK(apply_word(w, apply_word(w, f), true) == f);
}

TEST_CASE("inverse word recovers the free part") {
  const DivisorClass f102(102, {50, 50, 38, 38, 26, 26, 22, 18, 14, 14});
  const auto r = reduce(f102);
  const DivisorClass h(6, {2, 2, 2, 2, 2, 2, 2, 2, 0, 0});
  CHECK(r.reduced == DivisorClass(6, {2, 2, 2, 2, 2, 2, 2, 2, -2, -6}));
  CHECK(apply_word(r.word, h, true) == DivisorClass(38, {18, 18, 14, 14, 10, 10, 8, 8, 6, 6}));
}

TEST_CASE("exceptional membership") {
  CHECK(is_exceptional(DivisorClass::exceptional(1, 3)));
  CHECK(is_exceptional(DivisorClass(1, {1, 1, 0})));
  CHECK(is_exceptional(DivisorClass(13, {5, 5, 5, 5, 5, 5, 4, 1, 1, 1, 1})));
  CHECK_FALSE(is_exceptional(DivisorClass(2, {1, 1, 1})));
  CHECK_FALSE(is_exceptional(DivisorClass::line(3)));
  // numerically exceptional but not in the orbit
  CHECK_FALSE(is_exceptional(DivisorClass(3, {3, 1, 1, 1, 1, 1})));
}

TEST_CASE("enumeration matches exhaustive search") {
  CHECK(enumerate_exceptional(1).size() == 1);
  const auto three = as_vecs(enumerate_exceptional(3));
  CHECK(std::set<oracle::Vec>(three.begin(), three.end()) ==
        std::set<oracle::Vec>{{1, 1, 1}, {2, 1, 1, 1, 1, 1}, {3, 2, 1, 1, 1, 1, 1, 1}});
  for (std::int64_t t : {1, 3, 6, 10, 12}) {
    const auto got = as_vecs(enumerate_exceptional(t));
    const std::set<oracle::Vec> mine(got.begin(), got.end());
    CHECK(mine.size() == got.size());
    CHECK(mine == oracle::brute_exceptional(t));
  }
}

TEST_CASE("enumerated classes are exceptional and counts grow") {
  std::size_t last = 0;
  for (std::int64_t t = 1; t <= 14; ++t) {
    const auto all = enumerate_exceptional(t);
    CHECK(all.size() >= last);
    last = all.size();
    for (const auto& e : all) {
      const auto k = canonical_class(e.n());
      CHECK(intersect(e, e) == -1);
      CHECK(intersect(k, e) == -1);
      CHECK(e.t() >= 1);
      CHECK(e.t() <= t);
      CHECK(e == e.sorted().stripped());
    }
  }
}

TEST_CASE("orbit of the line") {
  const auto id = orbit_of_line(DivisorClass::line(3));
  REQUIRE(id.has_value());
  CHECK(apply_word(*id, DivisorClass::line(3)) == DivisorClass::line(3));
  CHECK_FALSE(orbit_of_line(DivisorClass(2, {1, 1, 0})).has_value());
  const auto two = orbit_of_line(DivisorClass(2, {1, 1, 1}));
  REQUIRE(two.has_value());
  CHECK(apply_word(*two, DivisorClass::line(3)) == DivisorClass(2, {1, 1, 1}));

  const DivisorClass c(12, {5, 5, 5, 4, 4, 4, 4, 2});
  const auto w = orbit_of_line(c);
  REQUIRE(w.has_value());
  CHECK(apply_word(*w, DivisorClass::line(8)) == c);
  std::set<DivisorClass> images;
  for (std::size_t i = 1; i <= 8; ++i) images.insert(apply_word(*w, DivisorClass::exceptional(i, 8)));
  const std::set<DivisorClass> listed = {
      DivisorClass(5, {2, 2, 2, 2, 1, 2, 2, 1}), DivisorClass(5, {2, 2, 2, 2, 2, 1, 2, 1}),
      DivisorClass(5, {2, 2, 2, 1, 2, 2, 2, 1}), DivisorClass(5, {2, 2, 2, 2, 2, 2, 1, 1}),
      DivisorClass(4, {2, 2, 2, 1, 1, 1, 1, 1}), DivisorClass(3, {1, 1, 2, 1, 1, 1, 1, 0}),
      DivisorClass(3, {2, 1, 1, 1, 1, 1, 1, 0}), DivisorClass(3, {1, 2, 1, 1, 1, 1, 1, 0})};
  CHECK(images == listed);
}

TEST_CASE("generators preserve the form and the canonical class") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 9;
    const auto f = oracle::random_class(rng, n, 40), g = oracle::random_class(rng, n, 40);
    const auto w = oracle::random_word(rng, n, 1 + rng() % 20);
    CHECK(intersect(apply_word(w, f), apply_word(w, g)) == intersect(f, g));
    CHECK(apply_word(w, canonical_class(n)) == canonical_class(n));
    CHECK(apply_word(w, apply_word(w, f), true) == f);
  }
}

TEST_CASE("reduction is idempotent and its status is an orbit invariant") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    const auto f = oracle::random_class(rng, n, 30);
    const auto r = reduce(f);
    CHECK(status_holds(r));
    CHECK(apply_word(r.word, f) == r.reduced);
    const auto again = reduce(r.reduced);
    CHECK(again.reduced == r.reduced);
    CHECK(again.status == r.status);
    const auto img = apply_word(oracle::random_word(rng, n, 1 + rng() % 20), f);
    const auto r2 = reduce(img);
    CHECK(r2.status == r.status);
    if (r.status == ReductionStatus::InChamber) CHECK(r2.reduced == r.reduced);
  }
}
