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

#include "fatpoints/betti.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fatpoints/weyl.hpp"

namespace fatpoints {

namespace {

std::int64_t h0_at(const FatPointScheme& z, std::int64_t t) {
  return t < 0 ? 0 : expected_h0(class_of(z, t));
}

// nullopt when the expected values are inconsistent for this class.
std::optional<std::int64_t> h1_or_none(const DivisorClass& f) {
  try {
    return expected_h1(f);
  } catch (const ShghInconsistent&) {
    return std::nullopt;
  }
}

BettiEntry exact(std::int64_t v, std::string path) {
  BettiEntry e;
  e.lo = e.hi = v;
  e.path = std::move(path);
  return e;
}

struct Candidate {
  DivisorClass h;
  std::vector<Component> components;
};

// Ways of writing G = H + N with N supported on disjoint exceptional curves,
// read off the reduced class of G. Only the first one that passes the checks
// in betti_alpha_plus_one is used.
std::vector<Candidate> split_candidates(const DivisorClass& g) {
  std::vector<Candidate> out;
  if (const auto d = decompose(g)) {
    out.push_back({d->free_part, d->components});
    return out;
  }
  const ReducedForm r = reduce(g, ReduceStop::FirstNegative);
  const auto& m = r.reduced.m();
  const std::size_t n = m.size();
  auto back = [&](const DivisorClass& c) { return apply_word(r.word, c, true); };
  auto make = [&](std::int64_t line_coeff, bool with_points, std::size_t from) {
    DivisorClass fixed = DivisorClass::zero(n);
    std::vector<Component> comps;
    if (line_coeff > 0) {
      std::vector<std::int64_t> lm(n, 0);
      lm[0] = lm[1] = 1;
      const DivisorClass line(1, std::move(lm));
      fixed = fixed + line_coeff * line;
      comps.push_back({back(line), line_coeff});
    }
    if (with_points) {
      for (std::size_t i = from; i < n; ++i) {
        if (m[i] >= 0) continue;
        const DivisorClass e = DivisorClass::exceptional(i + 1, n);
        fixed = fixed + (-m[i]) * e;
        comps.push_back({back(e), -m[i]});
      }
    }
    out.push_back({back(r.reduced - fixed), std::move(comps)});
  };
  if (r.status == ReductionStatus::NegLine) {
    const std::int64_t c = r.reduced.t() - m[0] - m[1];
    if (c < 0) {
      make(-c, false, 2);
      make(-c, true, 2);
    }
  }
  make(0, true, 0);
  return out;
}

bool valid_split(const Candidate& cand) {
  const std::size_t n = cand.h.n();
  if (intersect(cand.h, DivisorClass::line(n)) < 0) return false;
  for (std::size_t i = 0; i < cand.components.size(); ++i) {
    const DivisorClass& ci = cand.components[i].curve;
    if (!is_exceptional(ci) || intersect(cand.h, ci) != 0) return false;
    for (std::size_t j = i + 1; j < cand.components.size(); ++j) {
      if (intersect(ci, cand.components[j].curve) != 0) return false;
    }
  }
  const auto h1 = h1_or_none(cand.h);
  return h1 && *h1 == 0;
}

}  // namespace

std::string to_string(BettiFlag f) {
  switch (f) {
    case BettiFlag::Exact: return "Exact";
    case BettiFlag::ConjecturalExact: return "ConjecturalExact";
    case BettiFlag::Interval: return "Interval";
    case BettiFlag::Unknown: return "Unknown";
  }
  return "?";
}

ComponentTerm component_term(const Component& c, const SplittingOptions& opts) {
  ComponentTerm t;
  t.curve = c.curve;
  t.degree = c.curve.t();
  t.exponent = c.multiplicity;
  t.clipped = std::min(c.multiplicity, t.degree);
  if (t.degree >= 1) {
    const SplittingResult s = splitting_type(c.curve, opts);
    t.type = s.type;
    t.forced = s.forced;
  }
  const auto [a, b] = t.type;
  t.value = binom2(t.clipped - a) + binom2(t.clipped - b);
  t.conjectural = t.clipped > a + 2 && b - a > 2 && a != t.degree - c.curve.max_multiplicity();
  return t;
}

ExpectedBetti expected_betti(const FatPointScheme& z, std::int64_t i,
                             const SplittingOptions& opts) {
  const std::int64_t a = alpha(z);
  if (i < a + 2) {
    throw std::invalid_argument("expected_betti needs i >= alpha + 2 = " +
                                std::to_string(a + 2));
  }
  const auto d = decompose(class_of(z, i - 2));
  if (!d) throw std::logic_error("F_(i-2) is not in Psi although i-2 >= alpha");
  ExpectedBetti out;
  const std::size_t n = d->free_part.n();
  DivisorClass clipped = DivisorClass::zero(n);
  for (const Component& c : d->components) {
    ComponentTerm t = component_term(c, opts);
    clipped = clipped + t.clipped * t.curve;
    out.value += t.value;
    out.conjectural = out.conjectural || t.conjectural;
    out.provisional = out.provisional || !t.forced;
    out.terms.push_back(std::move(t));
  }
  out.correction = h0_at(z, i) -
                   expected_h0(2 * DivisorClass::line(n) + d->free_part + clipped);
  out.value += out.correction;
  return out;
}

std::int64_t BettiBoundData::value() const {
  std::int64_t v = 0;
  for (const BoundComponent& c : components) {
    const std::int64_t drop = c.c1 - c.c2;
    v += c.d * drop - binom2(drop);
    v += binom2(c.c - c.c1 - c.type.a) + binom2(c.c - c.c1 - c.type.b);
  }
  return v;
}

BettiBoundData bettibound_data(const FatPointScheme& z, std::int64_t t,
                               const SplittingOptions& opts) {
  if (t <= alpha(z)) throw std::invalid_argument("bettibound_data needs t > alpha");
  const auto before = fixed_part(z, t - 1);
  const auto at = fixed_part(z, t);
  const auto after = fixed_part(z, t + 1);
  auto exponent = [](const std::vector<Component>& parts, const DivisorClass& c) {
    for (const Component& p : parts) {
      if (p.curve == c) return p.multiplicity;
    }
    return std::int64_t{0};
  };
  BettiBoundData out;
  out.t = t;
  for (const Component& p : before) {
    BoundComponent b;
    b.curve = p.curve;
    b.d = p.curve.t();
    b.c = p.multiplicity;
    b.c1 = exponent(at, p.curve);
    b.c2 = exponent(after, p.curve);
    if (b.d >= 1) {
      const SplittingResult s = splitting_type(p.curve, opts);
      b.type = s.type;
      b.forced = s.forced;
    }
    out.components.push_back(std::move(b));
  }
  return out;
}

BettiEntry betti_alpha_plus_one(const FatPointScheme& z, const SplittingOptions& opts) {
  const std::int64_t a = alpha(z);
  const DivisorClass f = class_of(z, a);
  const std::size_t n = f.n();
  const std::int64_t h = h0_at(z, a);
  const std::int64_t h_next = h0_at(z, a + 1);

  if (h == 1) return exact(h_next - 3, "single generator");

  // Kernel bounds l <= dim ker <= l + q, at every point.
  std::int64_t ker_lo = 0;
  std::int64_t ker_hi = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> l_values;
  for (std::size_t i = 1; i <= n; ++i) {
    const DivisorClass ei = DivisorClass::exceptional(i, n);
    const std::int64_t l = expected_h0(f - (DivisorClass::line(n) - ei));
    const std::int64_t q = expected_h0(f - ei);
    ker_lo = std::max(ker_lo, l);
    ker_hi = std::min(ker_hi, l + q);
    l_values.push_back(l);
  }
  if (ker_hi == 0) return exact(h_next - 3 * h, "injective");

  for (const Candidate& cand : split_candidates(class_of(z, a - 1))) {
    if (!valid_split(cand)) continue;
    const std::size_t cn = cand.h.n();
    BettiEntry e;
    e.path = "decomposition";
    DivisorClass clipped = DivisorClass::zero(cn);
    std::int64_t value = 0;
    bool conjectural = false;
    for (const Component& c : cand.components) {
      const ComponentTerm t = component_term(c, opts);
      clipped = clipped + t.clipped * t.curve;
      value += t.value;
      conjectural = conjectural || t.conjectural;
      e.provisional = e.provisional || !t.forced;
      e.terms.push_back(t);
    }
    value += h0_at(z, a + 1) -
             expected_h0(2 * DivisorClass::line(cn) + cand.h + clipped);
    e.lo = e.hi = value;
    e.flag = conjectural ? BettiFlag::ConjecturalExact : BettiFlag::Exact;
    return e;
  }

  BettiEntry e;
  const std::int64_t base = h_next - 3 * h;
  e.lo = std::max<std::int64_t>(0, base + ker_lo);
  e.hi = base + ker_hi;
  const auto h1 = h1_or_none(f);
  if (!h1 || *h1 != 0) {
    e.flag = BettiFlag::Unknown;
    e.path = "kernel bounds";
    return e;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const DivisorClass ei = DivisorClass::exceptional(i, n);
    const auto lstar = h1_or_none(f - (DivisorClass::line(n) - ei));
    const auto qstar = h1_or_none(f - ei);
    e.lo = std::max(e.lo, a + 2 - 2 * h + l_values[i - 1]);
    if (lstar && qstar) e.hi = std::min(e.hi, *lstar + *qstar);
  }
  e.path = "cokernel bounds";
  e.flag = e.lo == e.hi ? BettiFlag::Exact : BettiFlag::Interval;
  return e;
}

std::int64_t third_difference(const FatPointScheme& z, std::int64_t i) {
  return h0_at(z, i) - 3 * h0_at(z, i - 1) + 3 * h0_at(z, i - 2) - h0_at(z, i - 3);
}

std::int64_t regularity(const FatPointScheme& z) {
  const std::int64_t a = alpha(z);
  const std::int64_t cap =
      a + std::accumulate(z.mults().begin(), z.mults().end(), std::int64_t{0}) + 3;
  for (std::int64_t t = a; t <= cap; ++t) {
    const auto h1 = h1_or_none(class_of(z, t));
    if (h1 && *h1 == 0) return t;
  }
  throw std::logic_error("no vanishing h^1 found");
}

ResolutionTable assemble_resolution(const FatPointScheme& z, std::optional<std::int64_t> i_max,
                                    const SplittingOptions& opts) {
  ResolutionTable table;
  table.alpha = alpha(z);
  const std::int64_t a = table.alpha;
  table.regularity = regularity(z);
  table.i_max = i_max.value_or(table.regularity + 3);
  if (table.i_max < a + 2) throw std::invalid_argument("i_max must be at least alpha + 2");

  for (std::int64_t t = 0; t <= table.i_max; ++t) table.hilbert[t] = h0_at(z, t);

  for (std::int64_t i = a; i <= table.i_max; ++i) {
    BettiEntry g;
    if (i == a) {
      g = exact(table.hilbert[a], "hilbert");
    } else if (i == a + 1) {
      g = betti_alpha_plus_one(z, opts);
    } else {
      const auto h1 = h1_or_none(class_of(z, i - 2));
      if (h1 && *h1 == 0) {
        g = exact(0, "vanishing");
      } else {
        const ExpectedBetti eb = expected_betti(z, i, opts);
        g = exact(eb.value, "expected");
        g.flag = eb.conjectural ? BettiFlag::ConjecturalExact : BettiFlag::Exact;
        g.provisional = eb.provisional;
        g.terms = eb.terms;
      }
    }
    const std::int64_t diff = third_difference(z, i);
    BettiEntry s = g;
    s.lo = g.lo - diff;
    s.hi = g.hi - diff;
    s.path = "g - third difference";
    s.terms.clear();
    table.g[i] = std::move(g);
    table.s[i] = std::move(s);
  }
  return table;
}

}  // namespace fatpoints
