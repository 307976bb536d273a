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

#include "fatpoints/splitting.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace fatpoints {

namespace {

using Point = std::array<Fp, 3>;
using Mat3 = std::array<std::array<Fp, 3>, 3>;

// Thrown inside a trial when the random points are special.
struct Degenerate {
  std::string why;
};

Fp det3(const PrimeField& f, const Mat3& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(a[r0][c0], a[r1][c1]), f.mul(a[r0][c1], a[r1][c0]));
  };
  Fp d = f.mul(a[0][0], minor(1, 2, 1, 2));
  d = f.sub(d, f.mul(a[0][1], minor(1, 2, 0, 2)));
  d = f.add(d, f.mul(a[0][2], minor(1, 2, 0, 1)));
  return d;
}

Mat3 inverse3(const PrimeField& f, const Mat3& a) {
  const Fp det = det3(f, a);
  if (det == 0) throw Degenerate{"collinear Cremona centers"};
  const Fp s = f.inv(det);
  Mat3 out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // Cofactor of a[c][r].
      const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      const Fp cof = f.sub(f.mul(a[r0][c0], a[r1][c1]), f.mul(a[r0][c1], a[r1][c0]));
      out[r][c] = f.mul(cof, s);
    }
  }
  return out;
}

Point apply3(const PrimeField& f, const Mat3& a, const Point& p) {
  Point out{};
  for (int r = 0; r < 3; ++r) {
    Fp acc = 0;
    for (int c = 0; c < 3; ++c) acc = f.add(acc, f.mul(a[r][c], p[c]));
    out[r] = acc;
  }
  return out;
}

using Triple = std::array<BinaryForm, 3>;

void remove_common_factor(Triple& phi) {
  BinaryForm g(phi[0].field());
  for (const BinaryForm& x : phi) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x.monic() : form_gcd(g, x);
  }
  if (g.is_zero()) throw Degenerate{"parametrization vanished"};
  if (g.degree() == 0) return;
  for (BinaryForm& x : phi) x = form_divide(x, g);
}

std::size_t triple_degree(const Triple& phi) {
  for (const BinaryForm& x : phi) {
    if (!x.is_zero()) return x.degree();
  }
  throw Degenerate{"parametrization vanished"};
}

struct CremonaStep {
  Mat3 centers;  // columns are the three centers
  std::int64_t degree_before;
};

SplittingType run_trial(const DivisorClass& e3, const DegreeOneReduction& red,
                        const PointConfiguration& config) {
  const PrimeField& f = config.field;
  std::vector<Point> pts = config.points;
  DivisorClass cls = e3;
  std::vector<CremonaStep> steps;

  for (const Generator& g : red.word.generators()) {
    if (g.kind == Generator::Kind::Swap) {
      std::swap(pts[g.index - 1], pts[g.index]);
    } else {
      Mat3 a{};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) a[r][c] = pts[c][r];
      }
      const Mat3 ainv = inverse3(f, a);
      for (std::size_t k = 3; k < pts.size(); ++k) {
        const Point v = apply3(f, ainv, pts[k]);
        if (v[0] == 0 || v[1] == 0 || v[2] == 0) {
          throw Degenerate{"point on a line through two centers"};
        }
        pts[k] = {f.mul(v[1], v[2]), f.mul(v[0], v[2]), f.mul(v[0], v[1])};
      }
      pts[0] = {1, 0, 0};
      pts[1] = {0, 1, 0};
      pts[2] = {0, 0, 1};
      steps.push_back({a, cls.t()});
    }
    cls = apply_generator(cls, g);
  }

  // The reduced class is L - E_1 - E_2: the line through the first two points.
  Triple phi{BinaryForm::linear(f, pts[0][0], pts[1][0]),
             BinaryForm::linear(f, pts[0][1], pts[1][1]),
             BinaryForm::linear(f, pts[0][2], pts[1][2])};
  remove_common_factor(phi);
  if (triple_degree(phi) != 1) throw Degenerate{"coincident points"};

  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const Triple s{phi[1] * phi[2], phi[0] * phi[2], phi[0] * phi[1]};
    Triple next{BinaryForm(f), BinaryForm(f), BinaryForm(f)};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) next[r] = next[r] + s[c].scaled(it->centers[r][c]);
    }
    remove_common_factor(next);
    if (static_cast<std::int64_t>(triple_degree(next)) != it->degree_before) {
      throw Degenerate{"degree mismatch after removing the common factor"};
    }
    phi = std::move(next);
  }

  const std::int64_t d = e3.t();
  if (static_cast<std::int64_t>(triple_degree(phi)) != d) {
    throw Degenerate{"final degree mismatch"};
  }
  std::int64_t a = 0;
  try {
    a = static_cast<std::int64_t>(min_syzygy_degree(phi[0], phi[1], phi[2]));
  } catch (const std::invalid_argument& err) {
    throw Degenerate{err.what()};
  }
  const SplittingType type{a, d - a};
  const auto bounds = split_bounds(e3);
  if (std::find(bounds.begin(), bounds.end(), type) == bounds.end()) {
    throw Degenerate{"syzygy degree outside the closed-form interval"};
  }
  return type;
}

}  // namespace

std::string SplittingType::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

PointConfiguration PointConfiguration::random(PrimeField field, std::size_t n,
                                              std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 gen(seq);
  std::uniform_int_distribution<Fp> coord(0, field.modulus() - 1);
  PointConfiguration config{field, seed, {}};
  config.points.reserve(n);
  while (config.points.size() < n) {
    Point p{coord(gen), coord(gen), coord(gen)};
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) continue;
    config.points.push_back(p);
  }
  return config;
}

std::vector<SplittingType> split_bounds(const DivisorClass& e) {
  if (!is_exceptional(e)) throw std::invalid_argument("not exceptional: " + e.to_string());
  const std::int64_t d = e.t();
  if (d == 0) return {{0, 0}};
  const std::int64_t m = e.max_multiplicity();
  const std::int64_t lo = std::min(m, d - m);
  const std::int64_t hi = std::min(d - m, d / 2);
  std::vector<SplittingType> out;
  for (std::int64_t a = lo; a <= hi; ++a) out.push_back({a, d - a});
  return out;
}

SplittingType splitting_trial(const DivisorClass& e, PrimeField field, std::uint64_t seed,
                              std::uint64_t trial, int retry_cap, int* retries) {
  const DivisorClass e3 = e.n() < 3 ? e.pad_to(3) : e;
  const DegreeOneReduction red = reduce_to_degree_one(e3);
  std::string last;
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    const auto config = PointConfiguration::random(
        field, e3.n(), seed, (trial << 16) | static_cast<std::uint64_t>(attempt));
    try {
      return run_trial(e3, red, config);
    } catch (const Degenerate& d) {
      last = d.why;
      if (retries) ++*retries;
    }
  }
  throw SplittingFailure("splitting of " + e.to_string() + " failed after " +
                         std::to_string(retry_cap) + " draws: " + last);
}

SplittingResult compute_splitting(const DivisorClass& e, const SplittingOptions& opts) {
  if (!is_exceptional(e)) throw std::invalid_argument("not exceptional: " + e.to_string());
  if (e.t() < 1) throw std::invalid_argument("class of degree < 1: " + e.to_string());
  if (opts.trials < 1) throw std::invalid_argument("trials must be positive");
  const PrimeField field(opts.prime);
  SplittingResult out;
  out.degree = e.t();
  out.provisional = true;
  std::map<SplittingType, int> votes;
  for (int k = 0; k < opts.trials; ++k) {
    const SplittingType s = splitting_trial(e, field, opts.seed, static_cast<std::uint64_t>(k),
                                            opts.retry_cap, &out.retries);
    out.per_trial.push_back(s);
    ++votes[s];
  }
  int best = 0;
  for (const auto& [s, count] : votes) {
    if (count > best) {
      best = count;
      out.type = s;
    }
  }
  return out;
}

SplittingResult splitting_type(const DivisorClass& e, const SplittingOptions& opts) {
  const auto bounds = split_bounds(e);
  if (bounds.size() == 1) {
    SplittingResult out;
    out.type = bounds.front();
    out.degree = e.t();
    out.forced = true;
    return out;
  }
  return compute_splitting(e, opts);
}

std::int64_t defect_sum(const WeylWord& w, std::size_t n, const SplittingOptions& opts) {
  const DivisorClass c = apply_word(w, DivisorClass::line(n));
  if (intersect(c, c) != 1) throw std::invalid_argument("w(L)^2 != 1");
  std::int64_t total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const DivisorClass ci = apply_word(w, DivisorClass::exceptional(i, n));
    if (ci.t() == 0) continue;
    const SplittingType s = splitting_type(ci, opts).type;
    total += (s.a * s.a - s.a) / 2 + (s.b * s.b - s.b) / 2;
  }
  return total;
}

std::int64_t genus_score(const SplittingType& s) {
  return (s.a - 1) * (s.a - 2) / 2 + (s.b - 1) * (s.b - 2) / 2;
}

SplittingPrediction predict_splitting(const DivisorClass& c, const SplittingOptions& opts) {
  DivisorClass cur = c.n() < 3 ? c.pad_to(3) : c;
  if (intersect(cur, cur) == -1 && is_exceptional(cur)) {
    // Dropping two simple points leaves the same plane curve with C^2 = 1.
    std::vector<std::int64_t> m = cur.m();
    int dropped = 0;
    for (auto it = m.rbegin(); it != m.rend() && dropped < 2; ++it) {
      if (*it == 1) {
        *it = 0;
        ++dropped;
      }
    }
    if (dropped < 2) {
      throw std::invalid_argument("exceptional class without two simple points: " +
                                  c.to_string());
    }
    cur = DivisorClass(cur.t(), std::move(m));
  }
  if (intersect(cur, cur) != 1) {
    throw std::invalid_argument("class is neither C^2 = 1 nor exceptional: " + c.to_string());
  }
  const auto w = orbit_of_line(cur);
  if (!w) throw std::invalid_argument("class is not in the orbit of L: " + c.to_string());

  SplittingPrediction out;
  out.curve = cur;
  const std::int64_t d = cur.t();
  const std::int64_t m = cur.max_multiplicity();
  const std::int64_t lo = std::min(m, d - m);
  const std::int64_t hi = std::min(d - m, d / 2);
  if (lo > hi) throw ConjectureViolation("empty closed-form interval for " + c.to_string());
  if (lo == hi) {
    out.type = {lo, d - lo};
    out.forced = true;
    out.candidates.push_back({out.type, genus_score(out.type)});
    return out;
  }
  out.defect = defect_sum(*w, cur.n(), opts);
  bool found = false;
  std::int64_t best = 0;
  for (std::int64_t a = lo; a <= hi; ++a) {
    const SplittingType s{a, d - a};
    const std::int64_t score = genus_score(s);
    out.candidates.push_back({s, score});
    if (score >= out.defect && (!found || score < best)) {
      found = true;
      best = score;
      out.type = s;
    }
  }
  if (!found) {
    throw ConjectureViolation("no splitting type of " + c.to_string() +
                              " meets the defect sum " + std::to_string(out.defect));
  }
  return out;
}

bool cokernel_equality_known(const DivisorClass& e, const SplittingType& s) {
  return s.b - s.a <= 2 || s.a == e.t() - e.max_multiplicity();
}

}  // namespace fatpoints
