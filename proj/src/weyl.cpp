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

#include "fatpoints/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

namespace {

DivisorClass at_least_three(const DivisorClass& f) {
  return f.n() < 3 ? f.pad_to(3) : f;
}

// Bubble sort into descending order, recording each adjacent swap.
DivisorClass sort_recording(DivisorClass f, WeylWord& word) {
  std::vector<std::int64_t> m = f.m();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      if (m[i] < m[i + 1]) {
        std::swap(m[i], m[i + 1]);
        word.push_back(Generator::swap(i + 1));
        changed = true;
      }
    }
  }
  return {f.t(), std::move(m)};
}

DivisorClass cremona_at(const DivisorClass& f, std::size_t i, std::size_t j,
                        std::size_t k) {
  std::vector<std::int64_t> m = f.m();
  const std::int64_t delta = f.t() - m[i] - m[j] - m[k];
  m[i] += delta;
  m[j] += delta;
  m[k] += delta;
  return {f.t() + delta, std::move(m)};
}

}  // namespace

void WeylWord::append(const WeylWord& other) {
  gens_.insert(gens_.end(), other.gens_.begin(), other.gens_.end());
}

WeylWord WeylWord::reversed() const {
  return WeylWord(std::vector<Generator>(gens_.rbegin(), gens_.rend()));
}

std::string WeylWord::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k > 0) out << ' ';
    out << 's' << (gens_[k].kind == Generator::Kind::Cremona ? 0 : gens_[k].index);
  }
  return out.str();
}

WeylWord WeylWord::parse(std::string_view text) {
  WeylWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::size_t index = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    if (token.size() < 2 || token[0] != 's' ||
        std::from_chars(first, last, index).ptr != last) {
      throw std::invalid_argument("bad generator token '" + token + "'");
    }
    w.push_back(index == 0 ? Generator::cremona() : Generator::swap(index));
  }
  return w;
}

DivisorClass apply_generator(const DivisorClass& f, Generator g) {
  if (g.kind == Generator::Kind::Cremona) {
    if (f.n() < 3) throw std::out_of_range("s0 needs at least three points");
    return cremona_at(f, 0, 1, 2);
  }
  if (g.index < 1 || g.index >= f.n()) {
    throw std::out_of_range("s" + std::to_string(g.index) + " out of range for n = " +
                            std::to_string(f.n()));
  }
  std::vector<std::int64_t> m = f.m();
  std::swap(m[g.index - 1], m[g.index]);
  return {f.t(), std::move(m)};
}

DivisorClass apply_word(const WeylWord& w, const DivisorClass& f, bool inverse) {
  DivisorClass out = f;
  if (inverse) {
    for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) {
      out = apply_generator(out, *it);
    }
  } else {
    for (const Generator& g : w.generators()) out = apply_generator(out, g);
  }
  return out;
}

std::string to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::InChamber: return "InChamber";
    case ReductionStatus::NegL: return "NegL";
    case ReductionStatus::NegLine: return "NegLine";
  }
  return "?";
}

ReducedForm reduce(const DivisorClass& f, ReduceStop stop) {
  ReducedForm out;
  DivisorClass cur = at_least_three(f);
  for (;;) {
    cur = sort_recording(std::move(cur), out.word);
    const auto& m = cur.m();
    if (cur.t() < 0) break;
    if (stop == ReduceStop::FirstNegative && cur.t() < m[0]) break;
    if (cur.t() >= m[0] + m[1] + m[2]) break;
    cur = cremona_at(cur, 0, 1, 2);
    out.word.push_back(Generator::cremona());
  }
  if (cur.t() < 0) {
    out.status = ReductionStatus::NegL;
  } else if (cur.t() < cur.m()[0]) {
    out.status = ReductionStatus::NegLine;
  } else {
    out.status = ReductionStatus::InChamber;
  }
  out.reduced = std::move(cur);
  return out;
}

bool is_exceptional(const DivisorClass& e) {
  if (intersect(e, e) != -1 || intersect(canonical_class(e.n()), e) != -1) return false;
  const ReducedForm r = reduce(e);
  if (r.status != ReductionStatus::InChamber || r.reduced.t() != 0) return false;
  const auto& m = r.reduced.m();
  return std::count(m.begin(), m.end(), -1) == 1 &&
         std::count(m.begin(), m.end(), 0) == static_cast<std::ptrdiff_t>(m.size()) - 1;
}

std::vector<DivisorClass> enumerate_exceptional(std::int64_t max_t) {
  std::set<DivisorClass> seen;
  if (max_t < 1) return {};
  std::vector<DivisorClass> frontier{DivisorClass(1, {1, 1})};
  seen.insert(frontier.front());
  // Every exceptional class of positive degree drops in degree under s_0 on
  // its three largest multiplicities, so reversing those steps from the line
  // reaches all of them. Extra zeros stand for points not yet used.
  while (!frontier.empty()) {
    std::vector<DivisorClass> next;
    for (const DivisorClass& e : frontier) {
      const DivisorClass padded = e.pad_to(e.n() + 3);
      const std::size_t n = padded.n();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (std::size_t k = j + 1; k < n; ++k) {
            const DivisorClass up = cremona_at(padded, i, j, k);
            if (up.t() <= e.t() || up.t() > max_t) continue;
            DivisorClass canon = up.sorted().stripped();
            if (seen.insert(canon).second) next.push_back(std::move(canon));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::optional<WeylWord> orbit_of_line(const DivisorClass& c) {
  const ReducedForm r = reduce(c);
  if (r.status != ReductionStatus::InChamber) return std::nullopt;
  if (r.reduced != DivisorClass::line(r.reduced.n())) return std::nullopt;
  return r.word.reversed();
}

DegreeOneReduction reduce_to_degree_one(const DivisorClass& e) {
  if (e.t() < 1) throw std::invalid_argument("class of degree < 1: " + e.to_string());
  DegreeOneReduction out;
  DivisorClass cur = at_least_three(e);
  for (;;) {
    cur = sort_recording(std::move(cur), out.word);
    if (cur.t() == 1) break;
    const auto& m = cur.m();
    if (cur.t() < 1 || cur.t() >= m[0] + m[1] + m[2]) {
      throw std::invalid_argument("class does not reduce to a line: " + e.to_string());
    }
    cur = cremona_at(cur, 0, 1, 2);
    out.word.push_back(Generator::cremona());
  }
  out.line_class = std::move(cur);
  return out;
}

WeylWord word_to_first_exceptional(const DivisorClass& e) {
  if (!is_exceptional(e)) throw std::invalid_argument("not exceptional: " + e.to_string());
  ReducedForm r = reduce(e);
  const auto& m = r.reduced.m();
  std::size_t pos = std::find(m.begin(), m.end(), -1) - m.begin();
  // Walk the -1 down to the first slot.
  for (; pos > 0; --pos) r.word.push_back(Generator::swap(pos));
  return r.word;
}

}  // namespace fatpoints
