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

#include "fatpoints/cokernel.hpp"

#include <algorithm>
#include <cstdint>

#include "fatpoints/linsys.hpp"
#include "fatpoints/weyl.hpp"

namespace fatpoints {

namespace {

void check_size(const char* what, std::size_t rows, std::size_t cols, std::size_t ceiling) {
  if (rows * cols > ceiling) {
    throw Infeasible(std::string(what) + ": " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " exceeds the ceiling of " +
                         std::to_string(ceiling) + " entries",
                     rows, cols);
  }
}

// Pascal triangle mod p up to row n.
std::vector<std::vector<Fp>> pascal(const PrimeField& f, std::int64_t n) {
  std::vector<std::vector<Fp>> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < c.size(); ++r) {
    c[r].assign(r + 1, 1);
    for (std::size_t k = 1; k < r; ++k) c[r][k] = f.add(c[r - 1][k - 1], c[r - 1][k]);
  }
  return c;
}

std::vector<Fp> powers(const PrimeField& f, Fp x, std::int64_t n) {
  std::vector<Fp> out(static_cast<std::size_t>(n) + 1, 1);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = f.mul(out[k - 1], x);
  return out;
}

// Multiplies a degree-d form (coefficients in monomial_index order) by x, y
// or z.
std::vector<Fp> times_variable(const std::vector<Fp>& form, std::int64_t d, int var) {
  std::vector<Fp> out(monomial_count(d + 1), 0);
  for (std::int64_t s = 0; s <= d; ++s) {
    for (std::int64_t j = 0; j <= s; ++j) {
      const Fp c = form[monomial_index(s - j, j)];
      if (c == 0) continue;
      const std::int64_t i2 = s - j + (var == 0 ? 1 : 0);
      const std::int64_t j2 = j + (var == 1 ? 1 : 0);
      out[monomial_index(i2, j2)] = c;
    }
  }
  return out;
}

}  // namespace

std::int64_t h0_mE(std::int64_t m, std::int64_t t) {
  if (m < 1) throw std::invalid_argument("h0_mE needs m >= 1");
  if (t >= 0) return m * (m + 1) / 2 + m * t;
  return binom2(m + t + 1);
}

std::int64_t h1_mE(std::int64_t m, std::int64_t t) {
  if (m < 1) throw std::invalid_argument("h1_mE needs m >= 1");
  if (t >= 0) return 0;
  const std::int64_t s = -t;
  if (s <= m) return binom2(s);
  return s * m - m * (m + 1) / 2;
}

FpMatrix fat_point_matrix(const PointConfiguration& config, std::int64_t d,
                          const std::vector<std::int64_t>& mults, std::size_t ceiling) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (config.points.size() < mults.size()) {
    throw std::invalid_argument("fewer points than multiplicities");
  }
  const PrimeField& f = config.field;
  std::size_t rows = 0;
  for (std::int64_t m : mults) rows += static_cast<std::size_t>(m > 0 ? m * (m + 1) / 2 : 0);
  const std::size_t cols = monomial_count(d);
  check_size("fat point matrix", rows, cols, ceiling);

  FpMatrix out(f, rows, cols);
  const auto binom = pascal(f, d);
  std::size_t row = 0;
  for (std::size_t k = 0; k < mults.size(); ++k) {
    const std::int64_t m = mults[k];
    if (m <= 0) continue;
    const auto& p = config.points[k];
    int chart = 2;
    while (chart >= 0 && p[static_cast<std::size_t>(chart)] == 0) --chart;
    if (chart < 0) throw std::invalid_argument("zero point");
    const int q1 = chart == 0 ? 1 : 0;
    const int q2 = chart == 2 ? 1 : 2;
    const Fp scale = f.inv(p[static_cast<std::size_t>(chart)]);
    const auto px = powers(f, f.mul(p[static_cast<std::size_t>(q1)], scale), d);
    const auto py = powers(f, f.mul(p[static_cast<std::size_t>(q2)], scale), d);

    for (std::int64_t a = 0; a < m; ++a) {
      for (std::int64_t b = 0; a + b < m; ++b, ++row) {
        for (std::int64_t s = 0; s <= d; ++s) {
          for (std::int64_t j = 0; j <= s; ++j) {
            const std::int64_t e[3] = {s - j, j, d - s};
            const std::int64_t u = e[q1];
            const std::int64_t v = e[q2];
            if (u < a || v < b) continue;
            const Fp val = f.mul(f.mul(binom[static_cast<std::size_t>(u)][static_cast<std::size_t>(a)],
                                       px[static_cast<std::size_t>(u - a)]),
                                 f.mul(binom[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)],
                                       py[static_cast<std::size_t>(v - b)]));
            out.set_residue(row, monomial_index(s - j, j), val);
          }
        }
      }
    }
  }
  return out;
}

std::int64_t mu_rank_oracle(const PointConfiguration& config,
                            const std::vector<std::int64_t>& mults, std::int64_t t,
                            std::size_t ceiling) {
  if (t < 0) throw std::invalid_argument("negative degree");
  const auto source = nullspace(fat_point_matrix(config, t, mults, ceiling));
  const auto target = nullspace(fat_point_matrix(config, t + 1, mults, ceiling));
  const std::size_t cols = monomial_count(t + 1);
  check_size("multiplication matrix", 3 * source.size(), cols, ceiling);
  FpMatrix image(config.field, 0, cols);
  for (const auto& g : source) {
    for (int var = 0; var < 3; ++var) image.append_row(times_variable(g, t, var));
  }
  return static_cast<std::int64_t>(target.size()) -
         static_cast<std::int64_t>(rank(std::move(image)));
}

MuVerdict cok_dimension(const DivisorClass& e, std::int64_t m, const CokernelOptions& opts) {
  const DivisorClass e3 = e.n() < 3 ? e.pad_to(3) : e;
  if (!is_exceptional(e3)) throw std::invalid_argument("not exceptional: " + e.to_string());
  const std::int64_t d = e3.t();
  if (m < 0 || m > d) {
    throw std::invalid_argument("m must lie in [0, " + std::to_string(d) + "]");
  }
  const PrimeField field(opts.prime);

  MuVerdict out;
  out.curve = e;
  out.m = m;
  out.prime = opts.prime;
  out.seed = opts.seed;
  out.method = opts.oracle ? "brute-force" : "formula";
  if (d >= 1) {
    SplittingOptions so;
    so.prime = opts.prime;
    so.seed = opts.seed;
    const SplittingResult s = splitting_type(e3, so);
    out.splitting = s.type;
    out.splitting_forced = s.forced;
  }
  out.predicted = binom2(m - out.splitting.a) + binom2(m - out.splitting.b);
  if (m == 0) return out;  // cok mu_L = 0

  const std::size_t n = e3.n();
  if (opts.oracle) {
    // L + mE is the fat point class of degree 1 + md with multiplicities m*m_i.
    std::vector<std::int64_t> mults(n);
    for (std::size_t i = 0; i < n; ++i) mults[i] = m * e3.m()[i];
    const std::int64_t t = 1 + m * d;
    out.rows = static_cast<std::size_t>(3 * expected_h0(DivisorClass(t, mults)));
    out.cols = monomial_count(t + 1);
    check_size("multiplication matrix", out.rows, out.cols, opts.ceiling);
    const auto config = PointConfiguration::random(field, n, opts.seed);
    out.computed = mu_rank_oracle(config, mults, t, opts.ceiling);
    return out;
  }

  const WeylWord w = word_to_first_exceptional(e3);
  const DivisorClass lp = apply_word(w, DivisorClass::line(n));
  const std::int64_t big_d = lp.t();
  const std::int64_t delta = d - 1 + big_d;

  // Target: monomials of degree delta whose (x, y)-order lies in [2d-m, 2d-1].
  std::vector<std::size_t> target_pos(monomial_count(2 * d - 1), SIZE_MAX);
  std::size_t target_count = 0;
  for (std::int64_t s = 2 * d - m; s <= 2 * d - 1; ++s) {
    for (std::int64_t j = 0; j <= s; ++j) target_pos[monomial_index(s - j, j)] = target_count++;
  }
  if (static_cast<std::int64_t>(target_count) != h0_mE(m, 2 * d - m) || delta < 2 * d - 1) {
    throw std::logic_error("neighborhood basis size mismatch");
  }

  std::string last;
  for (int attempt = 0; attempt < opts.retry_cap; ++attempt) {
    PointConfiguration config =
        PointConfiguration::random(field, n, opts.seed, 0x10000u + static_cast<std::uint64_t>(attempt));
    config.points[0] = {0, 0, 1};
    const FpMatrix conditions = fat_point_matrix(config, big_d, lp.m(), opts.ceiling);
    out.rows = conditions.rows();
    out.cols = conditions.cols();
    const auto sections = nullspace(conditions);
    if (sections.size() != 3) {
      last = "h0(L') = " + std::to_string(sections.size());
      ++out.retries;
      continue;
    }

    // Sources x^i y^j z^(d-1-i-j) with d-m <= i+j <= d-1, times each section,
    // truncated to (x, y)-order below 2d.
    std::size_t source_count = 0;
    for (std::int64_t s = d - m; s <= d - 1; ++s) source_count += static_cast<std::size_t>(s + 1);
    check_size("image matrix", 3 * source_count, target_count, opts.ceiling);
    FpMatrix image(field, 3 * source_count, target_count);
    std::size_t row = 0;
    for (std::int64_t s = d - m; s <= d - 1; ++s) {
      for (std::int64_t j = 0; j <= s; ++j) {
        const std::int64_t i = s - j;
        for (const auto& f : sections) {
          for (std::int64_t s2 = 0; s2 <= big_d && s + s2 <= 2 * d - 1; ++s2) {
            for (std::int64_t j2 = 0; j2 <= s2; ++j2) {
              const Fp c = f[monomial_index(s2 - j2, j2)];
              if (c == 0) continue;
              const std::size_t pos = target_pos[monomial_index(i + s2 - j2, j + j2)];
              if (pos == SIZE_MAX) throw std::logic_error("section vanishes to low order");
              image.set_residue(row, pos, field.add(image(row, pos), c));
            }
          }
          ++row;
        }
      }
    }
    out.rows = std::max(out.rows, image.rows());
    out.computed = static_cast<std::int64_t>(target_count) -
                   static_cast<std::int64_t>(rank(std::move(image)));
    return out;
  }
  throw SplittingFailure("no usable point draw for " + e.to_string() + ": " + last);
}

}  // namespace fatpoints
