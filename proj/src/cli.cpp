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


#include "fatpoints/cli.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "fatpoints/betti.hpp"
#include "fatpoints/cokernel.hpp"
#include "fatpoints/lattice.hpp"
#include "fatpoints/linsys.hpp"
#include "fatpoints/splitting.hpp"
#include "fatpoints/weyl.hpp"

namespace fatpoints::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kSweepCap = 30;

struct Common {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = 3;
  std::string format = "json";
  std::size_t ceiling = kDefaultCeiling;

  SplittingOptions splitting() const {
    SplittingOptions o;
    o.prime = prime;
    o.seed = seed;
    o.trials = trials;
    return o;
  }
  CokernelOptions cokernel() const {
    CokernelOptions o;
    o.prime = prime;
    o.seed = seed;
    o.ceiling = ceiling;
    return o;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--prime", c.prime, "prime modulus")->envname("FATPT_PRIME");
  sub->add_option("--seed", c.seed, "random seed")->envname("FATPT_SEED");
  sub->add_option("--trials", c.trials, "independent point draws for splitting types");
  sub->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_option("--ceiling", c.ceiling, "largest matrix, in entries");
}

void validate(const Common& c) {
  (void)PrimeField(c.prime);  // throws naming the modulus
  if (c.trials < 1) throw std::invalid_argument("--trials must be positive, got " + std::to_string(c.trials));
}

Json finish(Json j, const Common& c, bool provisional, std::vector<std::string> conjectures) {
  j["prime"] = c.prime;
  j["seed"] = c.seed;
  j["provisional"] = provisional;
  j["conjectures"] = conjectures;
  return j;
}

Json components_json(const std::vector<Component>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back({{"curve", c.curve.to_string()}, {"multiplicity", c.multiplicity}});
  return a;
}

std::string components_tsv(const std::vector<Component>& cs) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c.multiplicity) + "*(" + c.curve.to_string() + ")";
  }
  return s.empty() ? "-" : s;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// Writes a table: header row, then one line per record.
void write_tsv(std::ostream& out, const std::vector<std::string>& header, const Json& rows) {
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "\t" : "") << header[k];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < header.size(); ++k) {
      out << (k ? "\t" : "") << (r.contains(header[k]) ? cell(r[header[k]]) : "-");
    }
    out << '\n';
  }
}

// Single-record output: every top-level scalar becomes a column.
void write_record(std::ostream& out, const Json& j) {
  std::vector<std::string> header;
  for (auto it = j.begin(); it != j.end(); ++it) header.push_back(it.key());
  write_tsv(out, header, Json::array({j}));
}

void emit(std::ostream& out, const Common& c, const Json& j) {
  if (c.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    write_record(out, j);
  }
}

DivisorClass parse_exceptional(const std::string& text) {
  const DivisorClass e = DivisorClass::parse(text);
  if (!is_exceptional(e.n() < 3 ? e.pad_to(3) : e)) {
    throw std::invalid_argument("not an exceptional class: " + text);
  }
  return e;
}

Json pair_json(const SplittingType& s) { return Json::array({s.a, s.b}); }

// ---- hilbert

int cmd_hilbert(const Common& c, const std::string& mults, const std::string& deg,
                std::ostream& out) {
  const FatPointScheme z = FatPointScheme::parse(mults);
  const std::int64_t a = alpha(z);
  std::int64_t lo = a, hi = 0;
  if (deg.empty()) {
    hi = regularity(z) + 1;
  } else {
    std::tie(lo, hi) = parse_degree_range(deg);
  }
  const HilbertReport rep = hilbert(z, lo, hi + 1);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"t", r.t}, {"value", r.value}, {"fixed", components_json(r.fixed)},
                    {"boundary", r.boundary}});
  }
  if (c.format == "tsv") {
    Json flat = Json::array();
    for (const auto& r : rep.rows) {
      flat.push_back({{"t", r.t}, {"value", r.value}, {"fixed", components_tsv(r.fixed)}});
    }
    write_tsv(out, {"t", "value", "fixed"}, flat);
    return kOk;
  }
  Json j = {{"command", "hilbert"}, {"mults", z.to_string()}, {"alpha", rep.alpha}, {"rows", rows}};
  emit(out, c, finish(j, c, false, {"shgh"}));
  return kOk;
}

// ---- resolution

Json entry_value(const BettiEntry& e) {
  if (e.lo == e.hi) return e.lo;
  return Json::array({e.lo, e.hi});
}

Json terms_json(const std::vector<ComponentTerm>& ts) {
  Json a = Json::array();
  for (const auto& t : ts) {
    a.push_back({{"curve", t.curve.to_string()}, {"d", t.degree}, {"c", t.exponent},
                 {"k", t.clipped}, {"splitting", pair_json(t.type)}, {"forced", t.forced},
                 {"conjectural", t.conjectural}, {"value", t.value}});
  }
  return a;
}

Json entry_json(const BettiEntry& e) {
  Json j = {{"value", entry_value(e)}, {"flag", to_string(e.flag)}, {"path", e.path},
            {"provisional", e.provisional}};
  if (!e.terms.empty()) j["terms"] = terms_json(e.terms);
  return j;
}

int cmd_resolution(const Common& c, const std::string& mults, std::optional<std::int64_t> imax,
                   bool verify, std::ostream& out, std::ostream& err) {
  const FatPointScheme z = FatPointScheme::parse(mults);
  const ResolutionTable tab = assemble_resolution(z, imax, c.splitting());

  bool provisional = false, conjectural = false;
  Json g = Json::object(), s = Json::object(), flags = Json::object(), degrees = Json::array();
  for (const auto& [i, ge] : tab.g) {
    const BettiEntry& se = tab.s.at(i);
    const std::string key = std::to_string(i);
    g[key] = entry_value(ge);
    s[key] = entry_value(se);
    flags[key] = to_string(ge.flag);
    provisional = provisional || ge.provisional;
    conjectural = conjectural || ge.flag == BettiFlag::ConjecturalExact;
    degrees.push_back({{"i", i}, {"h", tab.hilbert.at(i)}, {"g", entry_json(ge)},
                       {"s", entry_json(se)}});
  }

  Json verification = Json::array();
  bool violated = false;
  if (verify) {
    CokernelOptions co = c.cokernel();
    for (const auto& [i, ge] : tab.g) {
      for (const auto& t : ge.terms) {
        if (!t.conjectural) continue;
        err << "resolution: verifying " << t.curve.to_string() << " at m=" << t.clipped << '\n';
        Json v = {{"i", i}, {"curve", t.curve.to_string()}, {"m", t.clipped},
                  {"predicted", t.value}};
        try {
          const MuVerdict mv = cok_dimension(t.curve, t.clipped, co);
          v["computed"] = mv.computed;
          v["match"] = mv.computed == t.value;
          violated = violated || mv.computed != t.value;
        } catch (const Infeasible& e) {
          v["skipped"] = e.what();
        }
        verification.push_back(v);
      }
    }
  }

  if (c.format == "tsv") {
    Json rows = Json::array();
    for (const auto& [i, ge] : tab.g) {
      const BettiEntry& se = tab.s.at(i);
      rows.push_back({{"i", i}, {"h", tab.hilbert.at(i)}, {"g", cell(entry_value(ge))},
                      {"s", cell(entry_value(se))}, {"flag", to_string(ge.flag)},
                      {"path", ge.path}});
    }
    write_tsv(out, {"i", "h", "g", "s", "flag", "path"}, rows);
  } else {
    std::vector<std::string> conj = {"shgh"};
    if (conjectural) conj.push_back("cokernel_equality");
    Json j = {{"command", "resolution"}, {"mults", z.to_string()},  {"alpha", tab.alpha},
              {"regularity", tab.regularity}, {"i_max", tab.i_max}, {"g", g},
              {"s", s},  {"flags", flags}, {"degrees", degrees}};
    if (verify) j["verification"] = verification;
    emit(out, c, finish(j, c, provisional, conj));
  }
  return violated ? kConjectureViolation : kOk;
}

// ---- reduce / decompose

int cmd_reduce(const Common& c, const std::string& cls, const std::string& stop,
               std::ostream& out) {
  const DivisorClass f = DivisorClass::parse(cls);
  const ReducedForm r = reduce(f, stop == "first-negative" ? ReduceStop::FirstNegative : ReduceStop::Full);
  Json j = {{"command", "reduce"}, {"class", f.to_string()}, {"reduced", r.reduced.to_string()},
            {"word", r.word.to_string()}, {"status", to_string(r.status)}};
  emit(out, c, finish(j, c, false, {}));
  return kOk;
}

int cmd_decompose(const Common& c, const std::string& cls, std::ostream& out, std::ostream& err) {
  const DivisorClass f = DivisorClass::parse(cls);
  const auto d = decompose(f);
  Json j = {{"command", "decompose"}, {"class", f.to_string()}, {"in_psi", d.has_value()}};
  if (d) {
    j["free_part"] = d->free_part.to_string();
    j["components"] = c.format == "tsv" ? Json(components_tsv(d->components))
                                         : components_json(d->components);
    j["boundary"] = d->boundary;
  }
  j["chi"] = chi(f);
  j["expected_h0"] = expected_h0(f);
  int code = kOk;
  try {
    j["expected_h1"] = expected_h1(f);
  } catch (const ShghInconsistent& e) {
    j["expected_h1"] = nullptr;
    j["diagnostic"] = e.what();
    err << "decompose: " << e.what() << '\n';
    code = kConjectureViolation;
  }
  emit(out, c, finish(j, c, false, {"shgh"}));
  return code;
}

// ---- splitting

int cmd_split(const Common& c, const std::string& cls, std::ostream& out) {
  const DivisorClass e = parse_exceptional(cls);
  if (e.t() < 1) throw std::invalid_argument("class " + cls + " has degree 0; no splitting type");
  const SplittingResult r = compute_splitting(e, c.splitting());
  Json per = Json::array();
  for (const auto& s : r.per_trial) per.push_back(pair_json(s));
  Json j = {{"command", "split"}, {"class", e.to_string()}, {"a", r.type.a}, {"b", r.type.b},
            {"d", r.degree},      {"trials", c.trials},      {"per_trial", per},
            {"retries", r.retries}};
  emit(out, c, finish(j, c, true, {}));
  return kOk;
}

int cmd_predict(const Common& c, const std::string& cls, std::ostream& out) {
  const DivisorClass f = DivisorClass::parse(cls);
  const SplittingPrediction p = predict_splitting(f, c.splitting());
  Json cands = Json::array();
  for (const auto& [s, score] : p.candidates) {
    cands.push_back({{"a", s.a}, {"b", s.b}, {"score", score}});
  }
  Json j = {{"command", "predict-split"}, {"class", f.to_string()}, {"curve", p.curve.to_string()},
            {"defect", p.defect}, {"a", p.type.a}, {"b", p.type.b}, {"forced", p.forced}};
  if (c.format == "json") j["candidates"] = cands;
  emit(out, c, finish(j, c, !p.forced, p.forced ? std::vector<std::string>{}
                                                : std::vector<std::string>{"splitting_prediction"}));
  return kOk;
}

// ---- cokernel

Json verdict_json(const MuVerdict& v) {
  return {{"class", v.curve.to_string()},
          {"m", v.m},
          {"computed", v.computed},
          {"predicted", v.predicted},
          {"match", v.computed == v.predicted},
          {"a", v.splitting.a},
          {"b", v.splitting.b},
          {"splitting_forced", v.splitting_forced},
          {"method", v.method},
          {"rows", v.rows},
          {"cols", v.cols},
          {"retries", v.retries}};
}

int cmd_verify(const Common& c, const std::string& cls, std::int64_t m, bool oracle,
               std::ostream& out) {
  const DivisorClass e = parse_exceptional(cls);
  CokernelOptions co = c.cokernel();
  co.oracle = oracle;
  const MuVerdict v = cok_dimension(e, m, co);
  Json j = {{"command", "verify-cokernel"}};
  j.update(verdict_json(v));
  emit(out, c, finish(j, c, v.provisional, {}));
  return v.computed == v.predicted ? kOk : kConjectureViolation;
}

// ---- enumeration and sweep

int cmd_enumerate(const Common& c, std::int64_t max_degree, std::ostream& out) {
  if (max_degree < 0) throw std::invalid_argument("--max-degree must be nonnegative");
  const auto all = enumerate_exceptional(max_degree);
  Json rows = Json::array();
  for (const auto& e : all) rows.push_back({{"class", e.to_string()}, {"d", e.t()}});
  if (c.format == "tsv") {
    write_tsv(out, {"class", "d"}, rows);
    return kOk;
  }
  Json j = {{"command", "enumerate-exceptional"}, {"max_degree", max_degree},
            {"count", all.size()}, {"classes", rows}};
  emit(out, c, finish(j, c, false, {}));
  return kOk;
}

struct SweepRow {
  DivisorClass curve;
  SplittingResult split;
  bool guaranteed = false;
  std::optional<MuVerdict> verdict;
  std::string skipped;  // reason, when the verdict could not be computed
};

int cmd_sweep(const Common& c, std::int64_t max_degree, std::int64_t cap, unsigned jobs,
              bool verify, std::ostream& out, std::ostream& err) {
  if (max_degree < 1) throw std::invalid_argument("--max-degree must be positive");
  if (max_degree > cap) {
    throw std::invalid_argument("--max-degree " + std::to_string(max_degree) +
                                " exceeds the cap " + std::to_string(cap));
  }
  const auto classes = enumerate_exceptional(max_degree);
  err << "sweep: " << classes.size() << " classes up to degree " << max_degree << '\n';

  std::vector<SweepRow> rows(classes.size());
  std::atomic<std::size_t> next{0}, done{0};
  std::mutex log_mu;
  std::exception_ptr failure;
  const SplittingOptions so = c.splitting();
  const CokernelOptions co = c.cokernel();

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next++;
      if (k >= classes.size()) return;
      try {
        SweepRow& r = rows[k];
        r.curve = classes[k];
        r.split = splitting_type(r.curve, so);
        r.guaranteed = cokernel_equality_known(r.curve, r.split.type);
        if (!r.guaranteed && verify) {
          {
            std::lock_guard lock(log_mu);
            err << "sweep: verifying " << r.curve.to_string() << " at m=" << r.split.type.b << '\n';
          }
          try {
            r.verdict = cok_dimension(r.curve, r.split.type.b, co);
          } catch (const Infeasible& e) {
            r.skipped = e.what();
          } catch (const SplittingFailure& e) {
            r.skipped = e.what();
          }
        }
      } catch (...) {
        std::lock_guard lock(log_mu);
        if (!failure) failure = std::current_exception();
        next = classes.size();
        return;
      }
      const std::size_t n = ++done;
      if (n % 500 == 0) {
        std::lock_guard lock(log_mu);
        err << "sweep: " << n << "/" << classes.size() << '\n';
      }
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::size_t guaranteed = 0, verified = 0, violations = 0, skipped = 0;
  bool provisional = false;
  Json table = Json::array(), hard = Json::array(), skips = Json::array(), bad = Json::array();
  for (const auto& r : rows) {
    provisional = provisional || r.split.provisional;
    Json row = {{"class", r.curve.to_string()}, {"d", r.split.degree}, {"a", r.split.type.a},
                {"b", r.split.type.b}, {"forced", r.split.forced}, {"guaranteed", r.guaranteed}};
    if (r.guaranteed) {
      ++guaranteed;
    } else {
      Json h = row;
      if (r.verdict) {
        h["verdict"] = verdict_json(*r.verdict);
        if (r.verdict->computed == r.verdict->predicted) {
          ++verified;
        } else {
          ++violations;
          bad.push_back(h);
        }
      } else if (!r.skipped.empty()) {
        ++skipped;
        h["skipped"] = r.skipped;
        skips.push_back(h);
      }
      hard.push_back(h);
    }
    table.push_back(row);
  }

  if (c.format == "tsv") {
    write_tsv(out, {"class", "d", "a", "b", "forced", "guaranteed"}, table);
  } else {
    Json j = {{"command", "sweep"},
              {"max_degree", max_degree},
              {"total", rows.size()},
              {"guaranteed", guaranteed},
              {"needs_verification", rows.size() - guaranteed},
              {"verified", verified},
              {"violations", violations},
              {"skipped", skipped},
              {"hard", hard},
              {"violating", bad},
              {"skipped_classes", skips},
              {"classes", table}};
    emit(out, c, finish(j, c, provisional, {}));
  }
  err << "sweep: done, " << violations << " violations\n";
  return violations ? kConjectureViolation : kOk;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_degree_range(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto number = [&](const std::string& tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) {
      throw std::invalid_argument("bad degree '" + tok + "' in range '" + text + "'");
    }
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::int64_t v = number(s);
    return {v, v};
  }
  const std::int64_t a = number(s.substr(0, dots));
  const std::int64_t b = number(s.substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty degree range '" + text + "'");
  return {a, b};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions, Betti numbers and splitting types for fat points in P2",
               "fatpt"};
  app.require_subcommand(1);
  Common common;
  std::string mults, deg, cls, stop = "full";
  std::optional<std::int64_t> imax;
  std::int64_t m = 0, max_degree = 0, cap = kSweepCap;
  bool verify = false, oracle = false, no_verify = false;
  unsigned jobs = 1;

  auto* hil = app.add_subcommand("hilbert", "expected Hilbert function and fixed parts");
  hil->add_option("--mults", mults, "multiplicities m1,...,mn")->required();
  hil->add_option("--deg", deg, "degree range a..b (default alpha..regularity+1)");
  add_common(hil, common);

  auto* res = app.add_subcommand("resolution", "graded Betti numbers");
  res->add_option("--mults", mults, "multiplicities m1,...,mn")->required();
  res->add_option("--imax", imax, "last degree (default regularity+3)");
  res->add_flag("--verify", verify, "check conjectural terms by exact linear algebra");
  add_common(res, common);

  auto* red = app.add_subcommand("reduce", "Weyl reduction of a class");
  red->add_option("--class", cls, "class t;m1,...,mn")->required();
  red->add_option("--stop", stop, "full or first-negative")
      ->check(CLI::IsMember({"full", "first-negative"}));
  add_common(red, common);

  auto* dec = app.add_subcommand("decompose", "free and fixed part of a class");
  dec->add_option("--class", cls, "class t;m1,...,mn")->required();
  add_common(dec, common);

  auto* spl = app.add_subcommand("split", "splitting type of an exceptional class mod p");
  spl->add_option("--class", cls, "exceptional class t;m1,...,mn")->required();
  add_common(spl, common);

  auto* pre = app.add_subcommand("predict-split", "predicted splitting type from a Weyl word");
  pre->add_option("--class", cls, "class with self-intersection 1, or exceptional")->required();
  add_common(pre, common);

  auto* ver = app.add_subcommand("verify-cokernel", "dim cok of multiplication on L+mE");
  ver->add_option("--class", cls, "exceptional class t;m1,...,mn")->required();
  ver->add_option("--m", m, "multiple of E, 0..d")->required();
  ver->add_flag("--oracle", oracle, "brute-force rank on the fat point ideal");
  add_common(ver, common);

  auto* enu = app.add_subcommand("enumerate-exceptional", "exceptional classes by degree");
  enu->add_option("--max-degree", max_degree, "largest degree")->required();
  add_common(enu, common);

  auto* swp = app.add_subcommand("sweep", "splitting types and cokernel checks for all classes");
  swp->add_option("--max-degree", max_degree, "largest degree")->required();
  swp->add_option("--cap", cap, "largest accepted --max-degree");
  swp->add_option("--jobs", jobs, "worker threads");
  swp->add_flag("--no-verify", no_verify, "skip the cokernel computations");
  add_common(swp, common);

  std::vector<const char*> argv = {"fatpt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    validate(common);
    if (hil->parsed()) return cmd_hilbert(common, mults, deg, out);
    if (res->parsed()) return cmd_resolution(common, mults, imax, verify, out, err);
    if (red->parsed()) return cmd_reduce(common, cls, stop, out);
    if (dec->parsed()) return cmd_decompose(common, cls, out, err);
    if (spl->parsed()) return cmd_split(common, cls, out);
    if (pre->parsed()) return cmd_predict(common, cls, out);
    if (ver->parsed()) return cmd_verify(common, cls, m, oracle, out);
    if (enu->parsed()) return cmd_enumerate(common, max_degree, out);
    if (swp->parsed()) return cmd_sweep(common, max_degree, cap, jobs, !no_verify, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const SplittingFailure& e) {
    err << "failed: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ConjectureViolation& e) {
    err << "conjecture violation: " << e.what() << '\n';
    return kConjectureViolation;
  } catch (const ShghInconsistent& e) {
    err << "conjecture violation: " << e.what() << '\n';
    return kConjectureViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
  return kInvalidInput;
}

}  // namespace fatpoints::cli
