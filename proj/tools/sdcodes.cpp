// Copyright 2026 The sdcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sdcodes: command-line front end.
//
// Exit codes: 0 success, 1 a checked property failed, 2 unreadable input,
// 3 a precondition of the requested operation does not hold.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdcodes/buildup.hpp"
#include "sdcodes/catalog.hpp"
#include "sdcodes/codefile.hpp"
#include "sdcodes/constructions.hpp"
#include "sdcodes/errors.hpp"
#include "sdcodes/results.hpp"

using namespace sdcodes;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kParseFailure = 2;
constexpr int kPreconditionFailure = 3;

constexpr std::uint64_t kFallbackBudget = 1'000'000'000ULL;
constexpr std::uint64_t kVerifyBudget = 50'000'000ULL;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::string catalog;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  std::string log;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SDCODES_WORK_BUDGET"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("SDCODES_WORK_BUDGET is not a number: ") + env);
    }
  }
  return kFallbackBudget;
}

WeightBudget make_budget(const Globals& g, std::optional<std::uint64_t> fallback = std::nullopt) {
  WeightBudget b;
  b.work_units = g.budget ? *g.budget : fallback ? *fallback : default_budget();
  b.threads = g.threads;
  b.seed = g.seed;
  return b;
}

Catalog load_catalog(const Globals& g) { return g.catalog.empty() ? Catalog::load_default() : Catalog::load(g.catalog); }

std::vector<std::int64_t> parse_csv(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(what + ": '" + tok + "' is not an integer");
    }
  }
  if (out.empty()) throw ParseError(what + " is empty");
  return out;
}

Vector to_vector(const PrimeField& f, const std::vector<std::int64_t>& v) {
  Vector out(f, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, f(v[i]).value());
  return out;
}

std::string csv(std::span<const Residue> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

SymmetricSD symmetric_from(const CodeFile& file) {
  const LinearCode code(file.generator);
  auto s = to_symmetric(code);
  if (!s) throw NotSymmetricSD("generator does not reduce to (I | A) with A symmetric");
  return *s;
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {
    if (!g.log.empty()) log_.emplace(g.log);
  }

  void record(const ResultRecord& r, const json& extra = json::object()) {
    json j = r.to_json();
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    if (g_.json) std::cout << j.dump() << '\n';
    if (log_) log_->append(j);
  }

  void text(const std::string& line) const {
    if (!g_.json) std::cout << line << '\n';
  }

  /// Writes to `path`, or to stdout in text mode.
  void code_file(const CodeFile& file, const std::string& path) const {
    if (!path.empty())
      save_code_file(path, file);
    else if (!g_.json)
      write_code_file(std::cout, file);
  }

 private:
  const Globals& g_;
  std::optional<ResultLog> log_;
};

std::string describe(const WeightReport& r) {
  if (r.is_exact()) return "d = " + std::to_string(r.min_weight) + " (exact)";
  return std::to_string(r.bound_value) + " <= d <= " + std::to_string(r.min_weight) + " (lower_bound)";
}

json weight_fields(const WeightReport& r) {
  return {{"bound", r.bound_value}, {"witness_weight", r.min_weight}, {"work", r.work}};
}

std::optional<std::size_t> exact_d(const WeightReport& r) {
  if (r.is_exact()) return r.min_weight;
  return std::nullopt;
}

// ------------------------------------------------------------------ verify

int run_verify(const Globals& g, const std::string& target, bool weights) {
  Output out(g);
  std::optional<WeightBudget> budget;
  if (weights) budget = make_budget(g, kVerifyBudget);

  auto report = [&](const std::vector<CheckLine>& lines, std::uint32_t p, std::size_t n,
                    std::size_t k) {
    bool ok = true;
    std::string id = lines.empty() ? target : lines.front().entry;
    std::optional<std::size_t> d;
    for (const auto& l : lines) {
      ok = ok && l.pass;
      out.text(std::string(l.pass ? "PASS  " : "FAIL  ") + l.entry + "  " + l.check + "  " + l.detail);
      if (l.check == "min_weight" && l.detail.rfind("exact d = ", 0) == 0) d = std::stoul(l.detail.substr(10));
    }
    out.record({"verify", id, p, n, k, d, ok ? "pass" : "fail", g.seed});
    return ok;
  };

  const bool is_file = !target.empty() && std::filesystem::is_regular_file(target);
  if (is_file) {
    const CodeFile file = read_code_file(target);
    const Matrix& gm = file.generator;
    std::vector<CheckLine> lines;
    const bool full_rank = rank(gm) == gm.rows();
    lines.push_back({target, "rank", full_rank, full_rank ? "full" : "rows are dependent"});
    if (!full_rank) return report(lines, gm.field().p(), gm.cols(), gm.rows()) ? kOk : kPropertyFailure;
    const LinearCode code(gm);
    const bool claimed_sd = file.get("self_dual").value_or("true") != "false";
    const bool sd = is_self_dual(code);
    lines.push_back({target, "self_dual", sd == claimed_sd,
                     std::string("claimed ") + (claimed_sd ? "true" : "false") + ", found " + (sd ? "true" : "false")});
    if (sd) {
      const bool sym = to_symmetric(code).has_value();
      lines.push_back({target, "symmetric_form", true, sym ? "reduces to (I | A), A = A^T" : "not symmetric"});
    }
    if (auto claim = file.get("d"); claim && budget) {
      const std::size_t dc = std::stoul(*claim);
      const WeightReport r = min_weight(code, *budget);
      const bool pass = r.is_exact() ? r.min_weight == dc : (r.min_weight >= dc && r.bound_value <= dc);
      lines.push_back({target, "min_weight", pass,
                       (r.is_exact() ? "exact d = " + std::to_string(r.min_weight) : describe(r)) + ", claimed " + *claim});
    }
    return report(lines, gm.field().p(), code.n(), code.k()) ? kOk : kPropertyFailure;
  }

  const Catalog cat = load_catalog(g);
  std::vector<const CatalogEntry*> entries;
  if (target.empty() || target == "catalog") {
    for (const auto& e : cat.entries()) entries.push_back(&e);
  } else if (const auto* e = cat.find(target)) {
    entries.push_back(e);
  } else {
    throw ParseError("'" + target + "' is neither a file nor a catalog id");
  }
  bool all = true;
  for (const auto* e : entries)
    all = report(verify_entry(*e, budget), e->matrix.field().p(), e->n, e->k) && all;
  return all ? kOk : kPropertyFailure;
}

// --------------------------------------------------------------- minweight

struct MinWeightArgs {
  std::string file;
  bool exact = false;
  bool exhaustive = false;
  std::optional<double> seconds;
  std::optional<std::size_t> target_bound;
  std::optional<std::uint64_t> witness_trials;
};

int run_minweight(const Globals& g, const MinWeightArgs& a) {
  Output out(g);
  const CodeFile file = read_code_file(a.file);
  const LinearCode code(file.generator);
  WeightBudget b = make_budget(g);
  if (a.exact) b.work_units = std::numeric_limits<std::uint64_t>::max();
  b.seconds = a.seconds;
  b.target_bound = a.target_bound;
  if (a.witness_trials) b.witness_trials = *a.witness_trials;
  const WeightReport r = a.exhaustive ? min_weight_exhaustive(code, b.work_units) : min_weight(code, b);
  out.text(a.file + ": [" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "] over GF(" +
           std::to_string(code.field().p()) + "), " + describe(r) + ", work " + std::to_string(r.work));
  if (r.witness) out.text("witness: " + csv(r.witness->entries()));
  json extra = weight_fields(r);
  out.record({"minweight", a.file, code.field().p(), code.n(), code.k(), exact_d(r), to_string(r.status), g.seed},
             extra);
  return kOk;
}

// ------------------------------------------------------------ extend/reduce

struct ExtendArgs {
  std::string file, x, out;
  std::int64_t alpha = 0, gamma = 0;
  bool check_identities = false;
  bool weight = false;
};

int run_extend(const Globals& g, const ExtendArgs& a) {
  Output out(g);
  const SymmetricSD c = symmetric_from(read_code_file(a.file));
  const PrimeField& f = c.field();
  const BuildStep step{f(a.alpha), f(a.gamma), to_vector(f, parse_csv(a.x, "--x"))};
  const SymmetricSD next = extend(c, step, a.check_identities);
  CodeFile file{next.generator(), {}};
  file.set("alpha", std::to_string(step.alpha.value()));
  file.set("gamma", std::to_string(step.gamma.value()));
  file.set("x", csv(step.x.entries()));
  std::optional<WeightReport> r;
  if (a.weight) {
    r = min_weight(next.code(), make_budget(g));
    if (r->is_exact()) file.set("d", std::to_string(r->min_weight));
  }
  out.code_file(file, a.out);
  json extra{{"step", to_json(step)}};
  if (r) extra.update(weight_fields(*r));
  out.record({"extend", a.out.empty() ? "-" : a.out, f.p(), 2 * next.half_n(), next.half_n(),
              r ? exact_d(*r) : std::nullopt, r ? to_string(r->status) : "ok", g.seed},
             extra);
  return kOk;
}

int run_reduce(const Globals& g, const std::string& path, std::int64_t alpha, const std::string& dest) {
  Output out(g);
  const SymmetricSD c = symmetric_from(read_code_file(path));
  const auto [smaller, step] = reduce(c, c.field()(alpha));
  CodeFile file{smaller.generator(), {}};
  file.set("alpha", std::to_string(step.alpha.value()));
  file.set("gamma", std::to_string(step.gamma.value()));
  file.set("x", csv(step.x.entries()));
  out.code_file(file, dest);
  out.record({"reduce", dest.empty() ? "-" : dest, c.field().p(), 2 * smaller.half_n(), smaller.half_n(),
              std::nullopt, "ok", g.seed},
             {{"step", to_json(step)}});
  return kOk;
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  std::uint32_t p = 0;
  std::string from = "trivial";
  std::size_t to = 0;
  std::size_t beam = 8;
  std::uint64_t samples = 2'000;
  std::uint64_t full_limit = 20'000;
  std::string out;
};

int run_search(const Globals& g, const SearchArgs& a) {
  Output out(g);
  const PrimeField f(a.p);
  const SymmetricSD base = a.from == "trivial" ? SymmetricSD::unit(roots_of_minus_one(f).first)
                                               : symmetric_from(read_code_file(a.from));
  if (!(base.field() == f)) throw FieldMismatch("--p does not match the base file");
  SearchOptions opt;
  opt.beam = a.beam;
  opt.samples = a.samples;
  opt.full_enumeration_limit = a.full_limit;
  opt.seed = g.seed;
  opt.per_candidate = make_budget(g, 20'000'000ULL);
  const Chain chain = search_chain(base, a.to, opt);

  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    out.text("[" + std::to_string(2 * chain.codes[i].half_n()) + "] alpha=" + std::to_string(s.alpha.value()) +
             " gamma=" + std::to_string(s.gamma.value()) + " x=(" + csv(s.x.entries()) + ")  " +
             describe(chain.results[i]));
  }
  const SymmetricSD& last = chain.last();
  CodeFile file{last.generator(), {}};
  std::optional<std::size_t> d;
  std::string status = "ok";
  if (!chain.results.empty()) {
    d = exact_d(chain.results.back());
    status = to_string(chain.results.back().status);
    if (d) file.set("d", std::to_string(*d));
  }
  file.set("seed", std::to_string(g.seed));
  if (!a.out.empty()) out.code_file(file, a.out);
  json extra{{"chain", chain_to_json(chain)}};
  out.record({"search", a.out.empty() ? "-" : a.out, f.p(), 2 * last.half_n(), last.half_n(), d, status, g.seed},
             extra);
  return kOk;
}

// ------------------------------------------------------------------ replay

struct ReplayArgs {
  std::string chain;
  bool exact = false;
  std::optional<std::size_t> slack;
  std::uint64_t witness_trials = 2'000;
};

int run_replay(const Globals& g, const ReplayArgs& a) {
  Output out(g);
  const Catalog cat = load_catalog(g);
  const CatalogChain* ch = cat.chain(a.chain);
  if (!ch) throw ParseError("no chain named '" + a.chain + "'");

  std::vector<BuildStep> steps;
  for (const auto& s : ch->steps) steps.push_back(s.step);
  const SymmetricSD base(cat.at(ch->base).matrix);
  const Chain chain = replay(base, steps);

  bool ok = true;
  for (std::size_t i = 0; i <= steps.size(); ++i) {
    const std::string id = i == 0 ? ch->base : ch->steps[i - 1].result;
    const CatalogEntry& e = cat.at(id);
    const SymmetricSD& code = i == 0 ? chain.base : chain.codes[i - 1];
    const bool same = code.a() == e.matrix;
    const std::optional<std::size_t> claimed = i == 0 ? e.d : ch->steps[i - 1].d;

    WeightBudget b = make_budget(g);
    if (a.exact) b.work_units = std::numeric_limits<std::uint64_t>::max();
    if (a.slack && claimed) {
      b.target_bound = *claimed > *a.slack ? *claimed - *a.slack : 1;
      b.witness_trials = a.witness_trials;
    }
    const WeightReport r = min_weight(code.code(), b);
    bool consistent = true;
    if (claimed) {
      consistent = r.is_exact() ? r.min_weight == *claimed : r.min_weight >= *claimed && r.bound_value <= *claimed;
      if (a.slack && !r.is_exact()) consistent = consistent && r.min_weight == *claimed;
    }
    ok = ok && same && consistent;
    out.text(std::string(same && consistent ? "PASS  " : "FAIL  ") + id + "  [" + std::to_string(2 * code.half_n()) +
             "]  claimed d = " + (claimed ? std::to_string(*claimed) : "?") + "  " + describe(r) +
             (same ? "" : "  matrix differs from the catalog"));
    json extra = weight_fields(r);
    extra["matches_catalog"] = same;
    extra["claimed_d"] = claimed ? json(*claimed) : json(nullptr);
    out.record({"replay", id, code.field().p(), 2 * code.half_n(), code.half_n(), exact_d(r), to_string(r.status),
                g.seed},
               extra);
  }
  return ok ? kOk : kPropertyFailure;
}

// ---------------------------------------------------------- constructions

int run_qr(const Globals& g, std::uint32_t p, std::uint32_t ell, bool extended, bool weight, const std::string& dest) {
  Output out(g);
  const PrimeField f(p);
  const QRSpec spec = QRSpec::make(ell, f);
  CodeFile file{Matrix(f, 0, 0), {}};
  std::string status;
  if (extended) {
    const QRExtension e = qr_extended(spec);
    file.generator = e.code.generator();
    file.set("border", std::to_string(e.border.value()));
    status = to_string(e.kind);
  } else {
    file.generator = qr_cyclic(spec).generator();
    status = "cyclic";
  }
  const LinearCode code(file.generator);
  file.set("self_dual", is_self_dual(code) ? "true" : "false");
  std::optional<WeightReport> r;
  if (weight) {
    r = min_weight(code, make_budget(g));
    if (r->is_exact()) file.set("d", std::to_string(r->min_weight));
  }
  out.code_file(file, dest);
  json extra{{"kind", status}};
  if (r) extra.update(weight_fields(*r));
  out.record({"qr", "QR_" + std::to_string(p) + "_" + std::to_string(code.n()), p, code.n(), code.k(),
              r ? exact_d(*r) : std::nullopt, status, g.seed},
             extra);
  return kOk;
}

int run_circulant(const Globals& g, std::uint32_t p, const std::string& row, const std::string& bordered,
                  bool symmetrize, const std::string& dest) {
  Output out(g);
  const PrimeField f(p);
  CirculantSpec spec{to_vector(f, parse_csv(row, "--row")), std::nullopt};
  if (!bordered.empty()) {
    const auto ab = parse_csv(bordered, "--bordered");
    if (ab.size() != 2) throw ParseError("--bordered takes two values a,b");
    spec.bordered = std::pair{f(ab[0]), f(ab[1])};
  }
  const LinearCode code = double_circulant_code(spec);
  const bool sd = is_self_dual(code);
  CodeFile file{symmetrize ? hconcat(Matrix::identity(f, code.k()), symmetrized_block(spec)) : code.generator(), {}};
  file.set("self_dual", sd ? "true" : "false");
  out.code_file(file, dest);
  out.record({"circulant", dest.empty() ? "-" : dest, p, code.n(), code.k(), std::nullopt,
              sd ? "self-dual" : "not-self-dual", g.seed});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual codes over prime fields: construction, verification and search."};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "One JSON record per result on stdout");
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--catalog", g.catalog, "Fixture catalog (default: $SDCODES_CATALOG or the built-in path)");
  app.add_option("--budget", g.budget, "Weight-engine work units (default: $SDCODES_WORK_BUDGET or 1e9)");
  app.add_option("--threads", g.threads, "Weight-engine threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--log", g.log, "Append JSON records to this file");

  std::string verify_target;
  bool no_weights = false;
  auto* verify = app.add_subcommand("verify", "Check a code file, a catalog id, or the whole catalog");
  verify->add_option("target", verify_target, "File, catalog id, or 'catalog'");
  verify->add_flag("--no-weights", no_weights, "Skip minimum-weight checks");

  MinWeightArgs mw;
  auto* minweight = app.add_subcommand("minweight", "Minimum weight of a code file");
  minweight->add_option("file", mw.file)->required();
  minweight->add_flag("--exact", mw.exact, "Remove the work cap (may run for hours on long codes)");
  minweight->add_flag("--exhaustive", mw.exhaustive, "Enumerate every codeword");
  minweight->add_option("--seconds", mw.seconds, "Wall-clock cap");
  minweight->add_option("--target-bound", mw.target_bound, "Stop once d >= this is proven");
  minweight->add_option("--witness-trials", mw.witness_trials, "Random information sets tried first");

  ExtendArgs ex;
  auto* extend_cmd = app.add_subcommand("extend", "One building-up step");
  extend_cmd->add_option("file", ex.file)->required();
  extend_cmd->add_option("--alpha", ex.alpha)->required();
  extend_cmd->add_option("--gamma", ex.gamma)->required();
  extend_cmd->add_option("--x", ex.x, "Comma-separated vector")->required();
  extend_cmd->add_option("--out", ex.out);
  extend_cmd->add_flag("--check-identities", ex.check_identities);
  extend_cmd->add_flag("--min-weight", ex.weight, "Also compute d");

  std::string reduce_file, reduce_out;
  std::int64_t reduce_alpha = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Undo one building-up step");
  reduce_cmd->add_option("file", reduce_file)->required();
  reduce_cmd->add_option("--alpha", reduce_alpha)->required();
  reduce_cmd->add_option("--out", reduce_out);

  SearchArgs se;
  auto* search = app.add_subcommand("search", "Beam search for long self-dual codes");
  search->add_option("--p", se.p)->required();
  search->add_option("--from", se.from, "Base code file or 'trivial'")->capture_default_str();
  search->add_option("--to", se.to, "Target length")->required();
  search->add_option("--beam", se.beam)->capture_default_str();
  search->add_option("--samples", se.samples, "Steps drawn per (code, alpha) from large eigenspaces")
      ->capture_default_str();
  search->add_option("--full-limit", se.full_limit, "Enumerate eigenspaces up to this size in full")
      ->capture_default_str();
  search->add_option("--out", se.out);

  ReplayArgs rp;
  auto* replay_cmd = app.add_subcommand("replay", "Rebuild a catalog chain and check its weights");
  replay_cmd->add_option("chain", rp.chain, "Chain name (gf13, gf17, gf17-short)")->required();
  replay_cmd->add_flag("--exact", rp.exact, "Remove the work cap");
  replay_cmd->add_option("--slack", rp.slack, "Accept a proven bound of claimed - slack with a witness at claimed");
  replay_cmd->add_option("--witness-trials", rp.witness_trials)->capture_default_str();

  std::uint32_t qr_p = 0, qr_ell = 0;
  bool qr_ext = false, qr_weight = false;
  std::string qr_out;
  auto* qr = app.add_subcommand("qr", "Quadratic residue code");
  qr->add_option("--p", qr_p)->required();
  qr->add_option("--ell", qr_ell)->required();
  qr->add_flag("--extended", qr_ext);
  qr->add_flag("--min-weight", qr_weight);
  qr->add_option("--out", qr_out);

  std::uint32_t dc_p = 0;
  std::string dc_row, dc_border, dc_out;
  bool dc_sym = false;
  auto* circ = app.add_subcommand("circulant", "Double circulant code");
  circ->add_option("--p", dc_p)->required();
  circ->add_option("--row", dc_row, "Comma-separated first row")->required();
  circ->add_option("--bordered", dc_border, "a,b");
  circ->add_flag("--symmetrize", dc_sym, "Reverse the circulant's columns");
  circ->add_option("--out", dc_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseFailure;
  }

  try {
    if (*verify) return run_verify(g, verify_target, !no_weights);
    if (*minweight) return run_minweight(g, mw);
    if (*extend_cmd) return run_extend(g, ex);
    if (*reduce_cmd) return run_reduce(g, reduce_file, reduce_alpha, reduce_out);
    if (*search) return run_search(g, se);
    if (*replay_cmd) return run_replay(g, rp);
    if (*qr) return run_qr(g, qr_p, qr_ell, qr_ext, qr_weight, qr_out);
    if (*circ) return run_circulant(g, dc_p, dc_row, dc_border, dc_sym, dc_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPreconditionFailure;
  }
  return kOk;
}
