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

// Acceptance checks. One PASS/FAIL line per criterion; exit status is 0
// only if every selected criterion passes.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sdcodes/buildup.hpp"
#include "sdcodes/catalog.hpp"
#include "sdcodes/constructions.hpp"
#include "sdcodes/equiv.hpp"

using namespace sdcodes;

namespace {

// Pinned limits.
constexpr double kCatalogSeconds = 5.0;
constexpr double kExampleSeconds = 10.0;
constexpr double kRoundTripSeconds = 60.0;
constexpr std::size_t kRoundTripSteps = 500;
constexpr double kCompletenessSeconds = 10.0;
constexpr double kTier1Seconds = 15 * 60.0;
constexpr std::size_t kTier2Slack = 3;
constexpr std::uint64_t kTier2WitnessTrials = 2000;
constexpr std::uint64_t kTier2WorkUnits = 7'200'000'000ULL;
constexpr double kTier2SecondsPerCode = 10 * 60.0;
constexpr int kPlants = 50;
constexpr int kFingerprintTransforms = 1000;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

struct Context {
  Catalog catalog;
  unsigned threads = 1;
  std::vector<std::string> unit_tests;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << s << " s";
  return o.str();
}

bool minus_identity(const Matrix& a) {
  return a * a.transpose() == Matrix::scalar(a.field()(-1), a.rows());
}

// ------------------------------------------------------------------ 1

Outcome catalog_matrices(const Context& ctx) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (const CatalogEntry& e : ctx.catalog.entries()) {
    if (!e.is_standard()) continue;
    o.expect(e.checksum_ok, e.id + ": checksum");
    const Matrix& a = e.matrix;
    const bool sym = a == a.transpose();
    const bool sd = minus_identity(a);
    if (e.id == "A_5^{18}") {
      o.note("A_5^{18} (extension example) is judged by criterion 2");
      continue;
    }
    ++checked;
    if (e.symmetric) o.expect(sym, e.id + ": not symmetric");
    o.expect(sd == e.self_dual, e.id + ": A A^T = -I is " + (sd ? "true" : "false"));
  }
  for (const char* id : {"QR_13_18", "QR_17_14"}) o.expect(!minus_identity(ctx.catalog.at(id).matrix), std::string(id) + " is self-dual");
  const double t = since(t0);
  o.expect(t < kCatalogSeconds, "took " + fmt(t));
  o.note(std::to_string(checked) + " matrices in " + fmt(t));
  return o;
}

// ------------------------------------------------------------------ 2

Outcome example_extension(const Context& ctx) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const PrimeField f(5);
  const SymmetricSD in(ctx.catalog.at("A_5^{16}").matrix);
  const SymmetricSD out = extend(in, BuildStep{f(2), f(0), Vector(f, {4, 3, 4, 1, 1, 1, 1, 3})}, true);
  const Matrix& printed = ctx.catalog.at("A_5^{18}").matrix;
  std::size_t diffs = 0;
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c)
      if (out.a()(r, c) != printed(r, c)) {
        ++diffs;
        o.fail("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): computed " +
               std::to_string(out.a()(r, c)) + ", printed " + std::to_string(printed(r, c)));
      }
  const WeightReport d_in = min_weight_exhaustive(in.code());
  const WeightReport d_out = min_weight_exhaustive(out.code());
  o.expect(d_in.is_exact() && d_in.min_weight == 6, "d(input) = " + std::to_string(d_in.min_weight));
  o.expect(d_out.is_exact() && d_out.min_weight == 7, "d(output) = " + std::to_string(d_out.min_weight));
  const double t = since(t0);
  o.expect(t < kExampleSeconds, "took " + fmt(t));
  o.note(std::to_string(diffs) + " differing entries; d = " + std::to_string(d_in.min_weight) + " -> " +
         std::to_string(d_out.min_weight) + " in " + fmt(t));
  return o;
}

// ------------------------------------------------------------------ 3

SymmetricSD grow(const PrimeField& f, std::size_t half, std::mt19937_64& rng) {
  const auto roots = roots_of_minus_one(f);
  SymmetricSD c = SymmetricSD::unit(rng() & 1 ? roots.first : roots.second);
  while (c.half_n() < half) {
    const FieldElement alpha = rng() & 1 ? roots.first : roots.second;
    const auto steps = admissible_steps(c, alpha, StepEnumeration::sampled(4, rng()));
    c = steps.empty() ? extend(c, BuildStep::trivial(alpha, c.half_n())) : extend(c, steps[rng() % steps.size()]);
  }
  return c;
}

Outcome round_trip(const Context&) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::size_t total = 0;
  for (std::uint32_t p : {5u, 13u, 17u, 29u}) {
    const PrimeField f(p);
    const auto roots = roots_of_minus_one(f);
    std::size_t here = 0;
    for (std::size_t iter = 0; here < kRoundTripSteps / 4 || iter < 8; ++iter) {
      const std::size_t half = 1 + iter % 8;
      const SymmetricSD c = grow(f, half, rng);
      const FieldElement alpha = rng() & 1 ? roots.first : roots.second;
      for (const BuildStep& s : admissible_steps(c, alpha, StepEnumeration::sampled(3, rng()))) {
        const SymmetricSD e = extend(c, s, true);
        const bool triple = SymmetricSD::is_symmetric(e.a()) && SymmetricSD::squares_to_minus_identity(e.a()) &&
                            SymmetricSD::generates_self_orthogonal(e.a());
        const auto [back, step] = reduce(e, s.alpha);
        if (!triple || !(back == c) || !(step == s))
          o.fail("p = " + std::to_string(p) + ", half-length " + std::to_string(half));
        ++here;
      }
    }
    total += here;
  }
  const double t = since(t0);
  o.expect(total >= kRoundTripSteps, "only " + std::to_string(total) + " steps");
  o.expect(t < kRoundTripSeconds, "took " + fmt(t));
  o.note(std::to_string(total) + " steps in " + fmt(t));
  return o;
}

// ------------------------------------------------------------------ 4

Outcome completeness(const Context&) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const PrimeField f(5);
  std::set<std::vector<Residue>> brute;
  for (Residue a = 0; a < 5; ++a)
    for (Residue b = 0; b < 5; ++b)
      for (Residue d = 0; d < 5; ++d) {
        const Matrix m(f, 2, 2, {a, b, b, d});
        if (m * m == Matrix::scalar(f(-1), 2)) brute.insert(m.entries());
      }
  std::set<std::vector<Residue>> built;
  for (Residue base_alpha : {2u, 3u}) {
    const SymmetricSD base = SymmetricSD::unit(f(base_alpha));
    for (Residue alpha : {2u, 3u})
      for (const BuildStep& s : admissible_steps(base, f(alpha), StepEnumeration::full(true)))
        built.insert(extend(base, s).a().entries());
  }
  o.expect(!brute.empty() && built == brute, "brute force " + std::to_string(brute.size()) + " matrices, built " +
                                                 std::to_string(built.size()));
  const double t = since(t0);
  o.expect(t < kCompletenessSeconds, "took " + fmt(t));
  o.note(std::to_string(brute.size()) + " matrices, sets equal: " + (built == brute ? "yes" : "no"));
  return o;
}

// ------------------------------------------------------------------ 5, 6, 7

WeightBudget exact_budget(const Context& ctx) {
  WeightBudget b;
  b.work_units = std::numeric_limits<std::uint64_t>::max();
  b.threads = ctx.threads;
  return b;
}

WeightBudget tier2_budget(const Context& ctx, std::size_t claimed) {
  WeightBudget b;
  b.work_units = kTier2WorkUnits;
  b.seconds = kTier2SecondsPerCode;
  b.threads = ctx.threads;
  b.witness_trials = kTier2WitnessTrials;
  b.target_bound = claimed > kTier2Slack ? claimed - kTier2Slack : 1;
  return b;
}

void check_exact(Outcome& o, const std::string& name, const LinearCode& c, std::size_t claimed, const Context& ctx) {
  const WeightReport r = min_weight(c, exact_budget(ctx));
  o.expect(r.is_exact() && r.min_weight == claimed,
           name + ": d = " + std::to_string(r.min_weight) + (r.is_exact() ? "" : " (not exact)") + ", claimed " +
               std::to_string(claimed));
}

void check_tier2(Outcome& o, const std::string& name, const LinearCode& c, std::size_t claimed, const Context& ctx) {
  const WeightReport r = min_weight(c, tier2_budget(ctx, claimed));
  const bool ok = r.min_weight == claimed && r.bound_value + kTier2Slack >= claimed;
  o.expect(ok, name + ": witness " + std::to_string(r.min_weight) + ", bound " + std::to_string(r.bound_value) +
                   ", claimed " + std::to_string(claimed));
  if (ok) o.note(name + " " + std::to_string(r.bound_value) + ".." + std::to_string(r.min_weight));
}

LinearCode qr_code(std::uint32_t p, std::uint32_t ell) {
  return qr_extended(QRSpec::make(ell, PrimeField(p))).code;
}

Outcome tier1(const Context& ctx) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [id, d] : std::vector<std::pair<std::string, std::size_t>>{
           {"A_13^{26,1}", 10}, {"A_17^{24,1}", 9}, {"A_17^{26,1}", 10}, {"A_17^{28,1}", 11}, {"G_13^{18}", 8}})
    check_exact(o, id, LinearCode(ctx.catalog.at(id).generator()), d, ctx);
  check_exact(o, "QR [24,12] GF(13)", qr_code(13, 23), 10, ctx);
  check_exact(o, "QR [20,10] GF(23)", qr_code(23, 19), 10, ctx);
  const LinearCode c14(ctx.catalog.at("QR_17_14").generator());
  const WeightReport r = min_weight(c14, exact_budget(ctx));
  o.expect(r.is_exact() && is_mds(c14, r), "QR_17_14 is not MDS (d = " + std::to_string(r.min_weight) + ")");
  const double t = since(t0);
  o.expect(t <= kTier1Seconds, "took " + fmt(t));
  o.note("8 codes in " + fmt(t));
  return o;
}

Outcome tier2(const Context& ctx) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t codes = 0;
  for (const char* name : {"gf13", "gf17"}) {
    const CatalogChain* ch = ctx.catalog.chain(name);
    if (!ch) {
      o.fail(std::string("no chain ") + name);
      continue;
    }
    std::vector<BuildStep> steps;
    for (const auto& s : ch->steps) steps.push_back(s.step);
    const Chain chain = replay(SymmetricSD(ctx.catalog.at(ch->base).matrix), steps);
    for (std::size_t i = 0; i <= steps.size(); ++i) {
      const SymmetricSD& code = i == 0 ? chain.base : chain.codes[i - 1];
      const std::string id = i == 0 ? ch->base : ch->steps[i - 1].result;
      const std::optional<std::size_t> claimed = i == 0 ? ctx.catalog.at(id).d : ch->steps[i - 1].d;
      if (2 * code.half_n() < 28 || 2 * code.half_n() > 40) continue;
      o.expect(code.a() == ctx.catalog.at(id).matrix, id + ": replay differs from the stored matrix");
      if (!claimed) {
        o.fail(id + ": no claimed d");
        continue;
      }
      check_tier2(o, id, code.code(), *claimed, ctx);
      ++codes;
    }
  }
  o.expect(codes == 14, std::to_string(codes) + " codes of length 28-40");
  o.note(std::to_string(codes) + " codes in " + fmt(since(t0)));
  return o;
}

Outcome qr(const Context& ctx) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  struct Claim {
    std::uint32_t p, n;
    std::size_t d;
  };
  for (const Claim& c : std::vector<Claim>{
           {13, 24, 10}, {19, 32, 14}, {23, 20, 10}, {29, 24, 12}, {31, 24, 12}, {41, 24, 12}, {41, 32, 14}}) {
    const std::string name = "(" + std::to_string(c.p) + "," + std::to_string(c.n) + ")";
    const QRExtension e = qr_extended(QRSpec::make(c.n - 1, PrimeField(c.p)));
    o.expect(e.kind == QRKind::self_dual && is_self_dual(e.code), name + ": not self-dual");
    o.expect(e.code.n() == c.n && e.code.k() == c.n / 2, name + ": wrong [n,k]");
    if ((c.p == 13 && c.n == 24) || (c.p == 23 && c.n == 20))
      check_exact(o, name, e.code, c.d, ctx);
    else
      check_tier2(o, name, e.code, c.d, ctx);
  }
  o.note("7 pairs in " + fmt(since(t0)));
  return o;
}

// ------------------------------------------------------------------ 8

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Residue>(rng() % f.p());
  return m;
}

LinearCode random_code(const PrimeField& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix g = random_matrix(f, k, n, rng);
    if (rank(g) == k) return LinearCode(std::move(g));
  }
}

Matrix random_invertible(const PrimeField& f, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(f, k, k, rng);
    if (inverse(m)) return m;
  }
}

Outcome equivalence(const Context& ctx) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(8);
  const PrimeField f(5);
  int recovered = 0;
  for (int t = 0; t < kPlants; ++t) {
    const LinearCode c = t % 2 ? grow(f, 2 + rng() % 3, rng).code() : random_code(f, 2 + rng() % 3, 5 + rng() % 4, rng);
    const auto tau = MonomialTransform::random(f, c.n(), rng);
    const LinearCode planted(random_invertible(f, c.k(), rng) * apply(c, tau).generator());
    const EquivalenceResult r = is_equivalent_small(c, planted);
    if (r.answer == Equivalence::yes && r.witness && same_code(apply(c, *r.witness), planted)) ++recovered;
  }
  o.expect(recovered == kPlants, std::to_string(recovered) + "/" + std::to_string(kPlants) + " plants recovered");

  int separations = 0;
  const std::vector<std::string> ids{"A_5^{16}", "G_13^{18}"};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const LinearCode c(ctx.catalog.at(ids[i]).generator());
    const Fingerprint ref = fingerprint(c);
    const int share = kFingerprintTransforms / static_cast<int>(ids.size());
    for (int t = 0; t < share; ++t)
      if (distinguishes(ref, fingerprint(apply(c, MonomialTransform::random(c.field(), c.n(), rng))))) ++separations;
  }
  o.expect(separations == 0, std::to_string(separations) + " false separations");
  o.note(std::to_string(recovered) + "/" + std::to_string(kPlants) + " plants, " +
         std::to_string(kFingerprintTransforms) + " transforms, " + std::to_string(separations) +
         " false separations in " + fmt(since(t0)));
  return o;
}

// ------------------------------------------------------------------ 9

Outcome property_suites(const Context& ctx) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const std::string& exe : ctx.unit_tests) {
    const std::string cmd = "'" + exe + "' --no-version=true --minimal=true > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const bool ok = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    o.expect(ok, exe.substr(exe.find_last_of('/') + 1) + " failed");
  }
  o.expect(!ctx.unit_tests.empty(), "no suites configured");
  o.note(std::to_string(ctx.unit_tests.size()) + " suites in " + fmt(since(t0)));
  return o;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdcodes acceptance checks"};
  std::vector<int> only;
  std::string catalog = SDCODES_CATALOG_PATH;
  unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  app.add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 9));
  app.add_option("--catalog", catalog, "Catalog file");
  app.add_option("--threads", threads, "Weight-engine threads")->check(CLI::Range(1u, 256u));
  CLI11_PARSE(app, argc, argv);

  Context ctx{Catalog::load(catalog), threads, split(SDCODES_UNIT_TESTS, '|')};

  const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> criteria{
      {"catalog matrices symmetric and self-dual as claimed", catalog_matrices},
      {"GF(5) extension example entry-for-entry, d = 6 -> 7", example_extension},
      {"reduce after extend is the identity", round_trip},
      {"2x2 completeness over GF(5)", completeness},
      {"tier-1 exact minimum weights", tier1},
      {"tier-2 bounded verification of the length 28-40 chains", tier2},
      {"extended QR codes", qr},
      {"planted equivalences and fingerprint invariance", equivalence},
      {"property suites", property_suites},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), number) == only.end()) continue;
    Outcome o;
    try {
      o = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << criteria[i].first << '\n';
    for (const auto& n : o.notes) std::cout << "      " << n << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
