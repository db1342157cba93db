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

#include "sdcodes/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sdcodes/errors.hpp"

#ifndef SDCODES_DEFAULT_CATALOG
#define SDCODES_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace sdcodes {

using nlohmann::json;

std::string row_checksum(const std::vector<std::string>& rows) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) {
      h ^= static_cast<unsigned char>('\n');
      h *= 0x100000001b3ULL;
    }
    for (unsigned char c : rows[i]) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Matrix CatalogEntry::generator() const {
  if (!is_standard()) return matrix;
  return hconcat(Matrix::identity(matrix.field(), matrix.rows()), matrix);
}

namespace {

Matrix parse_rows(const PrimeField& f, const std::vector<std::string>& rows, const std::string& id) {
  std::vector<Residue> v;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::istringstream ss(rows[r]);
    std::size_t c = 0;
    for (long long x; ss >> x; ++c) {
      if (x < 0 || static_cast<unsigned long long>(x) >= f.p())
        throw ParseError(id + ": entry " + std::to_string(x) + " out of range");
      v.push_back(static_cast<Residue>(x));
    }
    if (!ss.eof()) throw ParseError(id + ": malformed row " + std::to_string(r));
    if (r == 0) cols = c;
    if (c != cols) throw ParseError(id + ": ragged rows");
  }
  return Matrix(f, rows.size(), cols, std::move(v));
}

CatalogEntry parse_entry(const json& e) {
  CatalogEntry out;
  out.id = e.at("id").get<std::string>();
  out.group = e.value("group", "");
  out.form = e.at("form").get<std::string>();
  if (out.form != "standard" && out.form != "basis") throw ParseError(out.id + ": unknown form " + out.form);
  out.n = e.at("n").get<std::size_t>();
  out.k = e.at("k").get<std::size_t>();
  if (!e.at("d").is_null()) out.d = e.at("d").get<std::size_t>();
  out.symmetric = e.at("symmetric").get<bool>();
  out.self_dual = e.at("self_dual").get<bool>();
  if (e.contains("mds")) out.mds = e.at("mds").get<bool>();
  const auto rows = e.at("rows").get<std::vector<std::string>>();
  const auto p = e.at("p").get<std::uint32_t>();
  if (!is_prime(p) || p == 2) throw ParseError(out.id + ": p must be an odd prime");
  out.matrix = parse_rows(PrimeField(p), rows, out.id);
  out.checksum = e.at("checksum").get<std::string>();
  out.checksum_ok = row_checksum(rows) == out.checksum;
  return out;
}

CatalogChain parse_chain(const json& c, const std::vector<CatalogEntry>& entries) {
  CatalogChain out;
  out.name = c.at("name").get<std::string>();
  out.p = c.at("p").get<std::uint32_t>();
  out.base = c.at("base").get<std::string>();
  const PrimeField f(out.p);
  auto known = [&](const std::string& id) {
    for (const auto& e : entries)
      if (e.id == id) return;
    throw ParseError("chain " + out.name + " refers to unknown entry " + id);
  };
  known(out.base);
  for (const auto& s : c.at("steps")) {
    CatalogStep step{BuildStep{f(s.at("alpha").get<std::int64_t>()), f(s.at("gamma").get<std::int64_t>()),
                               Vector(f, s.at("x").get<std::vector<Residue>>())},
                     std::nullopt, s.at("result").get<std::string>()};
    if (!s.at("d").is_null()) step.d = s.at("d").get<std::size_t>();
    known(step.result);
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog " + path);
  Catalog cat;
  try {
    const json doc = json::parse(in);
    if (doc.value("format", "") != "sdcodes-catalog/1") throw ParseError("unsupported catalog format");
    for (const auto& e : doc.at("entries")) cat.entries_.push_back(parse_entry(e));
    for (const auto& c : doc.at("chains")) cat.chains_.push_back(parse_chain(c, cat.entries_));
  } catch (const json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  return cat;
}

std::string Catalog::default_path() {
  if (const char* env = std::getenv("SDCODES_CATALOG"); env && *env) return env;
  return SDCODES_DEFAULT_CATALOG;
}

Catalog Catalog::load_default() { return load(default_path()); }

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  if (const auto* e = find(id)) return *e;
  throw PreconditionError("no catalog entry " + id);
}

const CatalogChain* Catalog::chain(const std::string& name) const {
  for (const auto& c : chains_)
    if (c.name == name) return &c;
  return nullptr;
}

// ---------------------------------------------------------------- verification

std::vector<CheckLine> verify_entry(const CatalogEntry& e, const std::optional<WeightBudget>& weights) {
  std::vector<CheckLine> out;
  auto add = [&](std::string check, bool pass, std::string detail) {
    out.push_back({e.id, std::move(check), pass, std::move(detail)});
  };
  auto yes_no = [](bool b) { return b ? std::string("true") : std::string("false"); };

  add("checksum", e.checksum_ok, e.checksum_ok ? "ok" : "stored " + e.checksum + " does not match the rows");

  const Matrix& m = e.matrix;
  const bool dims = e.is_standard() ? (m.is_square() && m.rows() == e.k && e.n == 2 * e.k)
                                    : (m.rows() == e.k && m.cols() == e.n);
  add("dimension", dims, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (!dims) return out;

  if (e.is_standard()) {
    const bool sym = m.is_symmetric();
    add("symmetric", sym == e.symmetric, "claimed " + yes_no(e.symmetric) + ", found " + yes_no(sym));
    const bool sd = (m * m.transpose()) == Matrix::scalar(m.field()(-1), m.rows());
    add("self_dual", sd == e.self_dual, "A A^T = -I claimed " + yes_no(e.self_dual) + ", found " + yes_no(sd));
  } else {
    bool sd = false;
    if (rank(m) == m.rows()) sd = is_self_dual(LinearCode(m));
    add("self_dual", sd == e.self_dual, "claimed " + yes_no(e.self_dual) + ", found " + yes_no(sd));
  }

  if (!weights || !e.d) return out;
  if (rank(e.generator()) != e.k) {
    add("min_weight", false, "generator is rank deficient");
    return out;
  }
  const LinearCode code = e.code();
  const WeightReport r = min_weight(code, *weights);
  const std::size_t claimed = *e.d;
  if (r.is_exact()) {
    add("min_weight", r.min_weight == claimed,
        "exact d = " + std::to_string(r.min_weight) + ", claimed " + std::to_string(claimed));
    if (e.mds) {
      const bool mds = is_mds(code, r);
      add("mds", mds == *e.mds, "claimed " + yes_no(*e.mds) + ", found " + yes_no(mds));
    }
  } else {
    const bool consistent = r.min_weight >= claimed && r.bound_value <= claimed;
    add("min_weight", consistent,
        "lower_bound: " + std::to_string(r.bound_value) + " <= d <= " + std::to_string(r.min_weight) + ", claimed " +
            std::to_string(claimed));
  }
  return out;
}

std::vector<CheckLine> verify_catalog(const Catalog& catalog, const VerifyOptions& options) {
  std::vector<CheckLine> out;
  for (const auto& e : catalog.entries()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), e.id) == options.only.end())
      continue;
    auto lines = verify_entry(e, options.weights);
    out.insert(out.end(), lines.begin(), lines.end());
  }
  return out;
}

}  // namespace sdcodes
