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

#include "sdcodes/results.hpp"

#include <chrono>
#include <ctime>

#include "sdcodes/errors.hpp"

namespace sdcodes {

using nlohmann::json;

json ResultRecord::to_json() const {
  json j;
  j["command"] = command;
  j["id"] = id;
  j["p"] = p;
  j["n"] = n;
  j["k"] = k;
  j["d"] = d ? json(*d) : json(nullptr);
  j["status"] = status;
  j["seed"] = seed ? json(*seed) : json(nullptr);
  return j;
}

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto s = m.row_span(r);
    rows.push_back(std::vector<Residue>(s.begin(), s.end()));
  }
  return rows;
}

json to_json(const BuildStep& step) {
  const auto x = step.x.entries();
  return {{"alpha", step.alpha.value()},
          {"gamma", step.gamma.value()},
          {"x", std::vector<Residue>(x.begin(), x.end())}};
}

json to_json(const WeightReport& r) {
  json j{{"min_weight", r.min_weight},
         {"status", to_string(r.status)},
         {"bound", r.bound_value},
         {"work", r.work},
         {"rounds", r.rounds},
         {"info_sets", r.info_sets}};
  if (r.witness) {
    const auto w = r.witness->entries();
    j["witness"] = std::vector<Residue>(w.begin(), w.end());
  }
  return j;
}

json to_json(const Fingerprint& fp) {
  return {{"n", fp.n}, {"k", fp.k}, {"p", fp.p}, {"counts", fp.counts}, {"exact_below", fp.exact_below}};
}

Matrix matrix_from_rows(const PrimeField& field, const json& rows) {
  try {
    std::vector<Residue> v;
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto row = rows.at(r).get<std::vector<std::int64_t>>();
      if (r == 0) cols = row.size();
      if (row.size() != cols) throw ParseError("ragged matrix rows");
      for (auto x : row) {
        if (x < 0 || static_cast<std::uint64_t>(x) >= field.p()) throw ParseError("matrix entry out of range");
        v.push_back(static_cast<Residue>(x));
      }
    }
    return Matrix(field, rows.size(), cols, std::move(v));
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix rows: ") + e.what());
  }
}

BuildStep step_from_json(const PrimeField& field, const json& j) {
  try {
    return BuildStep{field(j.at("alpha").get<std::int64_t>()), field(j.at("gamma").get<std::int64_t>()),
                     Vector(field, j.at("x").get<std::vector<Residue>>())};
  } catch (const json::exception& e) {
    throw ParseError(std::string("step: ") + e.what());
  }
}

json chain_to_json(const Chain& chain) {
  json j;
  j["p"] = chain.base.field().p();
  j["base"] = matrix_rows(chain.base.a());
  j["steps"] = json::array();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    json s = to_json(chain.steps[i]);
    s["n"] = 2 * chain.codes[i].half_n();
    if (i < chain.results.size()) s["weight"] = to_json(chain.results[i]);
    j["steps"].push_back(std::move(s));
  }
  j["final"] = matrix_rows(chain.last().a());
  return j;
}

LoggedChain chain_from_json(const json& j) {
  try {
    const PrimeField f(j.at("p").get<std::uint32_t>());
    LoggedChain out{SymmetricSD(matrix_from_rows(f, j.at("base"))), {}, matrix_from_rows(f, j.at("final"))};
    for (const auto& s : j.at("steps")) out.steps.push_back(step_from_json(f, s));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("chain record: ") + e.what());
  }
}

ResultLog::ResultLog(const std::string& path) : out_(path, std::ios::app) {
  if (!out_) throw PreconditionError("cannot open log " + path);
}

void ResultLog::append(json record) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  record["timestamp"] = buf;
  out_ << record.dump() << '\n';
  out_.flush();
}

std::vector<json> ResultLog::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open log " + path);
  std::vector<json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError("log line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace sdcodes
