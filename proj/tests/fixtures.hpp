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

#pragma once

// Test-side reader for data/catalog.json, independent of the library's
// catalog loader.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sdcodes/linalg.hpp"

namespace fixtures {

inline const nlohmann::json& catalog() {
  static const nlohmann::json doc = [] {
    std::ifstream in(SDCODES_CATALOG_PATH);
    if (!in) throw std::runtime_error("cannot open " SDCODES_CATALOG_PATH);
    return nlohmann::json::parse(in);
  }();
  return doc;
}

inline const nlohmann::json& entry(const std::string& id) {
  for (const auto& e : catalog()["entries"])
    if (e["id"] == id) return e;
  throw std::runtime_error("no catalog entry " + id);
}

/// Entries stored exactly as printed although one entry is inconsistent
/// with the construction that produced them.
inline bool misprinted(const std::string& id) { return id == "A_5^{18}"; }

/// The stored block: A for standard-form entries, the basis for others.
inline sdcodes::Matrix matrix(const std::string& id) {
  const auto& e = entry(id);
  const sdcodes::PrimeField f(e["p"].get<std::uint32_t>());
  std::vector<sdcodes::Residue> v;
  std::size_t rows = 0, cols = 0;
  for (const auto& row : e["rows"]) {
    std::istringstream ss(row.get<std::string>());
    std::size_t c = 0;
    for (long x; ss >> x; ++c) v.push_back(static_cast<sdcodes::Residue>(x));
    cols = c;
    ++rows;
  }
  return sdcodes::Matrix(f, rows, cols, std::move(v));
}

inline sdcodes::Matrix standard_generator(const std::string& id) {
  const auto a = matrix(id);
  return sdcodes::hconcat(sdcodes::Matrix::identity(a.field(), a.rows()), a);
}

}  // namespace fixtures
