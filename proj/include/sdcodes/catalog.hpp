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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdcodes/buildup.hpp"
#include "sdcodes/code.hpp"

namespace sdcodes {

/// One transcribed matrix with its claimed parameters.
struct CatalogEntry {
  std::string id;
  std::string group;
  /// "standard": the block A of (I | A). "basis": the rows themselves.
  std::string form;
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d;
  bool symmetric = false;
  bool self_dual = false;
  std::optional<bool> mds;
  Matrix matrix{PrimeField(3), 0, 0};
  std::string checksum;  // as stored
  bool checksum_ok = false;

  bool is_standard() const { return form == "standard"; }
  /// (I | A) for standard entries, the stored rows otherwise.
  Matrix generator() const;
  LinearCode code() const { return LinearCode(generator()); }
};

struct CatalogStep {
  BuildStep step;
  std::optional<std::size_t> d;
  std::string result;  // entry id
};

/// A building-up chain whose base and results are catalog entries.
struct CatalogChain {
  std::string name;
  std::uint32_t p = 0;
  std::string base;
  std::vector<CatalogStep> steps;
};

class Catalog {
 public:
  /// Throws ParseError on unreadable or malformed catalogs. Checksum
  /// mismatches are recorded per entry, not thrown.
  static Catalog load(const std::string& path);
  /// $SDCODES_CATALOG if set, else the path compiled into the library.
  static Catalog load_default();
  static std::string default_path();

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const std::vector<CatalogChain>& chains() const noexcept { return chains_; }
  const CatalogEntry* find(const std::string& id) const;
  /// Throws PreconditionError for unknown ids.
  const CatalogEntry& at(const std::string& id) const;
  const CatalogChain* chain(const std::string& name) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<CatalogChain> chains_;
};

/// FNV-1a (64 bit) of the rows joined by newlines, as 16 hex digits.
std::string row_checksum(const std::vector<std::string>& rows);

struct CheckLine {
  std::string entry;
  std::string check;  // dimension, checksum, symmetric, self_dual, min_weight, mds
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  /// Weight budget for the claimed-d check; absent skips it.
  std::optional<WeightBudget> weights;
  /// Restrict to these ids; empty means every entry.
  std::vector<std::string> only;
};

/// Re-derives every claimed property. Failures become report lines.
std::vector<CheckLine> verify_catalog(const Catalog& catalog, const VerifyOptions& options = {});

/// Checks one entry against its claims.
std::vector<CheckLine> verify_entry(const CatalogEntry& entry, const std::optional<WeightBudget>& weights);

}  // namespace sdcodes
