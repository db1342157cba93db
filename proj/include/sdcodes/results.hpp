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
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdcodes/buildup.hpp"
#include "sdcodes/equiv.hpp"

namespace sdcodes {

/// The structured output record: one per result.
struct ResultRecord {
  std::string command;
  std::string id;
  std::uint32_t p = 0;
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d;
  std::string status;
  std::optional<std::uint64_t> seed;

  nlohmann::json to_json() const;
};

nlohmann::json to_json(const BuildStep& step);
nlohmann::json to_json(const WeightReport& report);
nlohmann::json to_json(const Fingerprint& fp);
nlohmann::json matrix_rows(const Matrix& m);

BuildStep step_from_json(const PrimeField& field, const nlohmann::json& j);
Matrix matrix_from_rows(const PrimeField& field, const nlohmann::json& rows);

/// Base matrix, steps, per-step reports and the final matrix.
nlohmann::json chain_to_json(const Chain& chain);

struct LoggedChain {
  SymmetricSD base;
  std::vector<BuildStep> steps;
  Matrix final_a;
};

/// Throws ParseError on malformed records.
LoggedChain chain_from_json(const nlohmann::json& j);

/// Append-only JSON-lines stream. Each record gets a UTC timestamp.
class ResultLog {
 public:
  /// Throws PreconditionError if the file cannot be opened for appending.
  explicit ResultLog(const std::string& path);
  void append(nlohmann::json record);

  static std::vector<nlohmann::json> read(const std::string& path);

 private:
  std::ofstream out_;
};

}  // namespace sdcodes
