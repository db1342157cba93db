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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sdcodes/code.hpp"

namespace sdcodes {

/// One building-up step (alpha, gamma, x).
///
/// For x != 0: alpha^2 = -1, gamma^2 = -1 - x x^T, gamma != alpha.
/// The trivial step has x = 0 and gamma = alpha; it appends (1 | alpha) as
/// a direct summand.
struct BuildStep {
  FieldElement alpha;
  FieldElement gamma;
  Vector x;

  bool is_trivial() const { return x.is_zero(); }
  static BuildStep trivial(const FieldElement& alpha, std::size_t n);

  friend bool operator==(const BuildStep& a, const BuildStep& b) {
    return a.alpha == b.alpha && a.gamma == b.gamma && a.x == b.x;
  }
};

/// Throws the matching PreconditionError if `step` cannot extend `c`.
void validate_step(const SymmetricSD& c, const BuildStep& step);

/// A' = [[gamma, x], [x^T, A + beta x^T x]], beta = (gamma - alpha)^-1.
/// With check_identities the intermediate block identities of the
/// construction are asserted as well; the SymmetricSD assertions on the
/// result are always checked.
SymmetricSD extend(const SymmetricSD& c, const BuildStep& step, bool check_identities = false);

/// Inverse of extend: splits A' = [[gamma, x], [x^T, B]] and returns
/// A = B - beta x^T x with the step that rebuilds A'. A summand split off
/// with x = 0 comes back as the trivial step whose alpha is the corner.
/// Throws AlphaEqualsGamma when alpha is the corner entry and x != 0.
std::pair<SymmetricSD, BuildStep> reduce(const SymmetricSD& c, const FieldElement& alpha);

/// Basis of the alpha-eigenspace of A.
std::vector<Vector> eigen_candidates(const SymmetricSD& c, const FieldElement& alpha);

struct StepEnumeration {
  /// Absent: every coefficient vector over the eigenbasis, in ascending
  /// lexicographic order. Present: that many uniformly drawn vectors.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  bool include_trivial = false;

  static StepEnumeration full(bool trivial = false) { return {std::nullopt, 1, trivial}; }
  static StepEnumeration sampled(std::uint64_t count, std::uint64_t seed, bool trivial = false) {
    return {count, seed, trivial};
  }
};

/// Streams admissible steps; the visitor returns false to stop early.
void for_each_admissible_step(const SymmetricSD& c, const FieldElement& alpha, const StepEnumeration& how,
                              const std::function<bool(const BuildStep&)>& visit);

std::vector<BuildStep> admissible_steps(const SymmetricSD& c, const FieldElement& alpha,
                                        const StepEnumeration& how = StepEnumeration::full());

struct Chain {
  SymmetricSD base;
  std::vector<BuildStep> steps;
  std::vector<SymmetricSD> codes;     // codes[i] = result of steps[i]
  std::vector<WeightReport> results;  // empty when weights were not requested

  const SymmetricSD& last() const { return codes.empty() ? base : codes.back(); }
};

/// Applies the steps in order. Reports are computed when a budget is given.
Chain replay(const SymmetricSD& base, const std::vector<BuildStep>& steps,
             const std::optional<WeightBudget>& budget = std::nullopt);

struct SearchOptions {
  std::size_t beam = 8;
  /// Weight-engine budget per evaluated candidate.
  WeightBudget per_candidate{};
  /// Eigenspaces with at most this many vectors are enumerated in full.
  std::uint64_t full_enumeration_limit = 20'000;
  /// Vectors drawn per (code, alpha) otherwise.
  std::uint64_t samples = 2'000;
  std::uint64_t seed = 1;
};

/// Beam search from `base` to half-length target_length / 2. Each level
/// keeps the `beam` best candidates ranked by witness weight, then
/// exactness, then proven bound, then (gamma, x).
Chain search_chain(const SymmetricSD& base, std::size_t target_length, const SearchOptions& options = {});

}  // namespace sdcodes
