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
#include <random>
#include <utility>
#include <vector>

#include "sdcodes/code.hpp"

namespace sdcodes {

/// Signed permutation acting on coordinates: (x tau)_j = signs[j] * x[perm[j]].
class MonomialTransform {
 public:
  /// Throws PreconditionError unless perm is a bijection of 0..n-1 and every
  /// sign is 1 or -1.
  MonomialTransform(std::vector<std::size_t> perm, std::vector<FieldElement> signs);

  static MonomialTransform identity(const PrimeField& field, std::size_t n);
  static MonomialTransform random(const PrimeField& field, std::size_t n, std::mt19937_64& rng);

  std::size_t size() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const std::vector<FieldElement>& signs() const noexcept { return signs_; }

  Vector apply(const Vector& x) const;
  /// Acts on the columns.
  Matrix apply(const Matrix& g) const;
  MonomialTransform inverse() const;
  /// `this` first, then `then`.
  MonomialTransform compose(const MonomialTransform& then) const;

  friend bool operator==(const MonomialTransform& a, const MonomialTransform& b) {
    return a.perm_ == b.perm_ && a.signs_ == b.signs_;
  }

 private:
  std::vector<std::size_t> perm_;
  std::vector<FieldElement> signs_;
};

/// C tau. Throws DimensionMismatch when the lengths differ.
LinearCode apply(const LinearCode& c, const MonomialTransform& tau);

/// The code of (I | A^T) and tau = tau_1 gamma_1 with apply(C, tau) equal to
/// it: tau_1 swaps the two halves and gamma_1 negates the first half.
/// Requires C self-dual with rref (I | A); throws NotStandardForm otherwise.
std::pair<LinearCode, MonomialTransform> transpose_equivalent(const LinearCode& c);
std::pair<LinearCode, MonomialTransform> transpose_equivalent(const SymmetricSD& c);

/// Truncated weight distribution; a monomial invariant.
struct Fingerprint {
  std::size_t n = 0, k = 0;
  std::uint32_t p = 0;
  std::vector<std::uint64_t> counts;  // counts[w], w = 0..cutoff
  std::size_t exact_below = 0;        // counts[w] certified for w < exact_below

  /// Lowest nonzero weight among the certified counts.
  std::optional<std::size_t> min_weight() const;
  /// Number of codewords of minimum weight, when certified.
  std::optional<std::uint64_t> min_weight_count() const;
};

inline constexpr std::uint64_t kDefaultFingerprintWork = 200'000'000ULL;

/// Weight counts up to `cutoff` from completed enumeration rounds only, so
/// equal budgets give equal fingerprints. Without a cutoff the exact minimum
/// weight (within the same budget) is used.
Fingerprint fingerprint(const LinearCode& c, std::uint64_t work_units = kDefaultFingerprintWork,
                        std::optional<std::size_t> cutoff = std::nullopt);

/// True when the fingerprints certify inequivalence: the parameters differ
/// or a count differs at a weight certified in both.
bool distinguishes(const Fingerprint& a, const Fingerprint& b);

enum class Equivalence { yes, no, unknown };

struct EquivalenceResult {
  Equivalence answer = Equivalence::unknown;
  std::optional<MonomialTransform> witness;  // apply(c1, witness) == c2
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultEquivalenceNodes = 50'000'000ULL;

/// Backtracking over signed permutations. An information set of c2 is matched
/// column by column; the remaining columns must then agree as multisets up
/// to sign. Coordinate weight profiles prune the choices when the codes are
/// small enough to enumerate. Throws ParameterMismatch unless n, k and p agree.
EquivalenceResult is_equivalent_small(const LinearCode& c1, const LinearCode& c2,
                                      std::uint64_t node_limit = kDefaultEquivalenceNodes);

}  // namespace sdcodes
