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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdcodes/linalg.hpp"

namespace sdcodes {

/// A k-dimensional subspace of GF(p)^n given by a full-rank k x n generator.
class LinearCode {
 public:
  /// Throws InvalidCode if n = 0, k = 0 or the rows are dependent.
  explicit LinearCode(Matrix generator);

  const PrimeField& field() const noexcept { return g_.field(); }
  std::size_t n() const noexcept { return g_.cols(); }
  std::size_t k() const noexcept { return g_.rows(); }
  const Matrix& generator() const noexcept { return g_; }

  /// Message (length k) times the generator.
  Vector encode(const Vector& message) const { return vec_mat(message, g_); }
  /// Membership test via rank.
  bool contains(const Vector& word) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.g_ == b.g_; }

 private:
  Matrix g_;
};

/// True iff n = 2k and G G^T = 0.
bool is_self_dual(const LinearCode& c);

/// Same code, i.e. same row space (not merely equivalent).
bool same_code(const LinearCode& a, const LinearCode& b);

/// A self-dual code with symmetric generator (I_n | A): A = A^T and A^2 = -I.
///
/// The empty (n = 0) instance exists only as the neutral element of
/// direct_sum; asking it for a generator throws InvalidCode.
class SymmetricSD {
 public:
  /// Throws NotSymmetricSD unless all three assertions below hold.
  explicit SymmetricSD(Matrix a);

  static SymmetricSD empty(const PrimeField& field);
  /// The [2,1,2] code (1 | alpha) with alpha^2 = -1.
  static SymmetricSD unit(const FieldElement& alpha);

  const PrimeField& field() const noexcept { return a_.field(); }
  std::size_t half_n() const noexcept { return a_.rows(); }
  const Matrix& a() const noexcept { return a_; }
  /// (I_n | A)
  Matrix generator() const;
  LinearCode code() const { return LinearCode(generator()); }

  // The three defining assertions, each checked independently.
  static bool is_symmetric(const Matrix& a) { return a.is_symmetric(); }
  static bool squares_to_minus_identity(const Matrix& a);
  static bool generates_self_orthogonal(const Matrix& a);

  friend bool operator==(const SymmetricSD& x, const SymmetricSD& y) { return x.a_ == y.a_; }

 private:
  struct Unchecked {};
  SymmetricSD(Matrix a, Unchecked) : a_(std::move(a)) {}

  Matrix a_;
};

/// The SymmetricSD whose (I | A) is the rref of C's generator, if the
/// pivots are the first n/2 columns and A is symmetric. Throws NotSelfDual.
std::optional<SymmetricSD> to_symmetric(const LinearCode& c);

/// Block-diagonal A1 (+) A2. Throws FieldMismatch.
SymmetricSD direct_sum(const SymmetricSD& c1, const SymmetricSD& c2);

enum class WeightStatus { exact, lower_bound };

std::string to_string(WeightStatus s);

/// Result of a minimum-weight computation.
///
/// For status exact, min_weight is d and bound_value = d. For status
/// lower_bound, min_weight is the weight of the lightest codeword found (an
/// upper bound on d) and bound_value is a proven lower bound.
struct WeightReport {
  std::size_t min_weight = 0;
  WeightStatus status = WeightStatus::lower_bound;
  std::size_t bound_value = 0;
  std::optional<Vector> witness;
  std::uint64_t work = 0;  // work units spent
  std::size_t rounds = 0;  // highest completed enumeration weight
  std::size_t info_sets = 0;

  bool is_exact() const noexcept { return status == WeightStatus::exact; }
};

/// Limits for the information-set engine. Work units count evaluated
/// enumeration leaves: one leaf scores every nonzero multiple of one
/// codeword direction, so a round of weight w over a k-dimensional code
/// costs binom(k, w) (p-1)^(w-2) units for w >= 2.
struct WeightBudget {
  std::uint64_t work_units = 50'000'000'000ULL;
  /// Wall-clock cap; when set, results may depend on machine speed.
  std::optional<double> seconds;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  /// Random information sets tried before enumeration to seed the witness.
  std::uint64_t witness_trials = 64;
  /// Stop once the proven bound reaches this value even if not exact.
  std::optional<std::size_t> target_bound;
  /// Give up as soon as a codeword lighter than this is found.
  std::optional<std::size_t> abandon_below;
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 100'000'000ULL;

/// Enumerates every nonzero message. Throws BudgetExceeded if p^k exceeds
/// the budget.
WeightReport min_weight_exhaustive(const LinearCode& c, std::uint64_t budget = kDefaultExhaustiveBudget);

/// Multi-information-set enumeration with a running lower bound. Never
/// throws on budget exhaustion; the status degrades to lower_bound.
WeightReport min_weight(const LinearCode& c, const WeightBudget& budget = {});

/// Number of codewords of each weight 0..cutoff.
struct WeightCounts {
  std::vector<std::uint64_t> counts;
  bool complete = false;  // every count is exact
  /// counts[w] is exact for every w < exact_below.
  std::size_t exact_below = 0;
  std::uint64_t work = 0;
};

WeightCounts weight_counts_exhaustive(const LinearCode& c, std::size_t cutoff,
                                      std::uint64_t budget = kDefaultExhaustiveBudget);

/// Counts from information-set rounds, exact once the running bound exceeds
/// the cutoff.
WeightCounts weight_counts(const LinearCode& c, std::size_t cutoff, const WeightBudget& budget = {});

/// d = n - k + 1. Throws InexactWeight unless the report is exact.
bool is_mds(const LinearCode& c, const WeightReport& report);

}  // namespace sdcodes
