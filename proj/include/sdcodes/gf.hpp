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
#include <ostream>
#include <utility>

namespace sdcodes {

using Residue = std::uint32_t;

class FieldElement;

/// The prime field GF(p) for an odd prime p < 2^31.
///
/// A PrimeField is a small value type; all raw-residue helpers expect inputs
/// already reduced to [0, p).
class PrimeField {
 public:
  /// Throws InvalidField unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  bool is_one_mod_four() const noexcept { return p_ % 4 == 1; }

  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for a = 0.
  Residue inv(Residue a) const;

  FieldElement operator()(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A canonical residue together with its modulus. Mixing elements of
/// different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Residue value, const PrimeField& field) : value_(field.reduce(value)), p_(field.p()) {}

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement& a, const FieldElement& b) { return a.value_ <=> b.value_; }

 private:
  void check_same(const FieldElement& o) const;

  Residue value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

bool is_prime(std::uint64_t n);

/// Both solutions of x^2 = -1, smaller residue first.
/// Throws NoRootOfMinusOne when p = 3 (mod 4).
std::pair<FieldElement, FieldElement> roots_of_minus_one(const PrimeField& field);

/// The smaller of the two square roots of a, or nullopt when a is a
/// non-residue. sqrt(0) = 0.
std::optional<FieldElement> sqrt(const FieldElement& a);

/// True iff a is a nonzero quadratic residue.
bool is_nonzero_square(const FieldElement& a);

/// Multiplicative order of a modulo m (gcd(a, m) = 1 required).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace sdcodes
