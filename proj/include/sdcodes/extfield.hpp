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
#include <memory>
#include <ostream>
#include <vector>

#include "sdcodes/gf.hpp"

namespace sdcodes {

/// Dense univariate polynomial over GF(p), lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(const PrimeField& field) : field_(field) {}
  Polynomial(const PrimeField& field, std::vector<Residue> coefficients);

  static Polynomial monomial(const PrimeField& field, std::size_t degree, Residue c = 1);
  static Polynomial constant(const PrimeField& field, Residue c);

  const PrimeField& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Residue operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FieldElement coefficient(std::size_t i) const { return FieldElement((*this)[i], field_); }
  const std::vector<Residue>& coefficients() const noexcept { return coeffs_; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial monic() const;
  Residue evaluate(Residue x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

Polynomial gcd(Polynomial a, Polynomial b);

/// base^e mod modulus.
Polynomial powmod(const Polynomial& base, unsigned __int128 e, const Polynomial& modulus);

/// Rabin's test: x^(p^m) = x mod f and gcd(x^(p^(m/q)) - x, f) = 1 for every
/// prime q dividing m.
bool is_irreducible(const Polynomial& f);

/// First monic irreducible polynomial of degree m in the scan that orders
/// x^m + c_{m-1} x^{m-1} + ... + c_0 by the integer sum c_i p^i.
Polynomial find_irreducible(const PrimeField& field, unsigned m);

/// GF(p^m) = GF(p)[x] / (modulus).
struct ExtField {
  PrimeField base;
  Polynomial modulus;
  unsigned degree;

  static std::shared_ptr<const ExtField> make(const PrimeField& base, unsigned m);
  unsigned __int128 order() const;  // p^m
};

class ExtFieldElement {
 public:
  ExtFieldElement(std::shared_ptr<const ExtField> field, const Polynomial& representation);

  static ExtFieldElement zero(std::shared_ptr<const ExtField> field);
  static ExtFieldElement one(std::shared_ptr<const ExtField> field);
  /// Element whose coefficient vector is the base-p digits of `index`.
  static ExtFieldElement from_index(std::shared_ptr<const ExtField> field, unsigned __int128 index);

  const Polynomial& representation() const noexcept { return rep_; }
  const std::shared_ptr<const ExtField>& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_one() const noexcept { return rep_.degree() == 0 && rep_[0] == 1; }
  /// True when the element lies in the prime subfield.
  bool in_base_field() const noexcept { return rep_.degree() <= 0; }

  ExtFieldElement pow(unsigned __int128 e) const;

  ExtFieldElement& operator+=(const ExtFieldElement& o);
  ExtFieldElement& operator-=(const ExtFieldElement& o);
  ExtFieldElement& operator*=(const ExtFieldElement& o);
  friend ExtFieldElement operator+(ExtFieldElement a, const ExtFieldElement& b) { return a += b; }
  friend ExtFieldElement operator-(ExtFieldElement a, const ExtFieldElement& b) { return a -= b; }
  friend ExtFieldElement operator*(ExtFieldElement a, const ExtFieldElement& b) { return a *= b; }
  friend bool operator==(const ExtFieldElement& a, const ExtFieldElement& b) { return a.rep_ == b.rep_; }

 private:
  std::shared_ptr<const ExtField> field_;
  Polynomial rep_;
};

/// An element of multiplicative order exactly ell inside GF(p^m), m = ord_ell(p).
/// ell must be an odd prime different from p.
ExtFieldElement primitive_root_of_unity(std::uint32_t ell, const PrimeField& field);

}  // namespace sdcodes
