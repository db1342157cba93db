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
#include <utility>
#include <vector>

#include "sdcodes/code.hpp"
#include "sdcodes/extfield.hpp"

namespace sdcodes {

/// n x n matrix whose row i is first_row shifted right by i.
Matrix circulant(const Vector& first_row);

/// Columns in reverse order. A column-reversed circulant is symmetric.
Matrix column_reversed(const Matrix& m);

struct CirculantSpec {
  Vector first_row;
  /// (alpha, beta) for the bordered form; the circulant then has order
  /// len(first_row) and the code has k = len(first_row) + 1.
  std::optional<std::pair<FieldElement, FieldElement>> bordered;
};

/// Right-hand block of the double circulant generator: the circulant, or
/// [[alpha, beta ... beta], [beta ... beta ^T, circulant]].
Matrix double_circulant_block(const CirculantSpec& spec);

/// (I | block). Self-duality is not implied.
LinearCode double_circulant_code(const CirculantSpec& spec);

/// The symmetric block obtained by reversing the circulant's columns
/// (keeping the border in place). (I | result) is monomially equivalent to
/// double_circulant_code(spec).
Matrix symmetrized_block(const CirculantSpec& spec);

struct QRSpec {
  std::uint32_t ell;
  PrimeField field;
  std::vector<std::uint32_t> residues;  // nonzero squares mod ell, ascending

  /// Throws PreconditionError unless ell is an odd prime other than p, and
  /// NotAResidue unless p is a nonzero square mod ell.
  static QRSpec make(std::uint32_t ell, const PrimeField& field);
};

/// g(x) = prod over residues r of (x - zeta^r), zeta from
/// primitive_root_of_unity. Throws CoefficientNotInBaseField if a
/// coefficient is not fixed by Frobenius.
Polynomial qr_generator_polynomial(const QRSpec& spec);

/// Cyclic [ell, (ell+1)/2] code generated by the shifts of g(x).
LinearCode qr_cyclic(const QRSpec& spec);

enum class QRKind { self_dual, iso_dual_candidate };

std::string to_string(QRKind k);

struct QRExtension {
  LinearCode code;
  QRKind kind;
  FieldElement border;  // s: row r is extended by s * sum(r)
};

/// Appends s * (row sum) to every generator row of qr_cyclic. s is the
/// larger root of ell s^2 = -1 when that makes the code self-dual, else
/// the smallest scalar that does. Without one the code is flagged
/// iso_dual_candidate, bordered by the root if it exists and by -1 if not.
QRExtension qr_extended(const QRSpec& spec);

}  // namespace sdcodes
