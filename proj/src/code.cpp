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

#include "sdcodes/code.hpp"

#include <string>

#include "sdcodes/errors.hpp"

namespace sdcodes {

LinearCode::LinearCode(Matrix generator) : g_(std::move(generator)) {
  if (g_.cols() == 0) throw InvalidCode("length 0");
  if (g_.rows() == 0) throw InvalidCode("dimension 0");
  if (g_.rows() > g_.cols()) throw InvalidCode("more rows than columns");
  if (rank(g_) != g_.rows()) throw InvalidCode("generator rows are linearly dependent");
}

bool LinearCode::contains(const Vector& word) const {
  if (word.size() != n()) throw DimensionMismatch("word length " + std::to_string(word.size()));
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < k(); ++r) rows.push_back(g_.row(r));
  rows.push_back(word);
  return rank(Matrix::from_rows(field(), rows, n())) == k();
}

bool is_self_dual(const LinearCode& c) {
  if (c.n() != 2 * c.k()) return false;
  return (c.generator() * c.generator().transpose()).is_zero();
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
  return rref(a.generator()).reduced == rref(b.generator()).reduced;
}

// ---------------------------------------------------------------- SymmetricSD

SymmetricSD::SymmetricSD(Matrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw NotSymmetricSD("A is " + std::to_string(a_.rows()) + "x" + std::to_string(a_.cols()));
  if (!is_symmetric(a_)) throw NotSymmetricSD("A is not symmetric");
  if (!squares_to_minus_identity(a_)) throw NotSymmetricSD("A^2 != -I");
  if (!generates_self_orthogonal(a_)) throw NotSymmetricSD("(I | A) is not self-orthogonal");
}

SymmetricSD SymmetricSD::empty(const PrimeField& field) { return SymmetricSD(Matrix(field, 0, 0), Unchecked{}); }

SymmetricSD SymmetricSD::unit(const FieldElement& alpha) {
  return SymmetricSD(Matrix::scalar(alpha, 1));
}

bool SymmetricSD::squares_to_minus_identity(const Matrix& a) {
  return a.is_square() && a * a == Matrix::scalar(a.field()(-1), a.rows());
}

bool SymmetricSD::generates_self_orthogonal(const Matrix& a) {
  if (!a.is_square()) return false;
  const Matrix g = hconcat(Matrix::identity(a.field(), a.rows()), a);
  return (g * g.transpose()).is_zero();
}

Matrix SymmetricSD::generator() const {
  if (half_n() == 0) throw InvalidCode("the empty code has no generator");
  return hconcat(Matrix::identity(field(), half_n()), a_);
}

std::optional<SymmetricSD> to_symmetric(const LinearCode& c) {
  if (!is_self_dual(c)) throw NotSelfDual("code is not self-dual");
  const std::size_t k = c.k();
  const auto r = rref(c.generator());
  for (std::size_t i = 0; i < k; ++i)
    if (r.pivots[i] != i) return std::nullopt;
  Matrix a = r.reduced.block(0, k, k, k);
  if (!a.is_symmetric()) return std::nullopt;
  return SymmetricSD(std::move(a));
}

SymmetricSD direct_sum(const SymmetricSD& c1, const SymmetricSD& c2) {
  if (!(c1.field() == c2.field()))
    throw FieldMismatch("direct sum over GF(" + std::to_string(c1.field().p()) + ") and GF(" +
                        std::to_string(c2.field().p()) + ")");
  if (c1.half_n() == 0) return c2;
  if (c2.half_n() == 0) return c1;
  return SymmetricSD(block_diag(c1.a(), c2.a()));
}

std::string to_string(WeightStatus s) { return s == WeightStatus::exact ? "exact" : "lower_bound"; }

bool is_mds(const LinearCode& c, const WeightReport& report) {
  if (!report.is_exact()) throw InexactWeight("MDS test needs an exact minimum weight");
  return report.min_weight == c.n() - c.k() + 1;
}

}  // namespace sdcodes
