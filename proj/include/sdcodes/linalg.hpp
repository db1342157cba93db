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
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "sdcodes/gf.hpp"

namespace sdcodes {

/// Vector over GF(p). Orientation is not part of the type: functions say
/// whether they treat it as a row (x) or a column (x^T).
class Vector {
 public:
  Vector(const PrimeField& field, std::size_t length) : field_(field), v_(length, 0) {}
  Vector(const PrimeField& field, std::vector<Residue> entries);
  Vector(const PrimeField& field, std::initializer_list<std::int64_t> entries);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return v_.size(); }
  Residue operator[](std::size_t i) const noexcept { return v_[i]; }
  FieldElement at(std::size_t i) const { return FieldElement(v_.at(i), field_); }
  void set(std::size_t i, Residue value) { v_.at(i) = field_.reduce(value); }
  std::span<const Residue> entries() const noexcept { return v_; }
  bool is_zero() const noexcept;
  std::size_t weight() const noexcept;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const FieldElement& s, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b) { return a.field_ == b.field_ && a.v_ == b.v_; }
  friend bool operator<(const Vector& a, const Vector& b) { return a.v_ < b.v_; }

 private:
  PrimeField field_;
  std::vector<Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::vector<Residue> entries);
  /// Literal rows; values are reduced mod p. All rows must have equal length.
  Matrix(const PrimeField& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(const PrimeField& field, std::size_t n);
  static Matrix scalar(const FieldElement& s, std::size_t n);
  static Matrix from_rows(const PrimeField& field, const std::vector<Vector>& rows, std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return e_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) noexcept { return e_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const;
  std::span<const Residue> row_span(std::size_t r) const noexcept { return {e_.data() + r * cols_, cols_}; }
  std::span<Residue> row_span(std::size_t r) noexcept { return {e_.data() + r * cols_, cols_}; }
  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  const std::vector<Residue>& entries() const noexcept { return e_; }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_columns(std::span<const std::size_t> columns) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const FieldElement& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> e_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Standard product; throws DimensionMismatch or FieldMismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// M x^T for a column vector x^T.
Vector mat_vec(const Matrix& m, const Vector& x);
/// x M for a row vector x.
Vector vec_mat(const Vector& x, const Matrix& m);

/// x x^T, a scalar.
FieldElement dot(const Vector& x, const Vector& y);
/// x^T x, the n x n rank-one matrix.
Matrix outer(const Vector& x);

/// [A | B]
Matrix hconcat(const Matrix& a, const Matrix& b);
/// Block-diagonal A (+) B.
Matrix block_diag(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space {v : M v^T = 0}, one vector per free
/// column of rref(M), in ascending column order.
std::vector<Vector> kernel(const Matrix& m);

/// Basis of {v : A v^T = lambda v^T}.
std::vector<Vector> eigenspace(const Matrix& a, const FieldElement& lambda);

std::optional<Matrix> inverse(const Matrix& m);

/// [[a, x], [x^T, B]] -- (n+1) x (n+1).
Matrix block2x2(const FieldElement& a, const Vector& x, const Matrix& b);

}  // namespace sdcodes
