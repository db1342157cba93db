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

#include "sdcodes/linalg.hpp"

#include <algorithm>
#include <string>

#include "sdcodes/errors.hpp"

namespace sdcodes {

namespace {

void require_same_field(const PrimeField& a, const PrimeField& b, const char* what) {
  if (!(a == b))
    throw FieldMismatch(std::string(what) + ": GF(" + std::to_string(a.p()) + ") vs GF(" +
                        std::to_string(b.p()) + ")");
}

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(const PrimeField& field, std::vector<Residue> entries) : field_(field), v_(std::move(entries)) {
  for (auto& x : v_) x = field_.reduce(x);
}

Vector::Vector(const PrimeField& field, std::initializer_list<std::int64_t> entries) : field_(field) {
  v_.reserve(entries.size());
  for (auto x : entries) v_.push_back(field_.reduce(x));
}

bool Vector::is_zero() const noexcept {
  return std::all_of(v_.begin(), v_.end(), [](Residue x) { return x == 0; });
}

std::size_t Vector::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(v_.begin(), v_.end(), [](Residue x) { return x != 0; }));
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_field(field_, o.field_, "vector sum");
  if (o.size() != size()) throw DimensionMismatch("vector sum of lengths " + std::to_string(size()) + " and " +
                                                  std::to_string(o.size()));
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = field_.add(v_[i], o.v_[i]);
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_field(field_, o.field_, "vector difference");
  if (o.size() != size()) throw DimensionMismatch("vector difference");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = field_.sub(v_[i], o.v_[i]);
  return *this;
}

Vector operator*(const FieldElement& s, const Vector& v) {
  require_same_field(s.field(), v.field_, "scalar multiple");
  Vector r = v;
  for (auto& x : r.v_) x = v.field_.mul(x, s.value());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols)
    throw DimensionMismatch(std::to_string(e_.size()) + " entries for a " + dims(rows, cols) + " matrix");
  for (auto& x : e_) x = field_.reduce(x);
}

Matrix::Matrix(const PrimeField& field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (auto x : r) e_.push_back(field_.reduce(x));
  }
}

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::scalar(const FieldElement& s, std::size_t n) {
  Matrix m(s.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s.value();
  return m;
}

Matrix Matrix::from_rows(const PrimeField& field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_field(field, rows[r].field(), "from_rows");
    if (rows[r].size() != cols) throw DimensionMismatch("row " + std::to_string(r) + " has wrong length");
    std::copy(rows[r].entries().begin(), rows[r].entries().end(), m.row_span(r).begin());
  }
  return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("index out of range");
  return FieldElement((*this)(r, c), field_);
}

Vector Matrix::row(std::size_t r) const {
  auto s = row_span(r);
  return Vector(field_, std::vector<Residue>(s.begin(), s.end()));
}

Vector Matrix::col(std::size_t c) const {
  std::vector<Residue> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return Vector(field_, std::move(v));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Residue x) { return x == 0; });
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block outside " + dims(rows_, cols_));
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix b(field_, rows_, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= cols_) throw DimensionMismatch("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) b(r, j) = (*this)(r, columns[j]);
  }
  return b;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_field(field_, o.field_, "matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch(dims(rows_, cols_) + " + " + dims(o.rows_, o.cols_));
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = field_.add(e_[i], o.e_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_field(field_, o.field_, "matrix difference");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch(dims(rows_, cols_) + " - " + dims(o.rows_, o.cols_));
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = field_.sub(e_[i], o.e_[i]);
  return *this;
}

Matrix operator*(const FieldElement& s, const Matrix& m) {
  require_same_field(s.field(), m.field_, "scalar multiple");
  Matrix r = m;
  for (auto& x : r.e_) x = m.field_.mul(x, s.value());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

// ---------------------------------------------------------------- algebra

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "mat_mul");
  if (a.cols() != b.rows()) throw DimensionMismatch(dims(a.rows(), a.cols()) + " * " + dims(b.rows(), b.cols()));
  const PrimeField& f = a.field();
  const std::uint64_t p = f.p();
  Matrix c(f, a.rows(), b.cols());
  // Accumulate in 64 bits and reduce once every `chunk` terms.
  const std::size_t chunk = std::max<std::uint64_t>(1, (~std::uint64_t{0} / ((p - 1) * (p - 1))) - 1);
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik != 0) {
        auto brow = b.row_span(k);
        for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += aik * brow[j];
      }
      if ((k + 1) % chunk == 0)
        for (auto& v : acc) v %= p;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Residue>(acc[j] % p);
  }
  return c;
}

Vector mat_vec(const Matrix& m, const Vector& x) {
  require_same_field(m.field(), x.field(), "mat_vec");
  if (m.cols() != x.size()) throw DimensionMismatch("mat_vec: " + dims(m.rows(), m.cols()) + " * " +
                                                    std::to_string(x.size()));
  const PrimeField& f = m.field();
  std::vector<Residue> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), x[c]));
    out[r] = acc;
  }
  return Vector(f, std::move(out));
}

Vector vec_mat(const Vector& x, const Matrix& m) {
  require_same_field(m.field(), x.field(), "vec_mat");
  if (m.rows() != x.size()) throw DimensionMismatch("vec_mat: " + std::to_string(x.size()) + " * " +
                                                    dims(m.rows(), m.cols()));
  const PrimeField& f = m.field();
  std::vector<Residue> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    auto row = m.row_span(r);
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(x[r], row[c]));
  }
  return Vector(f, std::move(out));
}

FieldElement dot(const Vector& x, const Vector& y) {
  require_same_field(x.field(), y.field(), "dot");
  if (x.size() != y.size()) throw DimensionMismatch("dot of lengths " + std::to_string(x.size()) + " and " +
                                                    std::to_string(y.size()));
  const PrimeField& f = x.field();
  Residue acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return FieldElement(acc, f);
}

Matrix outer(const Vector& x) {
  const PrimeField& f = x.field();
  Matrix m(f, x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = f.mul(x[i], x[j]);
  return m;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "hconcat");
  if (a.rows() != b.rows()) throw DimensionMismatch("hconcat of " + dims(a.rows(), a.cols()) + " and " +
                                                    dims(b.rows(), b.cols()));
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row_span(r).begin(), a.row_span(r).end(), m.row_span(r).begin());
    std::copy(b.row_span(r).begin(), b.row_span(r).end(), m.row_span(r).begin() + a.cols());
  }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "block_diag");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      std::swap_ranges(r.row_span(sel).begin(), r.row_span(sel).end(), r.row_span(row).begin());
    const Residue inv = f.inv(r(row, col));
    for (auto& x : r.row_span(row)) x = f.mul(x, inv);
    for (std::size_t other = 0; other < r.rows(); ++other) {
      if (other == row) continue;
      const Residue factor = r(other, col);
      if (factor == 0) continue;
      auto dst = r.row_span(other);
      auto src = r.row_span(row);
      for (std::size_t c = col; c < r.cols(); ++c) dst[c] = f.sub(dst[c], f.mul(factor, src[c]));
    }
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rk = pivots.size();
  return {std::move(r), std::move(pivots), rk};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel(const Matrix& m) {
  const auto [red, pivots, rk] = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(red(i, free));
    basis.emplace_back(f, std::move(v));
  }
  return basis;
}

std::vector<Vector> eigenspace(const Matrix& a, const FieldElement& lambda) {
  if (!a.is_square()) throw DimensionMismatch("eigenspace of a " + dims(a.rows(), a.cols()) + " matrix");
  return kernel(a - Matrix::scalar(lambda, a.rows()));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto res = rref(hconcat(m, Matrix::identity(m.field(), n)));
  if (res.rank < n || (n > 0 && res.pivots[n - 1] != n - 1)) return std::nullopt;
  return res.reduced.block(0, n, n, n);
}

Matrix block2x2(const FieldElement& a, const Vector& x, const Matrix& b) {
  require_same_field(a.field(), b.field(), "block2x2");
  require_same_field(x.field(), b.field(), "block2x2");
  if (!b.is_square() || b.rows() != x.size())
    throw DimensionMismatch("block2x2 with x of length " + std::to_string(x.size()) + " and B " +
                            dims(b.rows(), b.cols()));
  const std::size_t n = x.size();
  Matrix m(b.field(), n + 1, n + 1);
  m(0, 0) = a.value();
  for (std::size_t i = 0; i < n; ++i) {
    m(0, i + 1) = x[i];
    m(i + 1, 0) = x[i];
    for (std::size_t j = 0; j < n; ++j) m(i + 1, j + 1) = b(i, j);
  }
  return m;
}

}  // namespace sdcodes
