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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "sdcodes/errors.hpp"
#include "sdcodes/linalg.hpp"

using namespace sdcodes;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Residue>(rng() % f.p());
  return m;
}

// Oracle: determinant by cofactor expansion along the first row.
std::int64_t det_minor(const std::vector<std::vector<std::int64_t>>& a, std::int64_t p) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0] % p;
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      sub.push_back(row);
    }
    const std::int64_t term = a[0][j] * det_minor(sub, p) % p;
    acc = (acc + ((j % 2) ? p - term : term)) % p;
  }
  return acc;
}

// Oracle: rank = largest r with a nonzero r x r minor.
std::size_t rank_by_minors(const Matrix& m) {
  const std::int64_t p = m.field().p();
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(r), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(r), true);
      do {
        std::vector<std::vector<std::int64_t>> sub;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rsel[i]) continue;
          std::vector<std::int64_t> row;
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (csel[j]) row.push_back(m(i, j));
          sub.push_back(row);
        }
        if (det_minor(sub, p) != 0) return r;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

const PrimeField F5(5);

// 8 x 8 symmetric matrix over GF(5) with A^2 = -I (the [16,8,6] base code).
Matrix a16() {
  return Matrix(F5, {{1, 4, 3, 3, 2, 4, 0, 2},
                     {4, 2, 0, 2, 4, 3, 2, 1},
                     {3, 0, 1, 1, 3, 3, 3, 4},
                     {3, 2, 1, 0, 2, 0, 0, 1},
                     {2, 4, 3, 2, 4, 1, 3, 0},
                     {4, 3, 3, 0, 1, 1, 2, 2},
                     {0, 2, 3, 0, 3, 2, 3, 2},
                     {2, 1, 4, 1, 0, 2, 2, 3}});
}

}  // namespace

TEST_CASE("matrix construction and access") {
  const Matrix m(F5, {{1, 2, 3}, {4, 5, -1}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 1) == 0);
  CHECK(m(1, 2) == 4);
  CHECK_THROWS_AS(Matrix(F5, {{1, 2}, {3}}), DimensionMismatch);
  CHECK_THROWS_AS(Matrix(F5, 2, 2, {1, 2, 3}), DimensionMismatch);
  CHECK(m.row(0) == Vector(F5, {1, 2, 3}));
  CHECK(m.col(2) == Vector(F5, {3, 4}));
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("mat_mul") {
  std::mt19937_64 rng(11);
  const PrimeField f(13);
  const Matrix m = random_matrix(f, 3, 5, rng);
  CHECK(Matrix::identity(f, 3) * m == m);
  CHECK(Matrix(F5, {{2}}) * Matrix(F5, {{3}}) == Matrix(F5, {{1}}));
  CHECK_THROWS_AS(m * m, DimensionMismatch);
  CHECK_THROWS_AS(Matrix::identity(F5, 3) * m, FieldMismatch);

  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_matrix(f, 4, 6, rng), b = random_matrix(f, 6, 3, rng);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
  }
  // Large modulus exercises the periodic reduction inside the accumulator.
  const PrimeField big(2147483647);
  const Matrix x = random_matrix(big, 5, 40, rng), y = random_matrix(big, 40, 4, rng);
  const Matrix xy = x * y;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Residue acc = 0;
      for (std::size_t k = 0; k < 40; ++k) acc = big.add(acc, big.mul(x(i, k), y(k, j)));
      CHECK(xy(i, j) == acc);
    }
}

TEST_CASE("symmetric fixture squares to -I") {
  const Matrix a = a16();
  CHECK(a.is_symmetric());
  CHECK(a * a.transpose() == Matrix::scalar(F5(-1), 8));
}

TEST_CASE("rref") {
  const PrimeField f(13);
  const Matrix z(f, 3, 4);
  const auto rz = rref(z);
  CHECK(rz.rank == 0);
  CHECK(rz.reduced == z);

  const Matrix std_form = hconcat(Matrix::identity(F5, 8), a16());
  const auto rs = rref(std_form);
  CHECK(rs.rank == 8);
  CHECK(rs.reduced == std_form);

  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(f, 4, 6, rng);
    if (t % 3 == 0) {
      // force a dependent row
      for (std::size_t c = 0; c < 6; ++c) m(3, c) = f.add(m(0, c), f.mul(2, m(1, c)));
    }
    if (t % 5 == 0)
      for (std::size_t c = 0; c < 6; ++c) m(2, c) = 0;
    const auto r = rref(m);
    CHECK(r.rank == rank_by_minors(m));
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(kernel(m).size() + r.rank == m.cols());
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(Matrix::identity(F5, 5)).empty());

  std::mt19937_64 rng(5);
  const PrimeField f(17);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(f, 3, 7, rng);
    const auto basis = kernel(m);
    for (int s = 0; s < 100; ++s) {
      Vector v(f, m.cols());
      for (const auto& b : basis) v += f(static_cast<std::int64_t>(rng() % f.p())) * b;
      CHECK(mat_vec(m, v).is_zero());
    }
  }
}

TEST_CASE("eigenspace of the GF(5) fixture") {
  const Matrix a = a16();
  const auto e2 = eigenspace(a, F5(2));
  REQUIRE(e2.size() == 4);
  for (const auto& v : e2) CHECK(mat_vec(a, v) == F5(2) * v);

  const Matrix printed(F5, {{1, 0, 0, 0, 0, 3, 0, 2},
                            {0, 1, 0, 0, 3, 4, 2, 2},
                            {0, 0, 1, 0, 4, 3, 2, 1},
                            {0, 0, 0, 1, 1, 0, 2, 0}});
  const Matrix ours = Matrix::from_rows(F5, e2, 8);
  // Same row space: each stacked pair has rank 4.
  CHECK(rank(printed) == 4);
  CHECK(rank(Matrix::from_rows(F5, {e2[0], e2[1], e2[2], e2[3], printed.row(0), printed.row(1),
                                    printed.row(2), printed.row(3)},
                               8)) == 4);
  CHECK(rref(ours).reduced == printed);

  CHECK(eigenspace(Matrix::scalar(F5(2), 6), F5(2)).size() == 6);
  CHECK(eigenspace(a, F5(3)).size() + e2.size() == 8);
}

TEST_CASE("eigenspaces of random symmetric square roots of -I") {
  // (I | A) with A symmetric, A^2 = -I, built as a block sum of 1x1 and
  // conjugated by a random signed permutation.
  const PrimeField f(13);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 8;
    Matrix d(f, n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = (rng() & 1) ? 5 : 8;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix q(f, n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, perm[i]) = (rng() & 1) ? 1 : 12;
    const Matrix a = q * d * q.transpose();
    REQUIRE(a.is_symmetric());
    REQUIRE(a * a == Matrix::scalar(f(-1), n));
    CHECK(eigenspace(a, f(5)).size() + eigenspace(a, f(8)).size() == n);
  }
}

TEST_CASE("inverse") {
  const Matrix a = a16();
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(*inv == F5(-1) * a);
  CHECK_FALSE(inverse(Matrix(F5, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("block2x2, outer, dot") {
  const Matrix a = a16();
  const Vector x(F5, {4, 3, 4, 1, 1, 1, 1, 3});
  CHECK(dot(x, x) == F5(4));
  const Matrix e = F5(2) * outer(x);
  const Matrix ap = block2x2(F5(0), x, a + e);
  CHECK(ap.rows() == 9);
  CHECK(ap.is_symmetric());
  CHECK(ap.row(0) == Vector(F5, {0, 4, 3, 4, 1, 1, 1, 1, 3}));
  CHECK(ap.row(1) == Vector(F5, {4, 3, 3, 0, 1, 0, 2, 3, 1}));

  const Matrix trivial = block2x2(F5(2), Vector(F5, 8), a);
  CHECK(trivial == block_diag(Matrix(F5, {{2}}), a));
  CHECK_THROWS_AS(block2x2(F5(0), Vector(F5, 3), a), DimensionMismatch);
}
