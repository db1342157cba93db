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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdcodes/code.hpp"
#include "sdcodes/errors.hpp"

using namespace sdcodes;

namespace {

Matrix random_full_rank(const PrimeField& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Residue>(rng() % f.p());
    if (rank(m) == k) return m;
  }
}

// Oracle: plain enumeration of every message, weights counted directly.
std::size_t brute_min_weight(const LinearCode& c) {
  const Residue p = c.field().p();
  std::vector<Residue> msg(c.k(), 0);
  std::size_t best = c.n() + 1;
  for (;;) {
    std::size_t i = 0;
    while (i < c.k() && ++msg[i] == p) msg[i++] = 0;
    if (i == c.k()) break;
    best = std::min(best, c.encode(Vector(c.field(), msg)).weight());
  }
  return best;
}

}  // namespace

TEST_CASE("LinearCode rejects degenerate generators") {
  const PrimeField f(13);
  CHECK_THROWS_AS(LinearCode(Matrix(f, 0, 0)), InvalidCode);
  CHECK_THROWS_AS(LinearCode(Matrix(f, 1, 0)), InvalidCode);
  CHECK_THROWS_AS(LinearCode(Matrix(f, {{1, 2}, {2, 4}})), InvalidCode);
  CHECK_NOTHROW(LinearCode(Matrix(f, {{1, 5}})));
}

TEST_CASE("self-duality") {
  const PrimeField f(13);
  for (std::size_t n : {1u, 3u, 7u}) {
    const LinearCode c(hconcat(Matrix::identity(f, n), Matrix::scalar(f(5), n)));
    CHECK(is_self_dual(c));
  }
  CHECK_FALSE(is_self_dual(LinearCode(hconcat(Matrix::identity(f, 2), Matrix::identity(f, 2)))));
  CHECK_FALSE(is_self_dual(LinearCode(Matrix::identity(f, 2))));
  CHECK_FALSE(is_self_dual(LinearCode(fixtures::standard_generator("QR_13_18"))));
  CHECK_FALSE(is_self_dual(LinearCode(fixtures::standard_generator("QR_17_14"))));
  for (const auto& e : fixtures::catalog()["entries"]) {
    if (!e["self_dual"].get<bool>()) continue;
    CAPTURE(e["id"].get<std::string>());
    CHECK(is_self_dual(LinearCode(fixtures::standard_generator(e["id"]))) != fixtures::misprinted(e["id"]));
  }
}

TEST_CASE("SymmetricSD assertions agree") {
  const PrimeField f(13);
  std::mt19937_64 rng(3);
  for (const auto& e : fixtures::catalog()["entries"]) {
    if (e["form"] != "standard") continue;
    const Matrix a = fixtures::matrix(e["id"]);
    const bool sym = SymmetricSD::is_symmetric(a);
    const bool sq = SymmetricSD::squares_to_minus_identity(a);
    const bool orth = SymmetricSD::generates_self_orthogonal(a);
    CAPTURE(e["id"].get<std::string>());
    const bool misprint = fixtures::misprinted(e["id"]);
    CHECK(sym == (e["symmetric"].get<bool>() && !misprint));
    // for symmetric A, A^2 = -I and (I | A) self-orthogonal coincide
    if (sym) CHECK(sq == orth);
    CHECK(orth == (e["self_dual"].get<bool>() && !misprint));
    if (sym && sq) CHECK_NOTHROW(SymmetricSD{a});
    else CHECK_THROWS_AS(SymmetricSD{a}, NotSymmetricSD);
  }
  CHECK_THROWS_AS(SymmetricSD(Matrix(f, {{1, 2}})), NotSymmetricSD);
  CHECK_THROWS_AS(SymmetricSD::empty(f).generator(), InvalidCode);
}

TEST_CASE("to_symmetric") {
  const PrimeField f(13);
  const auto s = to_symmetric(LinearCode(hconcat(Matrix::identity(f, 3), Matrix::scalar(f(8), 3))));
  REQUIRE(s.has_value());
  CHECK(s->a() == Matrix::scalar(f(8), 3));

  const Matrix a16 = fixtures::matrix("A_5^{16}");
  const LinearCode c16(fixtures::standard_generator("A_5^{16}"));
  CHECK(to_symmetric(c16)->a() == a16);

  // Row operations keep the code; rref recovers (I | A).
  std::mt19937_64 rng(17);
  Matrix scrambled = c16.generator();
  for (int t = 0; t < 30; ++t) {
    const std::size_t i = rng() % 8, j = rng() % 8;
    if (i == j) continue;
    for (std::size_t col = 0; col < 16; ++col)
      scrambled(i, col) = PrimeField(5).add(scrambled(i, col), PrimeField(5).mul(2, scrambled(j, col)));
  }
  CHECK(to_symmetric(LinearCode(scrambled))->a() == a16);

  // QR_23_20 is self-dual with a non-symmetric A.
  CHECK_FALSE(to_symmetric(LinearCode(fixtures::standard_generator("QR_23_20"))).has_value());
  // A column swap across the halves breaks the identity block.
  Matrix swapped = c16.generator();
  for (std::size_t r = 0; r < 8; ++r) std::swap(swapped(r, 0), swapped(r, 15));
  const LinearCode cs(swapped);
  REQUIRE(is_self_dual(cs));
  const auto t = to_symmetric(cs);
  if (t) CHECK(t->a().is_symmetric());

  CHECK_THROWS_AS(to_symmetric(LinearCode(fixtures::standard_generator("QR_13_18"))), NotSelfDual);
}

TEST_CASE("direct sum") {
  const PrimeField f(13);
  const auto u = SymmetricSD::unit(f(5));
  const SymmetricSD a(fixtures::matrix("A_13^{26,1}"));
  const auto s = direct_sum(u, a);
  CHECK(s.half_n() == 14);
  CHECK(s.a() == block_diag(Matrix(f, {{5}}), a.a()));
  CHECK(direct_sum(a, SymmetricSD::empty(f)) == a);
  CHECK(direct_sum(SymmetricSD::empty(f), a) == a);
  CHECK_THROWS_AS(direct_sum(u, SymmetricSD::unit(PrimeField(5)(2))), FieldMismatch);
  CHECK(min_weight(s.code()).min_weight == 2);

  // d(C1 + C2) = min(d(C1), d(C2)), both sides exhaustive.
  const SymmetricSD b(fixtures::matrix("A_5^{16}"));
  const auto t = direct_sum(SymmetricSD::unit(PrimeField(5)(3)), b);
  CHECK(min_weight_exhaustive(t.code()).min_weight ==
        std::min(min_weight_exhaustive(SymmetricSD::unit(PrimeField(5)(3)).code()).min_weight,
                 min_weight_exhaustive(b.code()).min_weight));
}

TEST_CASE("exhaustive minimum weight") {
  const LinearCode c16(fixtures::standard_generator("A_5^{16}"));
  const auto r = min_weight_exhaustive(c16);
  CHECK(r.min_weight == 6);
  CHECK(r.is_exact());
  REQUIRE(r.witness);
  CHECK(r.witness->weight() == 6);
  CHECK(c16.contains(*r.witness));

  const PrimeField f(13);
  CHECK(min_weight_exhaustive(LinearCode(Matrix(f, {{1, 5}}))).min_weight == 2);
  CHECK_THROWS_AS(min_weight_exhaustive(c16, 1000), BudgetExceeded);
}

TEST_CASE("engine agrees with exhaustive enumeration") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (std::uint32_t p : {5u, 13u, 17u}) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = 1 + rng() % 6;
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < k; ++i) size *= p;
      if (size > 1'000'000) continue;
      const std::size_t n = k + rng() % 10;
      const LinearCode c(random_full_rank(f, k, n, rng));
      const auto ex = min_weight_exhaustive(c);
      WeightBudget b;
      b.seed = rng();
      b.witness_trials = t % 2 ? 0 : 8;
      const auto is = min_weight(c, b);
      CAPTURE(p);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(is.is_exact());
      CHECK(is.min_weight == ex.min_weight);
      REQUIRE(is.witness);
      CHECK(is.witness->weight() == is.min_weight);
      CHECK(c.contains(*is.witness));
      CHECK(ex.min_weight <= n - k + 1);
      if (k <= 3 && p == 5) CHECK(ex.min_weight == brute_min_weight(c));
      ++checked;
    }
  }
  CHECK(checked > 60);
}

TEST_CASE("threads do not change the result") {
  const LinearCode c(fixtures::standard_generator("A_13^{26,1}"));
  WeightBudget one, four;
  four.threads = 4;
  const auto a = min_weight(c, one), b = min_weight(c, four);
  CHECK(a.min_weight == b.min_weight);
  CHECK(a.witness == b.witness);
  CHECK(a.work == b.work);
}

TEST_CASE("catalog minimum weights") {
  struct Case {
    const char* id;
    std::size_t d;
  };
  for (Case cs : {Case{"A_13^{26,1}", 10}, Case{"A_17^{24,1}", 9}, Case{"G_13^{18}", 8}, Case{"QR_23_20", 10}}) {
    const LinearCode c(fixtures::standard_generator(cs.id));
    const auto r = min_weight(c);
    CAPTURE(cs.id);
    CHECK(r.is_exact());
    CHECK(r.min_weight == cs.d);
    CHECK(r.witness->weight() == cs.d);
    CHECK(c.contains(*r.witness));
  }
}

TEST_CASE("small budget degrades to a lower bound") {
  const LinearCode c(fixtures::standard_generator("A_13^{40,1}"));
  WeightBudget b;
  b.work_units = 2'000'000;
  b.witness_trials = 2000;
  const auto r = min_weight(c, b);
  CHECK(r.status == WeightStatus::lower_bound);
  CHECK(r.bound_value <= 14);
  CHECK(r.bound_value >= 2);
  REQUIRE(r.witness);
  CHECK(r.witness->weight() == r.min_weight);
  CHECK(c.contains(*r.witness));
  MESSAGE("bound " << r.bound_value << ", witness " << r.min_weight);

  // Every sampled codeword respects the reported bound.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10000; ++i) {
    Vector msg(c.field(), c.k());
    for (std::size_t j = 0; j < c.k(); ++j) msg.set(j, static_cast<Residue>(rng() % 13));
    if (msg.is_zero()) continue;
    CHECK(c.encode(msg).weight() >= r.bound_value);
  }
  CHECK_THROWS_AS(is_mds(c, r), InexactWeight);
}

TEST_CASE("MDS predicate") {
  const PrimeField f(13);
  const LinearCode unit(Matrix(f, {{1, 5}}));
  CHECK(is_mds(unit, min_weight_exhaustive(unit)));
  const LinearCode c16(fixtures::standard_generator("A_5^{16}"));
  CHECK_FALSE(is_mds(c16, min_weight_exhaustive(c16)));
  const LinearCode qr(fixtures::standard_generator("QR_17_14"));
  const auto r = min_weight(qr);
  CHECK(r.min_weight == 8);
  CHECK(is_mds(qr, r));
}

TEST_CASE("weight counts") {
  const LinearCode c16(fixtures::standard_generator("A_5^{16}"));
  const auto ex = weight_counts_exhaustive(c16, 8);
  const auto is = weight_counts(c16, 8);
  CHECK(ex.complete);
  CHECK(is.complete);
  CHECK(ex.counts == is.counts);
  CHECK(ex.counts[0] == 1);
  for (std::size_t w = 1; w < 6; ++w) CHECK(ex.counts[w] == 0);
  CHECK(ex.counts[6] > 0);
}
