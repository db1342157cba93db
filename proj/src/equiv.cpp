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

#include "sdcodes/equiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sdcodes/errors.hpp"

namespace sdcodes {

MonomialTransform::MonomialTransform(std::vector<std::size_t> perm, std::vector<FieldElement> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw PreconditionError("perm and signs differ in length");
  std::vector<bool> hit(perm_.size(), false);
  for (std::size_t j : perm_) {
    if (j >= perm_.size() || hit[j]) throw PreconditionError("perm is not a bijection");
    hit[j] = true;
  }
  for (const FieldElement& s : signs_)
    if (s * s != FieldElement(1, s.field())) throw PreconditionError("sign is not +-1");
}

MonomialTransform MonomialTransform::identity(const PrimeField& field, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return MonomialTransform(std::move(perm), std::vector<FieldElement>(n, field(1)));
}

MonomialTransform MonomialTransform::random(const PrimeField& field, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<FieldElement> signs;
  signs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) signs.push_back(field(rng() & 1 ? -1 : 1));
  return MonomialTransform(std::move(perm), std::move(signs));
}

Vector MonomialTransform::apply(const Vector& x) const {
  if (x.size() != size()) throw DimensionMismatch("vector of length " + std::to_string(x.size()));
  Vector y(x.field(), size());
  for (std::size_t j = 0; j < size(); ++j) y.set(j, (signs_[j] * x.at(perm_[j])).value());
  return y;
}

Matrix MonomialTransform::apply(const Matrix& g) const {
  if (g.cols() != size()) throw DimensionMismatch("matrix with " + std::to_string(g.cols()) + " columns");
  Matrix out(g.field(), g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t j = 0; j < size(); ++j) out(r, j) = (signs_[j] * g.at(r, perm_[j])).value();
  return out;
}

MonomialTransform MonomialTransform::inverse() const {
  std::vector<std::size_t> perm(size());
  std::vector<FieldElement> signs(signs_);
  for (std::size_t j = 0; j < size(); ++j) {
    perm[perm_[j]] = j;
    signs[perm_[j]] = signs_[j];
  }
  return MonomialTransform(std::move(perm), std::move(signs));
}

MonomialTransform MonomialTransform::compose(const MonomialTransform& then) const {
  if (then.size() != size()) throw DimensionMismatch("transforms of different lengths");
  std::vector<std::size_t> perm(size());
  std::vector<FieldElement> signs(signs_);
  for (std::size_t j = 0; j < size(); ++j) {
    perm[j] = perm_[then.perm_[j]];
    signs[j] = then.signs_[j] * signs_[then.perm_[j]];
  }
  return MonomialTransform(std::move(perm), std::move(signs));
}

LinearCode apply(const LinearCode& c, const MonomialTransform& tau) {
  if (tau.size() != c.n())
    throw DimensionMismatch("transform of length " + std::to_string(tau.size()) + " on a code of length " +
                            std::to_string(c.n()));
  LinearCode out(tau.apply(c.generator()));
  if (is_self_dual(c) && !is_self_dual(out)) throw std::logic_error("monomial map broke self-duality");
  return out;
}

// ------------------------------------------------------------ transpose map

std::pair<LinearCode, MonomialTransform> transpose_equivalent(const LinearCode& c) {
  const std::size_t h = c.k();
  if (c.n() != 2 * h) throw NotStandardForm("length is not twice the dimension");
  const auto r = rref(c.generator());
  for (std::size_t i = 0; i < h; ++i)
    if (r.pivots[i] != i) throw NotStandardForm("first half is not an information set");
  if (!is_self_dual(c)) throw NotSelfDual("transpose equivalence needs a self-dual code");
  const Matrix a = r.reduced.block(0, h, h, h);
  LinearCode out(hconcat(Matrix::identity(c.field(), h), a.transpose()));

  std::vector<std::size_t> perm(2 * h);
  std::vector<FieldElement> signs(2 * h, c.field()(1));
  for (std::size_t j = 0; j < 2 * h; ++j) perm[j] = (j + h) % (2 * h);
  for (std::size_t j = 0; j < h; ++j) signs[j] = c.field()(-1);
  MonomialTransform tau(std::move(perm), std::move(signs));
  if (!same_code(apply(c, tau), out)) throw std::logic_error("transpose map does not reach (I | A^T)");
  return {std::move(out), std::move(tau)};
}

std::pair<LinearCode, MonomialTransform> transpose_equivalent(const SymmetricSD& c) {
  return transpose_equivalent(c.code());
}

// -------------------------------------------------------------- fingerprints

std::optional<std::size_t> Fingerprint::min_weight() const {
  for (std::size_t w = 1; w < std::min(exact_below, counts.size()); ++w)
    if (counts[w] != 0) return w;
  return std::nullopt;
}

std::optional<std::uint64_t> Fingerprint::min_weight_count() const {
  if (auto w = min_weight()) return counts[*w];
  return std::nullopt;
}

Fingerprint fingerprint(const LinearCode& c, std::uint64_t work_units, std::optional<std::size_t> cutoff) {
  WeightBudget budget;
  budget.work_units = work_units;
  budget.witness_trials = 0;
  if (!cutoff) {
    const WeightReport r = min_weight(c, budget);
    cutoff = r.is_exact() ? r.min_weight : r.bound_value;
  }
  const WeightCounts wc = weight_counts(c, *cutoff, budget);
  Fingerprint f;
  f.n = c.n();
  f.k = c.k();
  f.p = c.field().p();
  f.counts = wc.counts;
  f.exact_below = wc.exact_below;
  return f;
}

bool distinguishes(const Fingerprint& a, const Fingerprint& b) {
  if (a.n != b.n || a.k != b.k || a.p != b.p) return true;
  const std::size_t upto = std::min({a.exact_below, b.exact_below, a.counts.size(), b.counts.size()});
  for (std::size_t w = 0; w < upto; ++w)
    if (a.counts[w] != b.counts[w]) return true;
  return false;
}

// -------------------------------------------------------------- equivalence

namespace {

constexpr std::uint64_t kProfileBudget = 2'000'000;

using Profile = std::vector<std::uint64_t>;
using Column = std::vector<Residue>;

/// profile[j][w] = number of normalized codewords of weight w nonzero at j.
std::optional<std::vector<Profile>> coordinate_profiles(const LinearCode& c) {
  const PrimeField& f = c.field();
  const std::size_t n = c.n(), k = c.k();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= f.p();
    if (total > kProfileBudget) return std::nullopt;
  }
  std::vector<Profile> prof(n, Profile(n + 1, 0));
  const Matrix& g = c.generator();
  // Messages whose first nonzero entry is 1.
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<Residue> msg(k, 0);
    msg[lead] = 1;
    while (true) {
      std::vector<Residue> word(n, 0);
      for (std::size_t i = lead; i < k; ++i) {
        if (msg[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(msg[i], g(i, j)));
      }
      const auto wt = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Residue v) { return v != 0; }));
      for (std::size_t j = 0; j < n; ++j)
        if (word[j] != 0) ++prof[j][wt];
      bool carry = true;
      for (std::size_t i = k; carry && i > lead + 1;) {
        --i;
        if (++msg[i] < f.p()) carry = false;
        else msg[i] = 0;
      }
      if (carry) break;
    }
  }
  return prof;
}

Column column_of(const Matrix& m, std::size_t j) {
  Column out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, j);
  return out;
}

Column negated(const PrimeField& f, Column v) {
  for (Residue& x : v) x = f.neg(x);
  return v;
}

Column canonical(const PrimeField& f, const Column& v) { return std::min(v, negated(f, v)); }

class Search {
 public:
  Search(const LinearCode& c1, const LinearCode& c2, std::uint64_t limit)
      : f_(c1.field()), g1_(c1.generator()), n_(c1.n()), k_(c1.k()), limit_(limit) {
    const auto r2 = rref(c2.generator());
    r2_ = r2.reduced;
    pivots_ = r2.pivots;
    std::vector<bool> is_pivot(n_, false);
    for (std::size_t j : pivots_) is_pivot[j] = true;
    for (std::size_t j = 0; j < n_; ++j)
      if (!is_pivot[j]) rest_.push_back(j);
    p1_ = coordinate_profiles(c1);
    p2_ = coordinate_profiles(c2);
    if (!p1_ || !p2_) p1_.reset(), p2_.reset();
    chosen_.assign(k_, 0);
    signs_.assign(k_, f_(1));
    used_.assign(n_, false);
  }

  bool profiles_differ() const {
    if (!p1_) return false;
    auto a = *p1_, b = *p2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a != b;
  }

  std::optional<MonomialTransform> run() {
    std::optional<MonomialTransform> out;
    descend(0, out);
    return out;
  }

  bool exhausted() const { return nodes_ > limit_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool profile_ok(std::size_t from1, std::size_t to2) const { return !p1_ || (*p1_)[from1] == (*p2_)[to2]; }

  Matrix chosen_columns(std::size_t t) const {
    Matrix m(f_, k_, t);
    for (std::size_t c = 0; c < t; ++c)
      for (std::size_t r = 0; r < k_; ++r) m(r, c) = (signs_[c] * g1_.at(r, chosen_[c])).value();
    return m;
  }

  void descend(std::size_t t, std::optional<MonomialTransform>& out) {
    if (out || nodes_ > limit_) return;
    if (t == k_) {
      ++nodes_;
      out = finish();
      return;
    }
    for (std::size_t u = 0; u < n_ && !out && nodes_ <= limit_; ++u) {
      if (used_[u] || !profile_ok(u, pivots_[t])) continue;
      chosen_[t] = u;
      signs_[t] = f_(1);
      if (rank(chosen_columns(t + 1)) != t + 1) continue;
      used_[u] = true;
      // A global sign flip maps a witness to a witness, so fix the first sign.
      for (int s = 0; s < (t == 0 ? 1 : 2) && !out; ++s) {
        signs_[t] = f_(s == 0 ? 1 : -1);
        ++nodes_;
        descend(t + 1, out);
      }
      used_[u] = false;
    }
  }

  std::optional<MonomialTransform> finish() const {
    const auto minv = inverse(chosen_columns(k_));
    if (!minv) return std::nullopt;
    const Matrix h = *minv * g1_;
    // Unused columns of h and non-pivot columns of r2, keyed up to sign.
    std::map<std::pair<Column, Profile>, std::vector<std::size_t>> pool;
    for (std::size_t u = 0; u < n_; ++u) {
      if (used_[u]) continue;
      pool[{canonical(f_, column_of(h, u)), p1_ ? (*p1_)[u] : Profile{}}].push_back(u);
    }
    std::vector<std::size_t> perm(n_);
    std::vector<FieldElement> signs(n_, f_(1));
    for (std::size_t t = 0; t < k_; ++t) {
      perm[pivots_[t]] = chosen_[t];
      signs[pivots_[t]] = signs_[t];
    }
    for (std::size_t j : rest_) {
      const Column target = column_of(r2_, j);
      auto it = pool.find({canonical(f_, target), p2_ ? (*p2_)[j] : Profile{}});
      if (it == pool.end() || it->second.empty()) return std::nullopt;
      const std::size_t u = it->second.back();
      it->second.pop_back();
      perm[j] = u;
      signs[j] = f_(column_of(h, u) == target ? 1 : -1);
    }
    return MonomialTransform(std::move(perm), std::move(signs));
  }

  const PrimeField& f_;
  const Matrix& g1_;
  std::size_t n_, k_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  Matrix r2_{f_, 0, 0};
  std::vector<std::size_t> pivots_, rest_;
  std::optional<std::vector<Profile>> p1_, p2_;
  std::vector<std::size_t> chosen_;
  std::vector<FieldElement> signs_;
  std::vector<bool> used_;
};

}  // namespace

EquivalenceResult is_equivalent_small(const LinearCode& c1, const LinearCode& c2, std::uint64_t node_limit) {
  if (!(c1.field() == c2.field()) || c1.n() != c2.n() || c1.k() != c2.k())
    throw ParameterMismatch("codes differ in n, k or p");
  EquivalenceResult res;
  Search search(c1, c2, node_limit);
  if (search.profiles_differ()) {
    res.answer = Equivalence::no;
    return res;
  }
  auto witness = search.run();
  res.nodes = search.nodes();
  if (witness) {
    if (!same_code(apply(c1, *witness), c2)) throw std::logic_error("equivalence witness does not verify");
    res.answer = Equivalence::yes;
    res.witness = std::move(witness);
  } else {
    res.answer = search.exhausted() ? Equivalence::unknown : Equivalence::no;
  }
  return res;
}

}  // namespace sdcodes
