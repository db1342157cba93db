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
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

#include "sdcodes/code.hpp"
#include "sdcodes/errors.hpp"

namespace sdcodes {

namespace {

using u64 = std::uint64_t;
constexpr u64 kSaturated = std::numeric_limits<u64>::max();

u64 sat_mul(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

u64 sat_add(u64 a, u64 b) { return a > kSaturated - b ? kSaturated : a + b; }

u64 binomial(u64 n, u64 r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (u64 i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<u64>(acc);
}

/// p^k, saturated.
u64 field_power(u64 p, u64 k) {
  u64 r = 1;
  for (u64 i = 0; i < k; ++i) r = sat_mul(r, p);
  return r;
}

Vector normalized(Vector v) {
  const auto e = v.entries();
  const auto it = std::find_if(e.begin(), e.end(), [](Residue x) { return x != 0; });
  if (it == e.end() || *it == 1) return v;
  return v.field()(*it).inverse() * v;
}

std::string key_of(const Vector& v) {
  std::string s;
  s.reserve(v.size() * sizeof(Residue));
  for (Residue x : v.entries()) s.append(reinterpret_cast<const char*>(&x), sizeof x);
  return s;
}

// ---------------------------------------------------------------- exhaustive

/// Calls visit(word, weight) once for every codeword whose first nonzero
/// message coefficient is 1.
template <class Visit>
void for_each_normalized(const LinearCode& c, Visit&& visit) {
  const PrimeField& f = c.field();
  const std::size_t n = c.n(), k = c.k();
  const Residue p = f.p();
  const Matrix& g = c.generator();
  std::vector<Residue> word(n);
  std::vector<Residue> digit(k);
  auto add_row = [&](std::size_t r) {
    auto row = g.row_span(r);
    for (std::size_t i = 0; i < n; ++i) word[i] = f.add(word[i], row[i]);
  };
  auto weight = [&] {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Residue x) { return x != 0; }));
  };
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(word.begin(), word.end(), 0);
    std::fill(digit.begin(), digit.end(), 0);
    add_row(lead);
    visit(word, weight());
    // odometer over the digits after `lead`; stepping a digit adds its row
    // once, which also handles the wrap p-1 -> 0.
    for (;;) {
      std::size_t i = k;
      bool done = true;
      while (i-- > lead + 1) {
        add_row(i);
        if (++digit[i] < p) {
          done = false;
          break;
        }
        digit[i] = 0;
      }
      if (done) break;
      visit(word, weight());
    }
  }
}

void check_exhaustive_budget(const LinearCode& c, u64 budget) {
  const u64 total = field_power(c.field().p(), c.k());
  if (total > budget)
    throw BudgetExceeded(std::to_string(c.field().p()) + "^" + std::to_string(c.k()) +
                         " codewords exceed the enumeration budget of " + std::to_string(budget));
}

// ---------------------------------------------------------------- info sets

struct InfoSet {
  std::vector<std::size_t> pivots;      // original column carrying the identity for row t
  std::vector<std::size_t> redundancy;  // remaining original columns
  std::size_t block_rank = 0;           // pivots inside the block this set was drawn from
  std::vector<Residue> red;             // k x m entries of the systematic generator
};

/// Systematic form with pivots chosen greedily in `order`; the first
/// `prefix` columns of `order` form the block.
InfoSet make_info_set(const Matrix& g, const std::vector<std::size_t>& order, std::size_t prefix) {
  const auto r = rref(g.select_columns(order));
  InfoSet s;
  std::vector<bool> is_pivot(order.size(), false);
  for (std::size_t pos : r.pivots) {
    is_pivot[pos] = true;
    s.pivots.push_back(order[pos]);
    if (pos < prefix) ++s.block_rank;
  }
  std::vector<std::size_t> red_pos;
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    if (!is_pivot[pos]) {
      red_pos.push_back(pos);
      s.redundancy.push_back(order[pos]);
    }
  const std::size_t k = g.rows(), m = red_pos.size();
  s.red.resize(k * m);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t i = 0; i < m; ++i) s.red[t * m + i] = r.reduced(t, red_pos[i]);
  return s;
}

/// Disjoint blocks: each takes as many of the unused columns as possible.
std::vector<InfoSet> disjoint_info_sets(const Matrix& g) {
  const std::size_t n = g.cols();
  std::vector<bool> used(n, false);
  std::vector<InfoSet> sets;
  for (;;) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) order.push_back(c);
    const std::size_t prefix = order.size();
    if (prefix == 0) break;
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);
    InfoSet s = make_info_set(g, order, prefix);
    if (s.block_rank == 0) break;
    // pivots come in `order` position, so the block's pivots are listed first
    for (std::size_t t = 0; t < s.block_rank; ++t) used[s.pivots[t]] = true;
    sets.push_back(std::move(s));
  }
  return sets;
}

// ---------------------------------------------------------------- enumeration

/// A leaf fixes every message coefficient except the last one. weight(c)
/// gives the weight of the codeword whose last coefficient is c.
struct Leaf {
  std::size_t w = 0;
  std::size_t last = 0;
  const Residue* s = nullptr;  // redundancy part before adding c * row(last)
  const std::uint32_t* hist = nullptr;
  std::size_t base = 0;  // w + m - (positions where s and row(last) vanish)
  const std::size_t* positions = nullptr;
  const Residue* coeffs = nullptr;

  std::size_t weight(Residue c) const { return base - hist[c]; }
};

class Enumerator {
 public:
  Enumerator(const PrimeField& f, const InfoSet& set, std::size_t k)
      : f_(f), p_(f.p()), k_(k), m_(set.redundancy.size()), set_(set) {
    // key(s, g) = -s/g identifies the unique c with s + c g = 0. Rows with
    // g = 0 use the sentinel row p: key p when s = 0, key 0 otherwise.
    table_.resize(static_cast<std::size_t>(p_ + 1) * p_);
    for (Residue g = 1; g < p_; ++g)
      for (Residue s = 0; s < p_; ++s) table_[g * p_ + s] = f_.mul(f_.neg(s), g);
    for (Residue s = 0; s < p_; ++s) table_[p_ * p_ + s] = s == 0 ? p_ : 0;
    offset_.resize(k_ * m_);
    for (std::size_t t = 0; t < k_; ++t)
      for (std::size_t i = 0; i < m_; ++i) {
        const Residue g = set.red[t * m_ + i];
        offset_[t * m_ + i] = (g == 0 ? p_ : f_.inv(g)) * p_;
      }
    scaled_.resize(k_ * p_ * m_);
    for (std::size_t t = 0; t < k_; ++t)
      for (Residue c = 0; c < p_; ++c)
        for (std::size_t i = 0; i < m_; ++i) scaled_[(t * p_ + c) * m_ + i] = f_.mul(c, set.red[t * m_ + i]);
    hist_.resize(p_ + 1);
  }

  /// Visits every leaf of weight w whose first position lies in [lo, hi).
  /// Returns false if aborted.
  template <class Visit>
  bool run(std::size_t w, std::size_t lo, std::size_t hi, Visit& visit, const std::atomic<bool>* abort) {
    stack_.assign((w + 1) * m_, 0);
    positions_.assign(w, 0);
    coeffs_.assign(w, 0);
    abort_ = abort;
    aborted_ = false;
    leaves_ = 0;
    if (w == 1) {
      for (std::size_t last = lo; last < hi && last < k_; ++last) leaf(1, last, stack_.data(), visit);
      return !aborted_;
    }
    for (std::size_t pos = lo; pos < hi && pos + w <= k_; ++pos) {
      positions_[0] = pos;
      coeffs_[0] = 1;
      std::copy_n(&scaled_[(pos * p_ + 1) * m_], m_, stack_.begin() + static_cast<long>(m_));
      walk(1, pos + 1, w, visit);
      if (aborted_) return false;
    }
    return true;
  }

  u64 leaves() const noexcept { return leaves_; }

  /// Codeword in original coordinates for a leaf and last coefficient c.
  Vector materialize(const Leaf& leaf, Residue c, std::size_t n) const {
    std::vector<Residue> word(n, 0);
    for (std::size_t d = 0; d + 1 < leaf.w; ++d) word[set_.pivots[leaf.positions[d]]] = leaf.coeffs[d];
    word[set_.pivots[leaf.last]] = c;
    const Residue* g = &set_.red[leaf.last * m_];
    for (std::size_t i = 0; i < m_; ++i) word[set_.redundancy[i]] = f_.add(leaf.s[i], f_.mul(c, g[i]));
    return Vector(f_, std::move(word));
  }

  Residue p() const noexcept { return p_; }

 private:
  template <class Visit>
  void walk(std::size_t depth, std::size_t start, std::size_t w, Visit& visit) {
    const Residue* prev = &stack_[depth * m_];
    if (depth == w - 1) {
      for (std::size_t last = start; last < k_; ++last) leaf(w, last, prev, visit);
      return;
    }
    Residue* cur = &stack_[(depth + 1) * m_];
    for (std::size_t pos = start; pos + (w - depth) <= k_; ++pos) {
      positions_[depth] = pos;
      for (Residue c = 1; c < p_; ++c) {
        coeffs_[depth] = c;
        const Residue* add = &scaled_[(pos * p_ + c) * m_];
        for (std::size_t i = 0; i < m_; ++i) {
          const Residue v = prev[i] + add[i];
          cur[i] = v >= p_ ? v - p_ : v;
        }
        walk(depth + 1, pos + 1, w, visit);
        if (aborted_) return;
      }
    }
  }

  template <class Visit>
  void leaf(std::size_t w, std::size_t last, const Residue* s, Visit& visit) {
    std::fill(hist_.begin(), hist_.end(), 0);
    const std::uint32_t* off = &offset_[last * m_];
    for (std::size_t i = 0; i < m_; ++i) ++hist_[table_[off[i] + s[i]]];
    Leaf lf;
    lf.w = w;
    lf.last = last;
    lf.s = s;
    lf.hist = hist_.data();
    lf.base = w + m_ - hist_[p_];
    lf.positions = positions_.data();
    lf.coeffs = coeffs_.data();
    visit(lf);
    if ((++leaves_ & 0xffff) == 0 && abort_ && abort_->load(std::memory_order_relaxed)) aborted_ = true;
  }

  PrimeField f_;
  Residue p_;
  std::size_t k_, m_;
  const InfoSet& set_;
  std::vector<Residue> table_;
  std::vector<std::uint32_t> offset_;
  std::vector<Residue> scaled_;
  std::vector<std::uint32_t> hist_;
  std::vector<Residue> stack_;
  std::vector<std::size_t> positions_;
  std::vector<Residue> coeffs_;
  const std::atomic<bool>* abort_ = nullptr;
  bool aborted_ = false;
  u64 leaves_ = 0;
};

/// Leaves in a round of weight w over k positions with first coefficient 1.
u64 round_cost(std::size_t k, std::size_t w, Residue p) {
  if (w == 0 || w > k) return 0;
  if (w == 1) return k;
  return sat_mul(binomial(k, w), field_power(p - 1, w - 2));
}

struct Best {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::optional<Vector> word;
};

/// Lightest codeword among the leaves of one round, found in chunks split
/// by the first position. Ties go to the earliest chunk so results do not
/// depend on the thread count.
struct RoundResult {
  Best best;
  u64 leaves = 0;
  bool completed = true;
};

RoundResult lightest_in_round(const PrimeField& f, const InfoSet& set, std::size_t k, std::size_t n, std::size_t w,
                              std::size_t bound, unsigned threads, const std::atomic<bool>* abort) {
  const std::size_t chunks = w == 1 ? 1 : k - w + 1;
  std::vector<Best> per_chunk(chunks);
  std::vector<u64> leaves(chunks, 0);
  std::vector<char> ok(chunks, 1);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    Enumerator e(f, set, k);
    for (;;) {
      const std::size_t chunk = next.fetch_add(1);
      if (chunk >= chunks) return;
      Best& b = per_chunk[chunk];
      b.weight = bound;
      auto visit = [&](const Leaf& lf) {
        std::uint32_t top = 0;
        Residue arg = 0;
        for (Residue c = 1; c < e.p(); ++c)
          if (lf.hist[c] > top || arg == 0) {
            top = lf.hist[c];
            arg = c;
          }
        const std::size_t wt = lf.base - top;
        if (wt < b.weight) {
          b.weight = wt;
          b.word = e.materialize(lf, arg, n);
        }
      };
      const std::size_t lo = w == 1 ? 0 : chunk;
      const std::size_t hi = w == 1 ? k : chunk + 1;
      ok[chunk] = e.run(w, lo, hi, visit, abort) ? 1 : 0;
      leaves[chunk] = e.leaves();
    }
  };

  const unsigned nthreads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RoundResult out;
  out.best.weight = bound;
  for (std::size_t c = 0; c < chunks; ++c) {
    out.leaves += leaves[c];
    out.completed = out.completed && ok[c];
    if (per_chunk[c].word && per_chunk[c].weight < out.best.weight) out.best = per_chunk[c];
  }
  return out;
}

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (!seconds) return;
    const auto end = std::chrono::steady_clock::now() + std::chrono::duration<double>(*seconds);
    watcher_ = std::thread([this, end] {
      while (!done_.load()) {
        if (std::chrono::steady_clock::now() >= end) {
          expired_.store(true);
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
      }
    });
  }
  ~Deadline() {
    done_.store(true);
    if (watcher_.joinable()) watcher_.join();
  }
  Deadline(const Deadline&) = delete;
  Deadline& operator=(const Deadline&) = delete;

  const std::atomic<bool>* flag() const noexcept { return &expired_; }
  bool expired() const noexcept { return expired_.load(); }

 private:
  std::atomic<bool> expired_{false};
  std::atomic<bool> done_{false};
  std::thread watcher_;
};

/// Contribution of a set that has completed every round up to w.
std::size_t contribution(const InfoSet& s, std::size_t k, std::size_t w) {
  const std::size_t missing = k - s.block_rank;
  return w + 1 > missing ? w + 1 - missing : 0;
}

std::size_t lower_bound_of(const std::vector<InfoSet>& sets, const std::vector<std::size_t>& done, std::size_t k) {
  std::size_t l = 0;
  for (std::size_t j = 0; j < sets.size(); ++j) l += contribution(sets[j], k, done[j]);
  return l;
}

}  // namespace

// ---------------------------------------------------------------- public

WeightReport min_weight_exhaustive(const LinearCode& c, std::uint64_t budget) {
  check_exhaustive_budget(c, budget);
  WeightReport r;
  r.min_weight = std::numeric_limits<std::size_t>::max();
  std::vector<Residue> best;
  u64 count = 0;
  for_each_normalized(c, [&](const std::vector<Residue>& word, std::size_t wt) {
    ++count;
    if (wt < r.min_weight) {
      r.min_weight = wt;
      best = word;
    }
  });
  r.status = WeightStatus::exact;
  r.bound_value = r.min_weight;
  r.witness = Vector(c.field(), std::move(best));
  r.work = count * (c.field().p() - 1);
  r.rounds = c.k();
  return r;
}

WeightCounts weight_counts_exhaustive(const LinearCode& c, std::size_t cutoff, std::uint64_t budget) {
  check_exhaustive_budget(c, budget);
  WeightCounts out;
  out.counts.assign(cutoff + 1, 0);
  out.counts[0] = 1;
  const u64 scale = c.field().p() - 1;
  for_each_normalized(c, [&](const std::vector<Residue>&, std::size_t wt) {
    ++out.work;
    if (wt <= cutoff) out.counts[wt] += scale;
  });
  out.complete = true;
  out.exact_below = cutoff + 1;
  return out;
}

WeightReport min_weight(const LinearCode& c, const WeightBudget& budget) {
  const PrimeField& f = c.field();
  const std::size_t n = c.n(), k = c.k();
  const Residue p = f.p();
  if (p >= 256) {
    // The enumeration tables are sized p^2; large fields go exhaustive.
    if (field_power(p, k) <= budget.work_units) return min_weight_exhaustive(c, budget.work_units);
  }
  Deadline deadline(budget.seconds);
  WeightReport report;
  Best best;
  u64 work = 0;

  auto consider_rows = [&](const InfoSet& s) {
    const std::size_t m = s.redundancy.size();
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t wt = 1;
      for (std::size_t i = 0; i < m; ++i) wt += s.red[t * m + i] != 0;
      if (wt < best.weight) {
        std::vector<Residue> word(n, 0);
        word[s.pivots[t]] = 1;
        for (std::size_t i = 0; i < m; ++i) word[s.redundancy[i]] = s.red[t * m + i];
        best.weight = wt;
        best.word = Vector(f, std::move(word));
      }
    }
  };

  const std::vector<InfoSet> sets = disjoint_info_sets(c.generator());
  for (const auto& s : sets) consider_rows(s);
  report.info_sets = sets.size();

  // Random information sets, enumerated to weight 2, seed the witness.
  if (p < 256 && budget.witness_trials > 0 && n > k) {
    std::mt19937_64 rng(budget.seed);
    std::vector<std::size_t> order(n);
    for (u64 trial = 0; trial < budget.witness_trials && !deadline.expired(); ++trial) {
      if (budget.abandon_below && best.weight < *budget.abandon_below) break;
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const InfoSet s = make_info_set(c.generator(), order, n);
      const u64 cost = round_cost(k, 1, p) + round_cost(k, 2, p);
      if (sat_add(work, cost) > budget.work_units) break;
      for (std::size_t w = 1; w <= std::min<std::size_t>(2, k); ++w) {
        const auto r = lightest_in_round(f, s, k, n, w, best.weight, 1, deadline.flag());
        work = sat_add(work, r.leaves);
        if (r.best.word) best = r.best;
      }
    }
  }

  std::vector<std::size_t> done(sets.size(), 0);
  std::size_t bound = lower_bound_of(sets, done, k);
  bool stopped = false;
  bool covered = false;  // some full set enumerated every message
  auto finished = [&] {
    return covered || bound >= best.weight || (budget.target_bound && bound >= *budget.target_bound) ||
           (budget.abandon_below && best.weight < *budget.abandon_below);
  };

  for (std::size_t w = 1; w <= k && !finished() && !stopped && p < 256; ++w) {
    for (std::size_t j = 0; j < sets.size() && !finished(); ++j) {
      const InfoSet& s = sets[j];
      if (contribution(s, k, w) == 0) continue;  // partial set not yet useful
      while (done[j] < w) {
        const std::size_t round = done[j] + 1;
        if (round < best.weight) {
          const u64 cost = round_cost(k, round, p);
          if (sat_add(work, cost) > budget.work_units) {
            stopped = true;
            break;
          }
          const auto r = lightest_in_round(f, s, k, n, round, best.weight, budget.threads, deadline.flag());
          work = sat_add(work, r.leaves);
          if (r.best.word) best = r.best;
          if (!r.completed) {
            stopped = true;
            break;
          }
        }
        done[j] = round;
        if (round == k && s.block_rank == k) covered = true;
      }
      if (stopped) break;
      bound = lower_bound_of(sets, done, k);
    }
  }

  report.min_weight = best.weight;
  report.witness = best.word;
  report.work = work;
  report.rounds = done.empty() ? 0 : *std::max_element(done.begin(), done.end());
  if (covered || bound >= best.weight) {
    report.status = WeightStatus::exact;
    report.bound_value = best.weight;
  } else {
    report.status = WeightStatus::lower_bound;
    report.bound_value = std::max<std::size_t>(bound, 1);
  }
  return report;
}

WeightCounts weight_counts(const LinearCode& c, std::size_t cutoff, const WeightBudget& budget) {
  const PrimeField& f = c.field();
  const std::size_t n = c.n(), k = c.k();
  const Residue p = f.p();
  if (p >= 256) return weight_counts_exhaustive(c, cutoff, budget.work_units);

  Deadline deadline(budget.seconds);
  const std::vector<InfoSet> sets = disjoint_info_sets(c.generator());
  std::unordered_set<std::string> seen;
  std::vector<u64> found(cutoff + 1, 0);
  std::vector<std::size_t> done(sets.size(), 0);
  u64 work = 0;
  bool stopped = false;
  bool covered = false;
  std::size_t bound = lower_bound_of(sets, done, k);

  for (std::size_t w = 1; w <= k && !covered && bound <= cutoff && !stopped; ++w) {
    for (std::size_t j = 0; j < sets.size() && !covered && bound <= cutoff; ++j) {
      const InfoSet& s = sets[j];
      if (contribution(s, k, w) == 0) continue;
      Enumerator e(f, s, k);
      while (done[j] < w) {
        const std::size_t round = done[j] + 1;
        if (round <= cutoff) {
          if (sat_add(work, round_cost(k, round, p)) > budget.work_units) {
            stopped = true;
            break;
          }
          auto visit = [&](const Leaf& lf) {
            for (Residue cc = 1; cc < p; ++cc) {
              const std::size_t wt = lf.weight(cc);
              if (wt > cutoff) continue;
              const Vector word = normalized(e.materialize(lf, cc, n));
              if (seen.insert(key_of(word)).second) ++found[wt];
            }
          };
          const bool ok = e.run(round, 0, k, visit, deadline.flag());
          work = sat_add(work, e.leaves());
          if (!ok) {
            stopped = true;
            break;
          }
        }
        done[j] = round;
        if (round == k && s.block_rank == k) covered = true;
      }
      if (stopped) break;
      bound = lower_bound_of(sets, done, k);
    }
  }

  WeightCounts out;
  out.counts.assign(cutoff + 1, 0);
  out.counts[0] = 1;
  for (std::size_t t = 1; t <= cutoff; ++t) out.counts[t] = found[t] * (p - 1);
  out.complete = covered || bound > cutoff;
  out.exact_below = out.complete ? cutoff + 1 : std::min(bound, cutoff + 1);
  out.work = work;
  return out;
}

}  // namespace sdcodes
