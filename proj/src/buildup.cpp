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

#include "sdcodes/buildup.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "sdcodes/errors.hpp"

namespace sdcodes {

namespace {

void require_root_of_minus_one(const FieldElement& alpha) {
  if (!(alpha * alpha == alpha.field()(-1)))
    throw NoRootOfMinusOne("alpha = " + std::to_string(alpha.value()) + " does not square to -1");
}

}  // namespace

BuildStep BuildStep::trivial(const FieldElement& alpha, std::size_t n) {
  return BuildStep{alpha, alpha, Vector(alpha.field(), n)};
}

void validate_step(const SymmetricSD& c, const BuildStep& step) {
  const PrimeField& f = c.field();
  if (!(step.alpha.field() == f) || !(step.gamma.field() == f) || !(step.x.field() == f))
    throw FieldMismatch("step and code live over different fields");
  if (step.x.size() != c.half_n())
    throw DimensionMismatch("x has length " + std::to_string(step.x.size()) + ", code half-length is " +
                            std::to_string(c.half_n()));
  require_root_of_minus_one(step.alpha);
  if (step.is_trivial()) {
    if (!(step.gamma == step.alpha)) throw GammaMismatch("the trivial step carries gamma = alpha");
    return;
  }
  if (!(mat_vec(c.a(), step.x) == step.alpha * step.x))
    throw NotAnEigenvector("A x^T != " + std::to_string(step.alpha.value()) + " x^T");
  const FieldElement target = f(-1) - dot(step.x, step.x);
  // 1 + x x^T = 0 is admitted: then gamma = 0.
  if (!sqrt(target)) throw NotNonzeroSquare("x x^T + 1 is not a square");
  if (!(step.gamma * step.gamma == target)) throw GammaMismatch("gamma^2 != -1 - x x^T");
  if (step.gamma == step.alpha) throw GammaEqualsAlpha("gamma = alpha with x != 0");
}

SymmetricSD extend(const SymmetricSD& c, const BuildStep& step, bool check_identities) {
  validate_step(c, step);
  if (step.is_trivial()) return direct_sum(SymmetricSD::unit(step.alpha), c);

  const PrimeField& f = c.field();
  const FieldElement beta = (step.gamma - step.alpha).inverse();
  const Matrix e = beta * outer(step.x);
  if (check_identities) {
    const Matrix& a = c.a();
    const Matrix xrow = Matrix::from_rows(f, {step.x}, step.x.size());
    // (1,2) block of G'G'^T: gamma x + x A^T + x E^T = 0
    const Matrix b12 = step.gamma * xrow + xrow * a.transpose() + xrow * e.transpose();
    if (!b12.is_zero()) throw std::logic_error("extend: (1,2) block identity fails");
    // (2,2) block: x^T x + 2 alpha beta x^T x + E E^T = 0
    const Matrix xx = outer(step.x);
    const Matrix b22 = xx + (f(2) * step.alpha * beta) * xx + e * e.transpose();
    if (!b22.is_zero()) throw std::logic_error("extend: (2,2) block identity fails");
  }
  return SymmetricSD(block2x2(step.gamma, step.x, c.a() + e));
}

std::pair<SymmetricSD, BuildStep> reduce(const SymmetricSD& c, const FieldElement& alpha) {
  if (c.half_n() < 2) throw InvalidCode("reduce needs half-length at least 2");
  if (!(alpha.field() == c.field())) throw FieldMismatch("alpha and code live over different fields");
  require_root_of_minus_one(alpha);
  const std::size_t n = c.half_n() - 1;
  const FieldElement gamma = c.a().at(0, 0);
  const Vector x = c.a().block(0, 1, 1, n).row(0);
  const Matrix b = c.a().block(1, 1, n, n);
  if (x.is_zero()) {
    // A' = (gamma) + B, so the split is the trivial step with alpha = gamma.
    SymmetricSD rest(b);
    return {std::move(rest), BuildStep::trivial(gamma, n)};
  }
  if (gamma == alpha) throw AlphaEqualsGamma("alpha equals the corner entry; use the other root of -1");
  const FieldElement beta = (gamma - alpha).inverse();
  SymmetricSD a(b - beta * outer(x));
  if (!(mat_vec(a.a(), x) == alpha * x)) throw NotAnEigenvector("reduce produced a non-eigenvector");
  return {std::move(a), BuildStep{alpha, gamma, x}};
}

std::vector<Vector> eigen_candidates(const SymmetricSD& c, const FieldElement& alpha) {
  require_root_of_minus_one(alpha);
  return eigenspace(c.a(), alpha);
}

void for_each_admissible_step(const SymmetricSD& c, const FieldElement& alpha, const StepEnumeration& how,
                              const std::function<bool(const BuildStep&)>& visit) {
  const PrimeField& f = c.field();
  const std::size_t n = c.half_n();
  if (how.include_trivial && !visit(BuildStep::trivial(alpha, n))) return;
  const auto basis = eigen_candidates(c, alpha);
  const std::size_t dim = basis.size();
  if (dim == 0) return;

  // false: stop
  auto emit = [&](const std::vector<Residue>& coeff) {
    Vector x(f, n);
    for (std::size_t i = 0; i < dim; ++i)
      if (coeff[i] != 0) x += f(coeff[i]) * basis[i];
    if (x.is_zero()) return true;
    const FieldElement target = f(-1) - dot(x, x);
    const auto r = sqrt(target);
    if (!r) return true;
    std::vector<FieldElement> gammas{*r};
    if (!r->is_zero()) gammas.push_back(-*r);
    for (const auto& g : gammas) {
      if (g == alpha) continue;
      if (!visit(BuildStep{alpha, g, x})) return false;
    }
    return true;
  };

  std::vector<Residue> coeff(dim, 0);
  if (!how.sample) {
    // ascending lexicographic: the last coordinate moves fastest
    for (;;) {
      std::size_t i = dim;
      while (i-- > 0) {
        if (++coeff[i] < f.p()) break;
        coeff[i] = 0;
        if (i == 0) return;
      }
      if (!emit(coeff)) return;
    }
  }
  std::mt19937_64 rng(how.seed);
  std::uniform_int_distribution<Residue> pick(0, f.p() - 1);
  for (std::uint64_t s = 0; s < *how.sample; ++s) {
    for (auto& v : coeff) v = pick(rng);
    if (!emit(coeff)) return;
  }
}

std::vector<BuildStep> admissible_steps(const SymmetricSD& c, const FieldElement& alpha, const StepEnumeration& how) {
  std::vector<BuildStep> out;
  for_each_admissible_step(c, alpha, how, [&](const BuildStep& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Chain replay(const SymmetricSD& base, const std::vector<BuildStep>& steps, const std::optional<WeightBudget>& budget) {
  Chain chain{base, {}, {}, {}};
  for (const auto& step : steps) {
    chain.codes.push_back(extend(chain.last(), step));
    chain.steps.push_back(step);
    if (budget) chain.results.push_back(min_weight(chain.codes.back().code(), *budget));
  }
  return chain;
}

namespace {

struct Candidate {
  std::size_t parent;
  BuildStep step;
  SymmetricSD code;
  WeightReport report;
};

/// Strict weak order: better candidates first.
bool better(const Candidate& a, const Candidate& b) {
  if (a.report.min_weight != b.report.min_weight) return a.report.min_weight > b.report.min_weight;
  if (a.report.is_exact() != b.report.is_exact()) return a.report.is_exact();
  if (a.report.bound_value != b.report.bound_value) return a.report.bound_value > b.report.bound_value;
  if (a.step.gamma.value() != b.step.gamma.value()) return a.step.gamma.value() < b.step.gamma.value();
  if (!(a.step.x == b.step.x)) return a.step.x < b.step.x;
  if (!(a.step.alpha == b.step.alpha)) return a.step.alpha.value() < b.step.alpha.value();
  return a.parent < b.parent;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::seed_seq seq{seed, a, b, c};
  std::mt19937_64 rng(seq);
  return rng();
}

}  // namespace

Chain search_chain(const SymmetricSD& base, std::size_t target_length, const SearchOptions& options) {
  if (target_length % 2 != 0 || target_length < 2 * base.half_n())
    throw DimensionMismatch("target length " + std::to_string(target_length) + " must be even and at least " +
                            std::to_string(2 * base.half_n()));
  if (base.half_n() == 0) throw InvalidCode("search needs a nonempty base code");
  const PrimeField& f = base.field();
  const auto roots = roots_of_minus_one(f);

  std::vector<Chain> beam{Chain{base, {}, {}, {}}};
  for (std::size_t level = 0; 2 * beam.front().last().half_n() < target_length; ++level) {
    std::vector<Candidate> pool;
    std::set<std::vector<Residue>> seen;
    auto floor = [&]() -> std::optional<std::size_t> {
      if (pool.size() < options.beam) return std::nullopt;
      return pool[options.beam - 1].report.min_weight;
    };
    auto consider = [&](std::size_t parent, const BuildStep& step) {
      SymmetricSD next = extend(beam[parent].last(), step);
      if (!seen.insert(next.a().entries()).second) return;
      WeightBudget b = options.per_candidate;
      b.abandon_below = floor();
      WeightReport r = min_weight(next.code(), b);
      Candidate cand{parent, step, std::move(next), std::move(r)};
      if (cand.report.min_weight < floor().value_or(0)) return;
      pool.insert(std::upper_bound(pool.begin(), pool.end(), cand, better), std::move(cand));
      if (pool.size() > options.beam) pool.pop_back();
    };

    for (std::size_t parent = 0; parent < beam.size(); ++parent) {
      const SymmetricSD& code = beam[parent].last();
      for (std::size_t ai = 0; ai < 2; ++ai) {
        const FieldElement alpha = ai == 0 ? roots.first : roots.second;
        const std::size_t dim = eigen_candidates(code, alpha).size();
        if (dim == 0) continue;  // the other root has a full eigenspace
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < dim && space <= options.full_enumeration_limit; ++i) space *= f.p();
        const StepEnumeration how = space <= options.full_enumeration_limit
                                        ? StepEnumeration::full()
                                        : StepEnumeration::sampled(options.samples,
                                                                   mix(options.seed, level, parent, ai));
        for_each_admissible_step(code, alpha, how, [&](const BuildStep& s) {
          consider(parent, s);
          return true;
        });
      }
    }
    if (pool.empty())
      for (std::size_t parent = 0; parent < beam.size(); ++parent)
        consider(parent, BuildStep::trivial(roots.first, beam[parent].last().half_n()));

    std::vector<Chain> next;
    for (auto& cand : pool) {
      Chain ch = beam[cand.parent];
      ch.steps.push_back(cand.step);
      ch.codes.push_back(std::move(cand.code));
      ch.results.push_back(std::move(cand.report));
      next.push_back(std::move(ch));
    }
    beam = std::move(next);
  }
  return beam.front();
}

}  // namespace sdcodes
