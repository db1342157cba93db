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

#include "sdcodes/constructions.hpp"

#include <optional>
#include <string>

#include "sdcodes/errors.hpp"

namespace sdcodes {

Matrix circulant(const Vector& first_row) {
  const std::size_t n = first_row.size();
  Matrix m(first_row.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
  return m;
}

Matrix column_reversed(const Matrix& m) {
  Matrix r(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, m.cols() - 1 - j);
  return r;
}

namespace {

Matrix bordered_around(const FieldElement& alpha, const FieldElement& beta, const Matrix& inner) {
  return block2x2(alpha, Vector(inner.field(), std::vector<Residue>(inner.rows(), beta.value())), inner);
}

}  // namespace

Matrix double_circulant_block(const CirculantSpec& spec) {
  if (spec.first_row.size() == 0) throw DimensionMismatch("empty first row");
  const Matrix c = circulant(spec.first_row);
  if (!spec.bordered) return c;
  return bordered_around(spec.bordered->first, spec.bordered->second, c);
}

LinearCode double_circulant_code(const CirculantSpec& spec) {
  const Matrix block = double_circulant_block(spec);
  return LinearCode(hconcat(Matrix::identity(block.field(), block.rows()), block));
}

Matrix symmetrized_block(const CirculantSpec& spec) {
  if (spec.first_row.size() == 0) throw DimensionMismatch("empty first row");
  const Matrix c = column_reversed(circulant(spec.first_row));
  if (!spec.bordered) return c;
  return bordered_around(spec.bordered->first, spec.bordered->second, c);
}

// ---------------------------------------------------------------- QR codes

QRSpec QRSpec::make(std::uint32_t ell, const PrimeField& field) {
  if (ell < 3 || !is_prime(ell) || ell == field.p())
    throw PreconditionError("ell = " + std::to_string(ell) + " must be an odd prime different from p");
  std::vector<bool> square(ell, false);
  for (std::uint64_t x = 1; x < ell; ++x) square[x * x % ell] = true;
  if (!square[field.p() % ell])
    throw NotAResidue(std::to_string(field.p()) + " is not a square mod " + std::to_string(ell));
  QRSpec s{ell, field, {}};
  for (std::uint32_t r = 1; r < ell; ++r)
    if (square[r]) s.residues.push_back(r);
  return s;
}

Polynomial qr_generator_polynomial(const QRSpec& spec) {
  const ExtFieldElement zeta = primitive_root_of_unity(spec.ell, spec.field);
  const auto& F = zeta.field();
  // coefficients over GF(p^m), lowest degree first
  std::vector<ExtFieldElement> g{ExtFieldElement::one(F)};
  for (std::uint32_t r : spec.residues) {
    const ExtFieldElement root = zeta.pow(r);
    std::vector<ExtFieldElement> next(g.size() + 1, ExtFieldElement::zero(F));
    for (std::size_t i = 0; i < g.size(); ++i) {
      next[i + 1] += g[i];
      next[i] -= g[i] * root;
    }
    g = std::move(next);
  }
  std::vector<Residue> coeffs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i].pow(spec.field.p()) == g[i]) || !g[i].in_base_field())
      throw CoefficientNotInBaseField("coefficient of x^" + std::to_string(i) + " is not in GF(" +
                                      std::to_string(spec.field.p()) + ")");
    coeffs.push_back(g[i].representation()[0]);
  }
  Polynomial out(spec.field, std::move(coeffs));
  Polynomial xl = Polynomial::monomial(spec.field, spec.ell) - Polynomial::constant(spec.field, 1);
  if (!(xl % out).is_zero()) throw std::logic_error("g(x) does not divide x^ell - 1");
  return out;
}

LinearCode qr_cyclic(const QRSpec& spec) {
  const Polynomial g = qr_generator_polynomial(spec);
  const std::size_t n = spec.ell;
  const std::size_t k = n - static_cast<std::size_t>(g.degree());
  Matrix m(spec.field, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(g.degree()); ++j) m(i, i + j) = g[j];
  return LinearCode(std::move(m));
}

std::string to_string(QRKind k) { return k == QRKind::self_dual ? "self-dual" : "iso-dual-candidate"; }

namespace {

Matrix extend_rows(const Matrix& g, const FieldElement& s) {
  const PrimeField& f = g.field();
  Matrix out(f, g.rows(), g.cols() + 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Residue sum = 0;
    for (std::size_t c = 0; c < g.cols(); ++c) {
      out(r, c) = g(r, c);
      sum = f.add(sum, g(r, c));
    }
    out(r, g.cols()) = f.mul(s.value(), sum);
  }
  return out;
}

}  // namespace

QRExtension qr_extended(const QRSpec& spec) {
  const LinearCode cyc = qr_cyclic(spec);
  const PrimeField& f = spec.field;
  // Preferred border: the larger root of ell s^2 = -1.
  std::optional<FieldElement> preferred;
  if (spec.ell % f.p() != 0) {
    if (auto r = sqrt(-f(1) / f(static_cast<std::int64_t>(spec.ell))); r && !r->is_zero()) preferred = -*r;
  }
  if (preferred) {
    LinearCode c(extend_rows(cyc.generator(), *preferred));
    if (is_self_dual(c)) return {std::move(c), QRKind::self_dual, *preferred};
  }
  for (Residue s = 1; s < f.p(); ++s) {
    LinearCode c(extend_rows(cyc.generator(), f(s)));
    if (is_self_dual(c)) return {std::move(c), QRKind::self_dual, f(s)};
  }
  const FieldElement s = preferred.value_or(f(-1));
  return {LinearCode(extend_rows(cyc.generator(), s)), QRKind::iso_dual_candidate, s};
}

}  // namespace sdcodes
