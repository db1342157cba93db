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

#include "sdcodes/extfield.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sdcodes/errors.hpp"

namespace sdcodes {

Polynomial::Polynomial(const PrimeField& field, std::vector<Residue> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  trim();
}

Polynomial Polynomial::monomial(const PrimeField& field, std::size_t degree, Residue c) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::constant(const PrimeField& field, Residue c) { return Polynomial(field, {c}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Residue inv = field_.inv(leading());
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = field_.mul(c, inv);
  return r;
}

Residue Polynomial::evaluate(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial addition");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial subtraction");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("polynomial product");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const PrimeField& f = a.field_;
  std::vector<Residue> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Polynomial(f, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!(field_ == divisor.field_)) throw FieldMismatch("polynomial division");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(field_), rem};
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  const Residue lead_inv = field_.inv(divisor.leading());
  std::vector<Residue> quot(rem.coeffs_.size() - dd, 0);
  for (std::size_t i = rem.coeffs_.size(); i-- > dd;) {
    const Residue c = field_.mul(rem.coeffs_[i], lead_inv);
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j)
      rem.coeffs_[i - dd + j] = field_.sub(rem.coeffs_[i - dd + j], field_.mul(c, divisor.coeffs_[j]));
  }
  rem.trim();
  return {Polynomial(field_, std::move(quot)), rem};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Residue c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial powmod(const Polynomial& base, unsigned __int128 e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
  Polynomial b = base % modulus;
  while (e != 0) {
    if (e & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1;
  }
  return result;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    out.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
  const int m = f.degree();
  if (m <= 0) return false;
  if (m == 1) return true;
  const PrimeField& F = f.field();
  const Polynomial x = Polynomial::monomial(F, 1);
  // frob[i] = x^(p^i) mod f
  std::vector<Polynomial> frob{x % f};
  for (int i = 1; i <= m; ++i) frob.push_back(powmod(frob.back(), F.p(), f));
  if (!(frob[static_cast<std::size_t>(m)] == x % f)) return false;
  for (unsigned q : prime_divisors(static_cast<unsigned>(m))) {
    const Polynomial g = gcd(f, frob[static_cast<std::size_t>(m) / q] - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

Polynomial find_irreducible(const PrimeField& field, unsigned m) {
  if (m == 0) throw PreconditionError("irreducible polynomial of degree 0 requested");
  std::vector<Residue> c(m + 1, 0);
  c[m] = 1;
  for (;;) {
    Polynomial f(field, c);
    if (is_irreducible(f)) return f;
    // next tuple: c_0 is the least significant digit
    std::size_t i = 0;
    while (i < m && ++c[i] == field.p()) c[i++] = 0;
    if (i == m) throw std::logic_error("no irreducible polynomial found");
  }
}

std::shared_ptr<const ExtField> ExtField::make(const PrimeField& base, unsigned m) {
  return std::make_shared<const ExtField>(ExtField{base, find_irreducible(base, m), m});
}

unsigned __int128 ExtField::order() const {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < degree; ++i) q *= base.p();
  return q;
}

ExtFieldElement::ExtFieldElement(std::shared_ptr<const ExtField> field, const Polynomial& representation)
    : field_(std::move(field)), rep_(representation % field_->modulus) {}

ExtFieldElement ExtFieldElement::zero(std::shared_ptr<const ExtField> field) {
  Polynomial z(field->base);
  return ExtFieldElement(std::move(field), z);
}

ExtFieldElement ExtFieldElement::one(std::shared_ptr<const ExtField> field) {
  Polynomial o = Polynomial::constant(field->base, 1);
  return ExtFieldElement(std::move(field), o);
}

ExtFieldElement ExtFieldElement::from_index(std::shared_ptr<const ExtField> field, unsigned __int128 index) {
  std::vector<Residue> c(field->degree, 0);
  for (unsigned i = 0; i < field->degree; ++i) {
    c[i] = static_cast<Residue>(index % field->base.p());
    index /= field->base.p();
  }
  Polynomial rep(field->base, std::move(c));
  return ExtFieldElement(std::move(field), rep);
}

ExtFieldElement ExtFieldElement::pow(unsigned __int128 e) const {
  return ExtFieldElement(field_, powmod(rep_, e, field_->modulus));
}

ExtFieldElement& ExtFieldElement::operator+=(const ExtFieldElement& o) {
  rep_ += o.rep_;
  return *this;
}

ExtFieldElement& ExtFieldElement::operator-=(const ExtFieldElement& o) {
  rep_ -= o.rep_;
  return *this;
}

ExtFieldElement& ExtFieldElement::operator*=(const ExtFieldElement& o) {
  rep_ = (rep_ * o.rep_) % field_->modulus;
  return *this;
}

ExtFieldElement primitive_root_of_unity(std::uint32_t ell, const PrimeField& field) {
  if (ell < 3 || !is_prime(ell) || ell == field.p())
    throw PreconditionError("ell = " + std::to_string(ell) + " must be an odd prime different from p");
  const auto m = static_cast<unsigned>(multiplicative_order(field.p(), ell));
  const auto F = ExtField::make(field, m);
  const unsigned __int128 cofactor = (F->order() - 1) / ell;
  for (unsigned __int128 idx = 2; idx < F->order(); ++idx) {
    const ExtFieldElement z = ExtFieldElement::from_index(F, idx).pow(cofactor);
    if (!z.is_one()) return z;
  }
  throw std::logic_error("no root of unity found");
}

}  // namespace sdcodes
