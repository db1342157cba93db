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

#include "sdcodes/gf.hpp"

#include <stdexcept>
#include <string>

#include "sdcodes/errors.hpp"

namespace sdcodes {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw InvalidField("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid keeps this exact for any modulus below 2^31.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

FieldElement PrimeField::operator()(std::int64_t v) const { return FieldElement(reduce(v), *this); }
FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
FieldElement PrimeField::one() const { return FieldElement(1, *this); }

void FieldElement::check_same(const FieldElement& o) const {
  if (p_ != o.p_)
    throw FieldMismatch("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
}

FieldElement FieldElement::inverse() const {
  const PrimeField f(p_);
  return FieldElement(f.inv(value_), f);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  const PrimeField f(p_);
  return FieldElement(f.pow(value_, e), f);
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.value_ = value_ == 0 ? 0 : p_ - value_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  value_ += o.value_;
  if (value_ >= p_) value_ -= p_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  value_ = static_cast<Residue>(static_cast<std::uint64_t>(value_) * o.value_ % p_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

namespace {

std::optional<Residue> sqrt_exhaustive(const PrimeField& f, Residue a) {
  for (Residue r = 0; r <= f.p() / 2; ++r)
    if (f.mul(r, r) == a) return r;
  return std::nullopt;
}

std::optional<Residue> sqrt_tonelli_shanks(const PrimeField& f, Residue a) {
  const std::uint32_t p = f.p();
  if (a == 0) return 0;
  if (f.pow(a, (p - 1) / 2) != 1) return std::nullopt;
  std::uint32_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Residue z = 2;
  while (f.pow(z, (p - 1) / 2) != p - 1) ++z;
  Residue c = f.pow(z, q);
  Residue x = f.pow(a, (q + 1) / 2);
  Residue t = f.pow(a, q);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = f.mul(t2, t2);
      ++i;
    }
    Residue b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = f.mul(b, b);
    x = f.mul(x, b);
    c = f.mul(b, b);
    t = f.mul(t, c);
    m = i;
  }
  return std::min(x, f.neg(x));
}

}  // namespace

std::pair<FieldElement, FieldElement> roots_of_minus_one(const PrimeField& field) {
  if (!field.is_one_mod_four())
    throw NoRootOfMinusOne("p = " + std::to_string(field.p()) + " is 3 mod 4");
  const auto r = sqrt(field(-1));
  const FieldElement a = *r;
  return {a, -a};
}

std::optional<FieldElement> sqrt(const FieldElement& a) {
  const PrimeField f = a.field();
  const auto r = f.p() < (1u << 16) ? sqrt_exhaustive(f, a.value()) : sqrt_tonelli_shanks(f, a.value());
  if (!r) return std::nullopt;
  return FieldElement(*r, f);
}

bool is_nonzero_square(const FieldElement& a) {
  if (a.is_zero()) return false;
  const PrimeField f = a.field();
  return f.pow(a.value(), (f.p() - 1) / 2) == 1;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  a %= m;
  std::uint64_t x = a;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1) return k;
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % m);
  }
  throw std::domain_error("element is not invertible modulo " + std::to_string(m));
}

}  // namespace sdcodes
