// Copyright 2026 The avecbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "avec/finite_field.hpp"

#include <string>

#include "avec/error.hpp"

namespace avec {
namespace {

using Poly = std::vector<std::uint32_t>;

bool IsPrime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor over GF(p).
Poly Remainder(Poly a, const Poly& monic, std::uint32_t p) {
  Trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t sub = lead * monic[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    Trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of index.
Poly MonicFromIndex(std::uint32_t p, std::uint32_t degree, std::uint64_t index) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

std::uint64_t IntPow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool IsIrreducible(const Poly& f, std::uint32_t p) {
  const auto k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = IntPow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (Remainder(f, MonicFromIndex(p, d, idx), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<PrimePower> FactorPrimePower(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (!IsPrime(p)) return std::nullopt;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), k};
}

std::vector<std::uint32_t> FindIrreducible(std::uint32_t p, std::uint32_t k) {
  if (!IsPrime(p) || k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "FindIrreducible needs a prime p and k >= 1");
  }
  const std::uint64_t count = IntPow(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = MonicFromIndex(p, k, idx);
    if (IsIrreducible(f, p)) return f;
  }
  // Irreducible polynomials exist in every degree.
  throw Error(ErrorCode::kConstructionInvariantViolated, "no irreducible polynomial found");
}

FiniteField FiniteField::Make(std::uint64_t q) {
  auto pk = FactorPrimePower(q);
  if (!pk) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > (std::uint64_t{1} << 31)) throw Error(ErrorCode::kOutOfRange, "field order too large");
  FiniteField f;
  f.p_ = pk->p;
  f.k_ = pk->k;
  f.q_ = static_cast<std::uint32_t>(q);
  f.modulus_ = FindIrreducible(f.p_, f.k_);
  return f;
}

std::string FiniteField::ModulusString() const {
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

FieldElement FiniteField::Zero() const { return FieldElement(Poly(k_, 0)); }

FieldElement FiniteField::One() const {
  Poly c(k_, 0);
  c[0] = 1;
  return FieldElement(std::move(c));
}

FieldElement FiniteField::FromIndex(std::uint32_t index) const {
  if (index >= q_) throw Error(ErrorCode::kOutOfRange, "element index out of range");
  Poly c(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return FieldElement(std::move(c));
}

std::uint32_t FiniteField::Index(const FieldElement& a) const {
  Check(a);
  std::uint32_t index = 0;
  for (std::size_t i = k_; i-- > 0;) index = index * p_ + a.coeffs()[i];
  return index;
}

std::vector<FieldElement> FiniteField::Elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back(FromIndex(i));
  return out;
}

void FiniteField::Check(const FieldElement& a) const {
  if (a.coeffs().size() != k_) throw Error(ErrorCode::kInvalidArgument, "element of another field");
  for (std::uint32_t c : a.coeffs()) {
    if (c >= p_) throw Error(ErrorCode::kInvalidArgument, "coefficient not reduced mod p");
  }
}

FieldElement FiniteField::Add(const FieldElement& a, const FieldElement& b) const {
  Check(a);
  Check(b);
  Poly c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % p_;
  return FieldElement(std::move(c));
}

FieldElement FiniteField::Neg(const FieldElement& a) const {
  Check(a);
  Poly c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) c[i] = (p_ - a.coeffs()[i]) % p_;
  return FieldElement(std::move(c));
}

FieldElement FiniteField::Sub(const FieldElement& a, const FieldElement& b) const {
  return Add(a, Neg(b));
}

FieldElement FiniteField::Mul(const FieldElement& a, const FieldElement& b) const {
  Check(a);
  Check(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      std::uint64_t t = static_cast<std::uint64_t>(a.coeffs()[i]) * b.coeffs()[j] % p_;
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + t) % p_);
    }
  }
  Poly r = Remainder(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return FieldElement(std::move(r));
}

FieldElement FiniteField::Pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement result = One();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = Mul(result, base);
    base = Mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement FiniteField::Inv(const FieldElement& a) const {
  if (IsZero(a)) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return Pow(a, q_ - 2);
}

bool FiniteField::IsZero(const FieldElement& a) const {
  Check(a);
  for (std::uint32_t c : a.coeffs()) {
    if (c != 0) return false;
  }
  return true;
}

std::string FiniteField::ToString(const FieldElement& a) const {
  return std::to_string(Index(a));
}

}  // namespace avec
