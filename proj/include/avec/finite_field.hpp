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

#ifndef AVEC_FINITE_FIELD_HPP_
#define AVEC_FINITE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace avec {

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
};

// Trial-division factorization; std::nullopt unless q = p^k with k >= 1.
std::optional<PrimePower> FactorPrimePower(std::uint64_t q);

// Lexicographically smallest monic irreducible polynomial of degree k over
// GF(p), ordering candidates by their coefficient tuple from the x^(k-1)
// coefficient down to the constant. Returned little-endian, length k + 1.
std::vector<std::uint32_t> FindIrreducible(std::uint32_t p, std::uint32_t k);

// Polynomial-basis element: coefficient i multiplies x^i.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;

 private:
  std::vector<std::uint32_t> coeffs_;
};

class FiniteField {
 public:
  // Throws kNotPrimePower unless q is a prime power (q >= 2).
  static FiniteField Make(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string ModulusString() const;

  FieldElement Zero() const;
  FieldElement One() const;
  // Base-p digits of index become the coefficients, constant term first.
  FieldElement FromIndex(std::uint32_t index) const;
  std::uint32_t Index(const FieldElement& a) const;
  std::vector<FieldElement> Elements() const;

  FieldElement Add(const FieldElement& a, const FieldElement& b) const;
  FieldElement Neg(const FieldElement& a) const;
  FieldElement Sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement Mul(const FieldElement& a, const FieldElement& b) const;
  // Throws kDivisionByZero for the zero element.
  FieldElement Inv(const FieldElement& a) const;
  FieldElement Pow(const FieldElement& a, std::uint64_t e) const;

  bool IsZero(const FieldElement& a) const;
  std::string ToString(const FieldElement& a) const;

 private:
  void Check(const FieldElement& a) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
};

}  // namespace avec

#endif  // AVEC_FINITE_FIELD_HPP_
