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

#include <gtest/gtest.h>

#include <vector>

#include "avec/error.hpp"
#include "avec/finite_field.hpp"

namespace avec {
namespace {

TEST(PrimePowers, Factor) {
  EXPECT_FALSE(FactorPrimePower(0));
  EXPECT_FALSE(FactorPrimePower(1));
  EXPECT_FALSE(FactorPrimePower(6));
  EXPECT_FALSE(FactorPrimePower(12));
  auto f = FactorPrimePower(27);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->p, 3u);
  EXPECT_EQ(f->k, 3u);
  EXPECT_EQ(FactorPrimePower(2)->k, 1u);
  EXPECT_EQ(FactorPrimePower(1024)->k, 10u);
}

TEST(Irreducible, SmallestChoices) {
  EXPECT_EQ(FindIrreducible(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));     // x^2+x+1
  EXPECT_EQ(FindIrreducible(2, 3), (std::vector<std::uint32_t>{1, 1, 0, 1}));  // x^3+x+1
  EXPECT_EQ(FindIrreducible(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));     // x^2+1
  EXPECT_EQ(FiniteField::Make(4).ModulusString(), "x^2+x+1");
  EXPECT_EQ(FiniteField::Make(8).ModulusString(), "x^3+x+1");
}

TEST(Field, RejectsNonPrimePowers) {
  for (std::uint64_t q : {0u, 1u, 6u, 10u, 12u}) {
    try {
      FiniteField::Make(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotPrimePower);
    }
  }
}

TEST(Field, IndexRoundTrip) {
  FiniteField f = FiniteField::Make(9);
  auto all = f.Elements();
  ASSERT_EQ(all.size(), 9u);
  for (std::uint32_t i = 0; i < 9; ++i) EXPECT_EQ(f.Index(f.FromIndex(i)), i);
  EXPECT_EQ(f.Index(f.Zero()), 0u);
  EXPECT_EQ(f.Index(f.One()), 1u);
}

TEST(Field, GF4Tables) {
  // Elements 0, 1, x, x+1 with x^2 = x + 1.
  FiniteField f = FiniteField::Make(4);
  auto x = f.FromIndex(2);
  auto x1 = f.FromIndex(3);
  EXPECT_EQ(f.Mul(x, x), x1);
  EXPECT_EQ(f.Mul(x, x1), f.One());
  EXPECT_EQ(f.Add(x, x1), f.One());
  EXPECT_EQ(f.Inv(x), x1);
  EXPECT_EQ(f.Pow(x, 3), f.One());
}

TEST(Field, PrimeFieldMatchesModularArithmetic) {
  FiniteField f = FiniteField::Make(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      EXPECT_EQ(f.Index(f.Add(f.FromIndex(a), f.FromIndex(b))), (a + b) % 7);
      EXPECT_EQ(f.Index(f.Mul(f.FromIndex(a), f.FromIndex(b))), (a * b) % 7);
      EXPECT_EQ(f.Index(f.Sub(f.FromIndex(a), f.FromIndex(b))), (a + 7 - b) % 7);
    }
  }
}

TEST(Field, AxiomsExhaustiveSmall) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    FiniteField f = FiniteField::Make(q);
    auto el = f.Elements();
    for (const auto& a : el) {
      EXPECT_EQ(f.Add(a, f.Neg(a)), f.Zero());
      if (!f.IsZero(a)) {
        EXPECT_EQ(f.Mul(a, f.Inv(a)), f.One());
      }
      for (const auto& b : el) {
        EXPECT_EQ(f.Add(a, b), f.Add(b, a));
        EXPECT_EQ(f.Mul(a, b), f.Mul(b, a));
        for (const auto& c : el) {
          EXPECT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)));
          EXPECT_EQ(f.Mul(a, f.Mul(b, c)), f.Mul(f.Mul(a, b), c));
        }
      }
    }
  }
}

TEST(Field, Errors) {
  FiniteField f = FiniteField::Make(5);
  try {
    f.Inv(f.Zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  EXPECT_THROW(f.FromIndex(5), Error);
  EXPECT_THROW(f.Add(f.One(), FiniteField::Make(4).One()), Error);
  EXPECT_EQ(f.ToString(f.FromIndex(3)), "3");
}

}  // namespace
}  // namespace avec
