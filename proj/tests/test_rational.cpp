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

#include <limits>
#include <sstream>

#include "avec/error.hpp"
#include "avec/rational.hpp"

namespace avec {
namespace {

TEST(Rational, ReducesAndNormalizesSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3);
  Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  Rational c = a;
  c += b;
  c *= Rational(4);
  EXPECT_EQ(c, Rational(2));
}

TEST(Rational, OrderingIsExact) {
  // Differ by far less than double resolution.
  constexpr std::int64_t big = 3'000'000'000'000'000'000;
  EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_LE(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, CeilFloor) {
  EXPECT_EQ(Rational(7, 2).Ceil(), 4);
  EXPECT_EQ(Rational(7, 2).Floor(), 3);
  EXPECT_EQ(Rational(-7, 2).Ceil(), -3);
  EXPECT_EQ(Rational(-7, 2).Floor(), -4);
  EXPECT_EQ(Rational(4).Ceil(), 4);
  EXPECT_EQ(Rational(-4).Floor(), -4);
}

TEST(Rational, Formatting) {
  EXPECT_EQ(Rational(25, 2).ToString(), "25/2");
  EXPECT_EQ(Rational(-3).ToString(), "-3");
  std::ostringstream os;
  os << Rational(3, 9);
  EXPECT_EQ(os.str(), "1/3");
  EXPECT_DOUBLE_EQ(Rational(1, 4).ToDouble(), 0.25);
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational(1, 0), Error);
  try {
    (void)(Rational(1) / Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  constexpr auto max = std::numeric_limits<std::int64_t>::max();
  try {
    (void)(Rational(max) * Rational(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArithmeticOverflow);
  }
  EXPECT_EQ(Abs(Rational(-5, 3)), Rational(5, 3));
}

}  // namespace
}  // namespace avec
