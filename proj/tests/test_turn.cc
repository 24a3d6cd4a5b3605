// Copyright 2026 The frobqec Authors
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

#include <gtest/gtest.h>

#include <random>

#include "frobqec/errors.h"
#include "frobqec/turn.h"

using frobqec::InvalidInputError;
using frobqec::Turn;

TEST(Turn, ReducesModOne) {
    EXPECT_EQ(Turn(5, 4), Turn(1, 4));
    EXPECT_EQ(Turn(-1, 4), Turn(3, 4));
    EXPECT_EQ(Turn(2, 4).str(), "1/2");
    EXPECT_EQ(Turn(4, 4).str(), "0/1");
    EXPECT_EQ(Turn(3, -4), Turn(1, 4));
    EXPECT_TRUE(Turn(0, 7).is_zero());
    EXPECT_EQ(Turn(0, 7).den(), 1);
}

TEST(Turn, ZeroDenominatorRejected) {
    EXPECT_THROW(Turn(1, 0), InvalidInputError);
}

TEST(Turn, ParseRoundTrip) {
    EXPECT_EQ(Turn::parse("3/4"), Turn(3, 4));
    EXPECT_EQ(Turn::parse("6/8"), Turn(3, 4));
    EXPECT_EQ(Turn::parse("0/1"), Turn());
    EXPECT_EQ(Turn::parse("-1/2"), Turn(1, 2));
    EXPECT_EQ(Turn::parse("2"), Turn());
    EXPECT_THROW(Turn::parse("1/x"), InvalidInputError);
    EXPECT_THROW(Turn::parse(""), InvalidInputError);
    EXPECT_THROW(Turn::parse("1/0"), InvalidInputError);
}

TEST(Turn, Arithmetic) {
    EXPECT_EQ(Turn(1, 4) + Turn(1, 4), Turn(1, 2));
    EXPECT_EQ(Turn(1, 2) + Turn(1, 2), Turn());
    EXPECT_EQ(Turn(1, 3) - Turn(1, 2), Turn(5, 6));
    EXPECT_EQ(-Turn(1, 4), Turn(3, 4));
    EXPECT_EQ(Turn(1, 4).times(6), Turn(1, 2));
    EXPECT_EQ(Turn(1, 2).divided(2), Turn(1, 4));
    Turn t(1, 3);
    t += Turn(2, 3);
    EXPECT_TRUE(t.is_zero());
}

TEST(Turn, ComplexValuesExactAtQuarterTurns) {
    EXPECT_EQ(Turn().to_complex(), std::complex<double>(1, 0));
    EXPECT_EQ(Turn(1, 2).to_complex(), std::complex<double>(-1, 0));
    EXPECT_EQ(Turn(1, 4).to_complex(), std::complex<double>(0, 1));
    EXPECT_EQ(Turn(3, 4).to_complex(), std::complex<double>(0, -1));
    EXPECT_NEAR(std::abs(Turn(1, 3).to_complex() - std::polar(1.0, 2.0 * M_PI / 3.0)), 0.0, 1e-15);
}

TEST(Turn, GroupLawsOnRandomTriples) {
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<int> den(1, 60);
    for (int i = 0; i < 1000; i++) {
        auto pick = [&] {
            int d = den(rng);
            return Turn(std::uniform_int_distribution<int>(-3 * d, 3 * d)(rng), d);
        };
        Turn a = pick(), b = pick(), c = pick();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a + (-a)).is_zero());
        EXPECT_EQ(a + Turn(), a);
        EXPECT_LT(a.num(), a.den());
        EXPECT_GE(a.num(), 0);
    }
}
