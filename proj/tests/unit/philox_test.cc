// Copyright 2026 The randbasis Authors.
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

#include "randbasis/philox.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace randbasis {
namespace {

// Known-answer vectors of the Random123 reference implementation.
TEST(PhiloxTest, KnownAnswers) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (PhiloxBlock{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                          {0xffffffff, 0xffffffff}),
            (PhiloxBlock{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                          {0xa4093822, 0x299f31d0}),
            (PhiloxBlock{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(PhiloxTest, FirstOutputsComeFromCounterZero) {
  Rng rng(0);
  const PhiloxBlock b = philox4x32_10({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(rng.next_u64(), (std::uint64_t{b[1]} << 32) | b[0]);
  EXPECT_EQ(rng.next_u64(), (std::uint64_t{b[3]} << 32) | b[2]);
  EXPECT_EQ(rng.position(), 1u);
}

TEST(PhiloxTest, DeterministicPerSeedAndStream) {
  Rng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    EXPECT_NE(va, c.next_u64());
    EXPECT_NE(va, d.next_u64());
  }
}

TEST(PhiloxTest, SubstreamMatchesExplicitStream) {
  const Rng base(5);
  Rng s = base.substream(3);
  Rng t(5, 3);
  EXPECT_EQ(s.stream(), 3u);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(s.next_u64(), t.next_u64());
}

TEST(PhiloxTest, UniformRangeAndMoments) {
  Rng rng(1);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum_sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(sum_sq / n - 0.25, 1.0 / 12.0, 0.005);
}

TEST(PhiloxTest, UniformIntervalEdges) {
  Rng rng(2);
  EXPECT_EQ(rng.uniform(3.0, 3.0), 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(-200.0, 200.0);
    ASSERT_GE(x, -200.0);
    ASSERT_LE(x, 200.0);
  }
}

TEST(PhiloxTest, NormalMoments) {
  Rng rng(3);
  const int n = 200000;
  double s1 = 0, s2 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s1 += z;
    s2 += z * z;
    s4 += z * z * z * z;
  }
  EXPECT_NEAR(s1 / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
  EXPECT_NEAR(s4 / n, 3.0, 0.06);
}

TEST(PhiloxTest, NoEarlyRepeats) {
  Rng rng(9);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 10000; ++i) EXPECT_TRUE(seen.insert(rng()).second);
}

}  // namespace
}  // namespace randbasis
