// Copyright 2026 The wavelearn Authors
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

#include "wavelearn/classical.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "wavelearn/errors.hpp"

namespace wavelearn {
namespace {

TEST(ClassicalFilterTest, Haar) {
  const auto h = ClassicalFilter({WaveletFamily::kHaar, 1});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(h[0], 0.7071067811865476);
  EXPECT_DOUBLE_EQ(h[1], 0.7071067811865476);
}

TEST(ClassicalFilterTest, Db2SumAndNorm) {
  const auto h = ClassicalFilter({WaveletFamily::kDaubechies, 2});
  ASSERT_EQ(h.size(), 4u);
  double sum = 0.0, norm2 = 0.0;
  for (double v : h.coeffs()) {
    sum += v;
    norm2 += v * v;
  }
  EXPECT_NEAR(sum, std::numbers::sqrt2, 1e-10);
  EXPECT_NEAR(std::sqrt(norm2), 1.0, 1e-10);
  // Closed form (1 + sqrt3, 3 + sqrt3, 3 - sqrt3, 1 - sqrt3) / (4 sqrt2).
  const double s3 = std::sqrt(3.0);
  const double d = 4.0 * std::numbers::sqrt2;
  EXPECT_NEAR(h[0], (1 + s3) / d, 1e-15);
  EXPECT_NEAR(h[1], (3 + s3) / d, 1e-15);
  EXPECT_NEAR(h[2], (3 - s3) / d, 1e-15);
  EXPECT_NEAR(h[3], (1 - s3) / d, 1e-15);
}

TEST(ClassicalFilterTest, LengthsFollowFamilyRules) {
  for (const auto& id : ClassicalWaveletIds()) {
    const std::size_t k = ClassicalFilter(id).size();
    switch (id.family) {
      case WaveletFamily::kHaar: EXPECT_EQ(k, 2u); break;
      case WaveletFamily::kDaubechies:
      case WaveletFamily::kSymlet:
        EXPECT_EQ(k, 2u * static_cast<std::size_t>(id.order)) << ShortName(id);
        break;
      case WaveletFamily::kCoiflet:
        EXPECT_EQ(k, 6u * static_cast<std::size_t>(id.order)) << ShortName(id);
        break;
    }
  }
  EXPECT_EQ(ClassicalFilter({WaveletFamily::kCoiflet, 5}).size(), 30u);
}

TEST(ClassicalFilterTest, DatabaseHasTwentyFourValidatedEntries) {
  ASSERT_EQ(ClassicalWaveletIds().size(), 24u);
  for (const auto& id : ClassicalWaveletIds()) {
    const auto r = ValidateOrthonormal(ClassicalFilter(id).coeffs(), 1e-8);
    EXPECT_TRUE(r.ok) << ShortName(id) << " sum " << r.sum_error << " norm "
                      << r.norm_error << " shift " << r.max_shift_inner;
  }
}

TEST(ClassicalFilterTest, UnknownCombinationsThrow) {
  EXPECT_THROW(ClassicalFilter({WaveletFamily::kHaar, 2}), LookupError);
  EXPECT_THROW(ClassicalFilter({WaveletFamily::kDaubechies, 1}), LookupError);
  EXPECT_THROW(ClassicalFilter({WaveletFamily::kDaubechies, 11}), LookupError);
  EXPECT_THROW(ClassicalFilter({WaveletFamily::kSymlet, 1}), LookupError);
  EXPECT_THROW(ClassicalFilter({WaveletFamily::kCoiflet, 6}), LookupError);
  EXPECT_FALSE(IsValid({WaveletFamily::kCoiflet, 0}));
}

TEST(ClassicalNameTest, RoundTripsEveryEntry) {
  for (const auto& id : ClassicalWaveletIds()) {
    EXPECT_EQ(ParseWaveletName(ShortName(id)), id);
  }
  EXPECT_EQ(ShortName({WaveletFamily::kSymlet, 5}), "sym5");
  EXPECT_EQ(ParseWaveletName("db1"), (ClassicalWaveletId{WaveletFamily::kHaar, 1}));
}

TEST(ClassicalNameTest, RejectsGarbage) {
  for (const char* bad : {"", "db", "db0", "db11", "sym", "coif6", "dbx", "db2x",
                          "mexh"}) {
    EXPECT_THROW(ParseWaveletName(bad), LookupError) << bad;
  }
}

}  // namespace
}  // namespace wavelearn
