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

#include <random>

#include "carbon/csv.hpp"
#include "carbon/decimal.hpp"
#include "carbon/error.hpp"

namespace carbon {
namespace {

TEST(Csv, SkipsCommentsAndBlankLines) {
  const auto rows = csv::parse("# note\n\na,b\r\n\"x, y\",\"say \"\"hi\"\"\"\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].line_no, 3u);
  EXPECT_EQ(rows[0].fields, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"x, y", "say \"hi\""}));
}

TEST(Csv, UnterminatedQuoteIsMalformed) {
  try {
    csv::parse("a,\"b\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedRow);
  }
}

TEST(Csv, EscapeRoundTrips) {
  for (std::string field : {"plain", "a,b", "q\"uote", "#lead"}) {
    const auto rows = csv::parse("x," + csv::escape(field) + "\n");
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].fields[1], field);
  }
}

TEST(Decimal, AcceptsOnlyPlainDecimals) {
  EXPECT_EQ(parse_decimal("1450.00"), (Decimal{145000, 2}));
  EXPECT_EQ(parse_decimal("-0.5"), (Decimal{-5, 1}));
  EXPECT_EQ(parse_decimal("7"), Decimal::from_int(7));
  for (const char* bad : {"", "1e3", "+1", "1,000", ".5", "5.", "1.2.3", " 1", "0x10", "1234567890123456789"}) {
    EXPECT_FALSE(parse_decimal(bad).has_value()) << bad;
  }
}

TEST(Decimal, ValueEqualityIgnoresScale) {
  EXPECT_EQ((Decimal{200000, 3}), Decimal::from_int(200));
  EXPECT_NE((Decimal{200001, 3}), Decimal::from_int(200));
}

TEST(Decimal, ToStringKeepsScale) {
  EXPECT_EQ((Decimal{200000, 3}).to_string(), "200.000");
  EXPECT_EQ((Decimal{-5, 3}).to_string(), "-0.005");
  EXPECT_EQ(Decimal::from_int(12).to_string(), "12");
}

TEST(Decimal, DivideHalfUp) {
  EXPECT_EQ(divide_half_up(Decimal::from_int(100), Decimal::from_int(3), 3).to_string(), "33.333");
  EXPECT_EQ(divide_half_up(Decimal::from_int(2), Decimal::from_int(3), 3).to_string(), "0.667");
  EXPECT_EQ(divide_half_up(Decimal{1, 0}, Decimal{8, 0}, 2).to_string(), "0.13");  // 0.125 rounds up
  EXPECT_EQ(divide_half_up(Decimal{-1, 0}, Decimal{8, 0}, 2).to_string(), "-0.13");
}

TEST(Decimal, PlainDoubleMatchesStrtod) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = std::to_string(rng() % 100000) + "." + std::to_string(rng() % 1000);
    EXPECT_EQ(parse_plain_double(text), std::strtod(text.c_str(), nullptr)) << text;
  }
}

}  // namespace
}  // namespace carbon
