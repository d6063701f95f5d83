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

#include <fstream>
#include <random>

#include "carbon/barcode.hpp"
#include "carbon/error.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

namespace carbon {
namespace {

ErrorCode parse_error(std::string_view raw) {
  try {
    parse_barcode(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << raw;
  return ErrorCode::NotFound;
}

std::string random_digits(std::mt19937_64& rng, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
  return s;
}

Product product(std::string body12, std::string category, double kg) {
  body12 += static_cast<char>('0' + oracle::gs1_check(body12));
  return Product{parse_barcode(body12), "item " + body12, std::move(category), kg};
}

TEST(CheckDigit, KnownValues) {
  EXPECT_EQ(check_digit("000000000000"), 0);
  EXPECT_EQ(check_digit("400638133393"), 1);
  EXPECT_EQ(check_digit("003600029145"), 2);
  EXPECT_THROW(check_digit("40063813339"), Error);
  EXPECT_THROW(check_digit("40063813339x"), Error);
}

TEST(ParseBarcode, Examples) {
  EXPECT_EQ(parse_barcode("4006381333931").digits(), "4006381333931");
  EXPECT_EQ(parse_error("4006381333932"), ErrorCode::ChecksumMismatch);
  EXPECT_EQ(parse_barcode("  036000291452 ").digits(), "0036000291452");
  EXPECT_EQ(parse_error("96385074"), ErrorCode::BadLength);
  EXPECT_EQ(parse_error(""), ErrorCode::BadLength);
  EXPECT_EQ(parse_error("40063813339a1"), ErrorCode::NonDigitInput);
  EXPECT_EQ(parse_error("4006381 333931"), ErrorCode::NonDigitInput);
}

TEST(BarcodeProperty, CheckDigitMatchesOracleAndValidates) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const std::string body = random_digits(rng, 12);
    const int d = check_digit(body);
    EXPECT_EQ(d, oracle::gs1_check(body)) << body;
    const std::string code = body + static_cast<char>('0' + d);
    EXPECT_TRUE(validate_ean13(code));
    const Barcode b = parse_barcode(code);
    EXPECT_EQ(parse_barcode(b.print()), b);
  }
}

TEST(BarcodeProperty, EverySingleDigitChangeIsDetected) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    std::string code = random_digits(rng, 12);
    code += static_cast<char>('0' + check_digit(code));
    for (std::size_t pos = 0; pos < code.size(); ++pos) {
      for (char c = '0'; c <= '9'; ++c) {
        if (c == code[pos]) continue;
        std::string flipped = code;
        flipped[pos] = c;
        EXPECT_FALSE(validate_ean13(flipped)) << code << " -> " << flipped;
      }
    }
  }
}

TEST(Catalog, InsertLookupAndErrors) {
  Catalog c;
  const Product p = product("400638133393", "milk", 1.0);
  c.insert(p);
  EXPECT_EQ(c.lookup(p.barcode), p);
  c.insert(product("400638133394", " Milk ", 2.0));
  EXPECT_EQ(c.in_category("milk").size(), 2u);
  EXPECT_THROW(c.insert(p), Error);
  try {
    c.lookup(parse_barcode("0000000000000"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ProductNotFound);
  }
}

TEST(Catalog, CategoryIndexPartitionsProducts) {
  Catalog c;
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const std::string body = random_digits(rng, 12);
    if (c.find(parse_barcode(body + static_cast<char>('0' + oracle::gs1_check(body))))) continue;
    c.insert(product(body, "c" + std::to_string(rng() % 5), 1.0));
  }
  std::size_t total = 0;
  for (int k = 0; k < 5; ++k) {
    const auto& group = c.in_category("c" + std::to_string(k));
    total += group.size();
    for (std::size_t j = 0; j < group.size(); ++j) {
      EXPECT_EQ(group[j].category, "c" + std::to_string(k));
      if (j > 0) EXPECT_LT(group[j - 1].barcode, group[j].barcode);
    }
  }
  EXPECT_EQ(total, c.size());
}

TEST(Catalog, DiskRoundTrip) {
  testing_support::TempDir dir;
  const auto original = load_catalog_file(CARBON_DATA_DIR "/catalog.csv");
  const auto path = (dir / "catalog.csv").string();
  {
    std::ofstream out(path);
    out << to_csv(original);
  }
  const auto reloaded = load_catalog_file(path);
  EXPECT_EQ(reloaded.products(), original.products());
}

TEST(Catalog, LoadRejectsBadRows) {
  const std::string h = "barcode,name,category,footprint_kg\n";
  EXPECT_THROW(load_catalog(h + "4006381333932,x,milk,1\n"), Error);
  EXPECT_THROW(load_catalog(h + "4006381333931,x,milk,-1\n"), Error);
  EXPECT_THROW(load_catalog(h + "4006381333931,x,milk\n"), Error);
  EXPECT_THROW(load_catalog(h + "4006381333931,x,milk,1\n4006381333931,y,milk,2\n"), Error);
}

TEST(Alternatives, Examples) {
  Catalog c;
  const double kgs[] = {0.5, 1, 2, 3, 4, 5};
  std::vector<Product> ps;
  for (int i = 0; i < 6; ++i) {
    ps.push_back(product("50000000000" + std::to_string(i), "snacks", kgs[i]));
    c.insert(ps.back());
  }
  c.insert(product("600000000000", "other", 0.1));

  EXPECT_TRUE(alternatives(c, ps[0]).empty());
  const auto three = alternatives(c, ps[3]);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0], ps[0]);
  EXPECT_EQ(three[1], ps[1]);
  EXPECT_EQ(three[2], ps[2]);

  const Product top = product("700000000000", "snacks", 9.0);
  c.insert(top);
  const auto four = alternatives(c, top);
  ASSERT_EQ(four.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(four[static_cast<std::size_t>(i)], ps[static_cast<std::size_t>(i)]);
}

TEST(AlternativesProperty, MatchesSelectionOracle) {
  std::mt19937_64 rng(24);
  for (int draw = 0; draw < 300; ++draw) {
    Catalog c;
    std::vector<oracle::Candidate> pool;
    const int n = 1 + static_cast<int>(rng() % 100);
    for (int i = 0; i < n; ++i) {
      const std::string body = random_digits(rng, 12);
      const std::string code = body + static_cast<char>('0' + oracle::gs1_check(body));
      if (c.find(parse_barcode(code))) continue;
      const double kg = static_cast<double>(rng() % 8) * 0.25;  // ties are common
      const std::string cat = "c" + std::to_string(rng() % 3);
      c.insert(Product{parse_barcode(code), "p", cat, kg});
      pool.push_back({code, cat, kg});
    }
    const auto& item = pool[rng() % pool.size()];
    const auto got = alternatives(c, c.lookup(parse_barcode(item.key)));
    const auto want = oracle::better_alternatives(pool, item.group, item.footprint, 4);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k].barcode.digits(), want[k]);
  }
}

}  // namespace
}  // namespace carbon
