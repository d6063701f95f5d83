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

#include "carbon/barcode.hpp"

#include <charconv>
#include <cmath>

#include "carbon/csv.hpp"
#include "carbon/decimal.hpp"
#include "carbon/error.hpp"
#include "carbon/factor_registry.hpp"
#include "carbon/ranking.hpp"

namespace carbon {
namespace {

const std::vector<std::string> kHeader = {"barcode", "name", "category", "footprint_kg"};

bool all_digits(std::string_view s) noexcept {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

int weighted_sum(std::string_view first12) noexcept {
  int sum = 0;
  for (std::size_t i = 0; i < 12; ++i) sum += (first12[i] - '0') * (i % 2 == 0 ? 1 : 3);
  return sum;
}

}  // namespace

int check_digit(std::string_view first12) {
  if (!all_digits(first12)) throw Error(ErrorCode::NonDigitInput, "barcode contains non-digit characters");
  if (first12.size() != 12) throw Error(ErrorCode::BadLength, "check digit needs exactly 12 digits");
  return (10 - weighted_sum(first12) % 10) % 10;
}

bool validate_ean13(std::string_view code) noexcept {
  if (code.size() != 13 || !all_digits(code)) return false;
  return (weighted_sum(code) + (code[12] - '0')) % 10 == 0;
}

Barcode parse_barcode(std::string_view raw) {
  std::string code = csv::trim(raw);
  if (!all_digits(code)) throw Error(ErrorCode::NonDigitInput, "barcode contains non-digit characters", code);
  if (code.size() == 12) {
    code.insert(code.begin(), '0');
  } else if (code.size() != 13) {
    throw Error(ErrorCode::BadLength, "barcode must have 12 or 13 digits", code);
  }
  if (!validate_ean13(code)) throw Error(ErrorCode::ChecksumMismatch, "barcode check digit mismatch", code);
  return Barcode::from_valid(std::move(code));
}

bool operator==(const Product& a, const Product& b) noexcept {
  return a.barcode == b.barcode && a.name == b.name && a.category == b.category && a.footprint_kg == b.footprint_kg;
}

void Catalog::insert(Product product) {
  product.category = csv::to_lower(csv::trim(product.category));
  if (!std::isfinite(product.footprint_kg) || product.footprint_kg < 0.0) {
    throw Error(ErrorCode::InvalidFactor, "product footprint must be finite and non-negative", product.barcode.digits());
  }
  if (products_.count(product.barcode) != 0) {
    throw Error(ErrorCode::DuplicateKey, "duplicate barcode " + product.barcode.digits(), product.barcode.digits());
  }
  auto& bucket = by_category_[product.category];
  auto pos = std::lower_bound(bucket.begin(), bucket.end(), product,
                              [](const Product& a, const Product& b) { return a.barcode < b.barcode; });
  bucket.insert(pos, product);
  products_.emplace(product.barcode, std::move(product));
}

const Product* Catalog::find(const Barcode& code) const {
  auto it = products_.find(code);
  return it == products_.end() ? nullptr : &it->second;
}

const Product& Catalog::lookup(const Barcode& code) const {
  if (const auto* p = find(code)) return *p;
  throw Error(ErrorCode::ProductNotFound, "no product with barcode " + code.digits(), code.digits());
}

const std::vector<Product>& Catalog::in_category(std::string_view category) const {
  static const std::vector<Product> empty;
  auto it = by_category_.find(category);
  return it == by_category_.end() ? empty : it->second;
}

std::vector<Product> Catalog::products() const {
  std::vector<Product> out;
  out.reserve(products_.size());
  for (const auto& [k, p] : products_) out.push_back(p);
  return out;
}

Catalog load_catalog(std::string_view csv_text) {
  auto rows = csv::parse(csv_text);
  csv::expect_header(rows, kHeader);
  Catalog catalog;
  for (const auto& row : rows) {
    const std::string line = std::to_string(row.line_no);
    if (row.fields.size() != kHeader.size()) {
      throw Error(ErrorCode::MalformedRow, "expected 4 columns at line " + line, line);
    }
    Barcode code = [&] {
      try {
        return parse_barcode(row.fields[0]);
      } catch (const Error& e) {
        throw Error(ErrorCode::MalformedRow, std::string(e.what()) + " at line " + line, line);
      }
    }();
    const auto footprint = parse_plain_double(csv::trim(row.fields[3]));
    if (!footprint) throw Error(ErrorCode::MalformedRow, "unparseable decimal at line " + line, line);
    if (*footprint < 0.0) throw Error(ErrorCode::InvalidFactor, "negative footprint at line " + line, line);
    const std::string category = csv::to_lower(csv::trim(row.fields[2]));
    if (category.empty()) throw Error(ErrorCode::MalformedRow, "empty category at line " + line, line);
    catalog.insert(Product{std::move(code), csv::trim(row.fields[1]), category, *footprint});
  }
  return catalog;
}

Catalog load_catalog_file(const std::string& path) { return load_catalog(read_text_file(path)); }

std::string to_csv(const Catalog& catalog) {
  std::string out = "barcode,name,category,footprint_kg\n";
  for (const auto& p : catalog.products()) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p.footprint_kg, std::chars_format::fixed);
    out += p.barcode.digits() + "," + csv::escape(p.name) + "," + csv::escape(p.category) + "," +
           std::string(buf, ptr) + "\n";
  }
  return out;
}

std::vector<Product> alternatives(const Catalog& catalog, const Product& item, std::size_t limit) {
  if (limit == 0) throw Error(ErrorCode::InvalidRequest, "limit must be at least 1");
  const std::string category = csv::to_lower(csv::trim(item.category));
  return rank_lower_alternatives(
      catalog.in_category(category), item.footprint_kg,
      [&](const Product& p) { return p.barcode != item.barcode; }, &Product::footprint_kg,
      [](const Product& p) -> const std::string& { return p.barcode.digits(); }, limit);
}

}  // namespace carbon
