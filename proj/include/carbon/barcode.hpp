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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace carbon {

/// A validated EAN-13 code. UPC-A input is stored with a leading zero.
class Barcode {
 public:
  /// Trusted construction; `digits` must already be a valid EAN-13.
  static Barcode from_valid(std::string digits) { return Barcode(std::move(digits)); }

  const std::string& digits() const noexcept { return digits_; }
  std::string print() const { return digits_; }

  friend auto operator<=>(const Barcode&, const Barcode&) = default;

 private:
  explicit Barcode(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

/// GS1 mod-10 check digit of a 12-digit body (weights 1,3,1,3,... from the
/// left). Throws NonDigitInput / BadLength.
int check_digit(std::string_view first12);

/// True iff `code` is 13 digits with a matching check digit.
bool validate_ean13(std::string_view code) noexcept;

/// Trims whitespace, left-pads 12-digit UPC-A with '0', and verifies the
/// checksum. Throws BadLength, NonDigitInput or ChecksumMismatch.
Barcode parse_barcode(std::string_view raw);

struct Product {
  Barcode barcode;
  std::string name;
  std::string category;
  double footprint_kg = 0.0;
};

bool operator==(const Product& a, const Product& b) noexcept;

class Catalog {
 public:
  Catalog() = default;

  /// Throws DuplicateKey if the barcode is already present.
  void insert(Product product);

  const Product& lookup(const Barcode& code) const;
  const Product* find(const Barcode& code) const;

  /// Products sharing `category`, in barcode order.
  const std::vector<Product>& in_category(std::string_view category) const;
  std::vector<Product> products() const;
  std::size_t size() const noexcept { return products_.size(); }

 private:
  std::map<Barcode, Product> products_;
  std::map<std::string, std::vector<Product>, std::less<>> by_category_;
};

/// CSV `barcode,name,category,footprint_kg`.
Catalog load_catalog(std::string_view csv_text);
Catalog load_catalog_file(const std::string& path);
std::string to_csv(const Catalog& catalog);

/// Up to `limit` products in the item's category with strictly lower
/// footprint, ascending by footprint then barcode digits.
std::vector<Product> alternatives(const Catalog& catalog, const Product& item, std::size_t limit = 4);

}  // namespace carbon
