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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carbon {

enum class FactorCategory { travel, food_ingredient, electricity, product };
enum class FactorUnit { km, kg, kWh, item };

std::string_view to_string(FactorCategory c) noexcept;
std::string_view to_string(FactorUnit u) noexcept;
std::optional<FactorCategory> parse_category(std::string_view s) noexcept;
std::optional<FactorUnit> parse_unit(std::string_view s) noexcept;

/// Lowercases and rejects empty or whitespace-containing variants.
std::string normalize_variant(std::string_view raw);

struct FactorKey {
  FactorCategory category = FactorCategory::travel;
  std::string variant;
  FactorUnit unit = FactorUnit::km;
};

struct EmissionFactor {
  FactorKey key;
  double kg_co2e_per_unit = 0.0;
  std::string source_note;
};

bool operator==(const EmissionFactor& a, const EmissionFactor& b) noexcept;

/// Emission factors keyed by (category, variant). Every mutation batch bumps
/// `version` by exactly one; a freshly loaded registry is version 1.
class FactorRegistry {
 public:
  using Key = std::pair<FactorCategory, std::string>;

  FactorRegistry() = default;

  const EmissionFactor& lookup(FactorCategory category, std::string_view variant) const;
  const EmissionFactor* find(FactorCategory category, std::string_view variant) const;

  /// Inserts or replaces one factor; increments version.
  void upsert(EmissionFactor factor);
  /// Applies all factors as one batch (one version step). Validation happens
  /// before any change is made.
  void upsert_batch(std::vector<EmissionFactor> factors);

  /// Canonical order: category (enum order), then variant.
  std::vector<EmissionFactor> list() const;
  std::vector<EmissionFactor> list(FactorCategory category) const;

  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t version() const noexcept { return version_; }

 private:
  friend FactorRegistry load_factors(std::string_view csv_text);

  std::map<Key, EmissionFactor> entries_;
  std::uint64_t version_ = 0;
};

/// Parses `category,variant,unit,kg_co2e_per_unit,source_note`.
FactorRegistry load_factors(std::string_view csv_text);
FactorRegistry load_factors_file(const std::string& path);

/// Copying form of FactorRegistry::upsert.
FactorRegistry upsert_factor(FactorRegistry registry, EmissionFactor factor);

/// Serializes in canonical order with the same header load_factors expects.
std::string to_csv(const FactorRegistry& registry);

/// Throws InvalidFactor if the value is negative or non-finite, or the
/// variant fails normalization.
void validate_factor(const EmissionFactor& factor);

std::string read_text_file(const std::string& path);

}  // namespace carbon
