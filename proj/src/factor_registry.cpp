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

#include "carbon/factor_registry.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "carbon/csv.hpp"
#include "carbon/decimal.hpp"
#include "carbon/error.hpp"

namespace carbon {
namespace {

const std::vector<std::string> kHeader = {"category", "variant", "unit", "kg_co2e_per_unit", "source_note"};

std::string key_string(FactorCategory c, std::string_view variant) {
  return std::string(to_string(c)) + "/" + std::string(variant);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view to_string(FactorCategory c) noexcept {
  switch (c) {
    case FactorCategory::travel: return "travel";
    case FactorCategory::food_ingredient: return "food_ingredient";
    case FactorCategory::electricity: return "electricity";
    case FactorCategory::product: return "product";
  }
  return "?";
}

std::string_view to_string(FactorUnit u) noexcept {
  switch (u) {
    case FactorUnit::km: return "km";
    case FactorUnit::kg: return "kg";
    case FactorUnit::kWh: return "kWh";
    case FactorUnit::item: return "item";
  }
  return "?";
}

std::optional<FactorCategory> parse_category(std::string_view s) noexcept {
  if (s == "travel") return FactorCategory::travel;
  if (s == "food_ingredient") return FactorCategory::food_ingredient;
  if (s == "electricity") return FactorCategory::electricity;
  if (s == "product") return FactorCategory::product;
  return std::nullopt;
}

std::optional<FactorUnit> parse_unit(std::string_view s) noexcept {
  if (s == "km") return FactorUnit::km;
  if (s == "kg") return FactorUnit::kg;
  if (s == "kWh" || s == "kwh") return FactorUnit::kWh;
  if (s == "item") return FactorUnit::item;
  return std::nullopt;
}

std::string normalize_variant(std::string_view raw) {
  std::string v = csv::to_lower(csv::trim(raw));
  if (v.empty()) throw Error(ErrorCode::InvalidFactor, "empty variant");
  for (unsigned char c : v) {
    if (std::isspace(c)) throw Error(ErrorCode::InvalidFactor, "variant contains whitespace", v);
  }
  return v;
}

bool operator==(const EmissionFactor& a, const EmissionFactor& b) noexcept {
  return a.key.category == b.key.category && a.key.variant == b.key.variant && a.key.unit == b.key.unit &&
         a.kg_co2e_per_unit == b.kg_co2e_per_unit && a.source_note == b.source_note;
}

void validate_factor(const EmissionFactor& factor) {
  if (!std::isfinite(factor.kg_co2e_per_unit) || factor.kg_co2e_per_unit < 0.0) {
    throw Error(ErrorCode::InvalidFactor, "factor must be finite and non-negative",
                key_string(factor.key.category, factor.key.variant));
  }
  normalize_variant(factor.key.variant);
}

const EmissionFactor* FactorRegistry::find(FactorCategory category, std::string_view variant) const {
  auto it = entries_.find(Key{category, csv::to_lower(csv::trim(variant))});
  return it == entries_.end() ? nullptr : &it->second;
}

const EmissionFactor& FactorRegistry::lookup(FactorCategory category, std::string_view variant) const {
  if (const auto* f = find(category, variant)) return *f;
  throw Error(ErrorCode::FactorNotFound, "no emission factor for " + key_string(category, variant),
              key_string(category, csv::to_lower(variant)));
}

void FactorRegistry::upsert(EmissionFactor factor) {
  std::vector<EmissionFactor> batch;
  batch.push_back(std::move(factor));
  upsert_batch(std::move(batch));
}

void FactorRegistry::upsert_batch(std::vector<EmissionFactor> factors) {
  for (auto& f : factors) {
    validate_factor(f);
    f.key.variant = normalize_variant(f.key.variant);
  }
  for (auto& f : factors) {
    Key k{f.key.category, f.key.variant};
    entries_.insert_or_assign(std::move(k), std::move(f));
  }
  ++version_;
}

std::vector<EmissionFactor> FactorRegistry::list() const {
  std::vector<EmissionFactor> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(v);
  return out;
}

std::vector<EmissionFactor> FactorRegistry::list(FactorCategory category) const {
  std::vector<EmissionFactor> out;
  for (const auto& [k, v] : entries_) {
    if (k.first == category) out.push_back(v);
  }
  return out;
}

FactorRegistry load_factors(std::string_view csv_text) {
  auto rows = csv::parse(csv_text);
  csv::expect_header(rows, kHeader);

  FactorRegistry reg;
  for (const auto& row : rows) {
    const std::string line = std::to_string(row.line_no);
    if (row.fields.size() != kHeader.size()) {
      throw Error(ErrorCode::MalformedRow, "expected 5 columns at line " + line, line);
    }
    const std::string category_text = csv::trim(row.fields[0]);
    const auto category = parse_category(category_text);
    if (!category) throw Error(ErrorCode::UnknownCategory, "unknown category '" + category_text + "'", line);
    const std::string unit_text = csv::trim(row.fields[2]);
    const auto unit = parse_unit(unit_text);
    if (!unit) throw Error(ErrorCode::UnknownUnit, "unknown unit '" + unit_text + "'", line);
    const auto value = parse_plain_double(csv::trim(row.fields[3]));
    if (!value) throw Error(ErrorCode::MalformedRow, "unparseable decimal at line " + line, line);

    EmissionFactor f{FactorKey{*category, csv::trim(row.fields[1]), *unit}, *value, csv::trim(row.fields[4])};
    if (f.key.variant.empty()) throw Error(ErrorCode::MalformedRow, "empty variant at line " + line, line);
    validate_factor(f);
    f.key.variant = normalize_variant(f.key.variant);

    FactorRegistry::Key k{f.key.category, f.key.variant};
    if (reg.entries_.count(k) != 0) {
      throw Error(ErrorCode::DuplicateKey, "duplicate factor " + key_string(k.first, k.second) + " at line " + line,
                  key_string(k.first, k.second));
    }
    reg.entries_.emplace(std::move(k), std::move(f));
  }
  reg.version_ = 1;
  return reg;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::NotFound, "cannot read " + path, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FactorRegistry load_factors_file(const std::string& path) { return load_factors(read_text_file(path)); }

FactorRegistry upsert_factor(FactorRegistry registry, EmissionFactor factor) {
  registry.upsert(std::move(factor));
  return registry;
}

std::string to_csv(const FactorRegistry& registry) {
  std::string out = "category,variant,unit,kg_co2e_per_unit,source_note\n";
  for (const auto& f : registry.list()) {
    out += to_string(f.key.category);
    out += ',';
    out += csv::escape(f.key.variant);
    out += ',';
    out += to_string(f.key.unit);
    out += ',';
    out += format_double(f.kg_co2e_per_unit);
    out += ',';
    out += csv::escape(f.source_note);
    out += '\n';
  }
  return out;
}

}  // namespace carbon
