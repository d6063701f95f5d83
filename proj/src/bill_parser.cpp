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

#include "carbon/bill_parser.hpp"

#include <array>
#include <cctype>

#include "carbon/csv.hpp"
#include "carbon/error.hpp"

namespace carbon {
namespace {

// Longest first so "total amount due" is not consumed as "total".
constexpr std::array<std::string_view, 6> kLabels = {"total amount due", "total amount", "grand total",
                                                     "amount due",       "net amount",   "total"};

// Tried in order; "rs." before "rs".
constexpr std::array<std::string_view, 8> kCurrencies = {"\xE2\x82\xB9", "$", "\xE2\x82\xAC", "\xC2\xA3",
                                                         "\xC2\xA5",     "rs.", "rs",         "inr"};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// ASCII-lowercase, trimmed, internal whitespace runs collapsed to one space.
std::string canonical_line(std::string_view line) {
  std::string out;
  bool pending_space = false;
  for (char c : line) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
}

std::optional<Decimal> parse_amount(std::string_view s, std::size_t pos) {
  std::string digits;
  if (pos >= s.size() || !is_digit(s[pos])) return std::nullopt;
  while (pos < s.size()) {
    if (is_digit(s[pos])) {
      digits.push_back(s[pos++]);
    } else if (s[pos] == ',' && pos + 1 < s.size() && is_digit(s[pos + 1])) {
      ++pos;
    } else {
      break;
    }
  }
  if (pos < s.size() && s[pos] == '.') {
    if (pos + 2 >= s.size() || !is_digit(s[pos + 1]) || !is_digit(s[pos + 2])) return std::nullopt;
    digits.push_back('.');
    digits.push_back(s[pos + 1]);
    digits.push_back(s[pos + 2]);
    pos += 3;
  }
  skip_spaces(s, pos);
  if (pos != s.size()) return std::nullopt;
  return parse_decimal(digits);
}

}  // namespace

BillText BillText::from_text(std::string_view text, std::string_view region) {
  BillText bill;
  bill.region = csv::to_lower(csv::trim(region));
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bill.lines.emplace_back(line);
    pos = end + 1;
  }
  return bill;
}

void TariffTable::insert(std::string region, Decimal tariff) {
  region = csv::to_lower(csv::trim(region));
  if (region.empty()) throw Error(ErrorCode::MalformedRow, "empty region");
  if (tariff.units <= 0) throw Error(ErrorCode::InvalidTariff, "tariff must be positive", region);
  if (tariffs_.count(region) != 0) throw Error(ErrorCode::DuplicateKey, "duplicate region " + region, region);
  tariffs_.emplace(std::move(region), tariff);
}

const Decimal& TariffTable::lookup(std::string_view region) const {
  auto it = tariffs_.find(csv::to_lower(csv::trim(region)));
  if (it == tariffs_.end()) throw Error(ErrorCode::RegionUnknown, "no tariff for region " + std::string(region),
                                        std::string(region));
  return it->second;
}

TariffTable load_tariffs(std::string_view csv_text) {
  auto rows = csv::parse(csv_text);
  csv::expect_header(rows, {"region", "tariff_per_kwh"});
  TariffTable table;
  for (const auto& row : rows) {
    const std::string line = std::to_string(row.line_no);
    if (row.fields.size() != 2) throw Error(ErrorCode::MalformedRow, "expected 2 columns at line " + line, line);
    const auto tariff = parse_decimal(csv::trim(row.fields[1]));
    if (!tariff) throw Error(ErrorCode::MalformedRow, "unparseable decimal at line " + line, line);
    if (csv::trim(row.fields[0]).empty()) throw Error(ErrorCode::MalformedRow, "empty region at line " + line, line);
    table.insert(row.fields[0], *tariff);
  }
  return table;
}

TariffTable load_tariffs_file(const std::string& path) { return load_tariffs(read_text_file(path)); }

std::optional<Decimal> match_total_line(std::string_view raw) {
  const std::string line = canonical_line(raw);
  const std::string_view s = line;
  for (std::string_view label : kLabels) {
    if (s.substr(0, label.size()) != label) continue;
    std::size_t pos = label.size();
    if (pos >= s.size() || (s[pos] != ' ' && s[pos] != ':')) continue;
    skip_spaces(s, pos);
    if (pos < s.size() && s[pos] == ':') ++pos;
    skip_spaces(s, pos);
    for (std::string_view cur : kCurrencies) {
      if (s.substr(pos, cur.size()) == cur) {
        pos += cur.size();
        break;
      }
    }
    skip_spaces(s, pos);
    if (auto amount = parse_amount(s, pos)) return amount;
  }
  return std::nullopt;
}

Decimal extract_total(const BillText& text) {
  for (auto it = text.lines.rbegin(); it != text.lines.rend(); ++it) {
    if (auto amount = match_total_line(*it)) return *amount;
  }
  throw Error(ErrorCode::TotalNotFound, "no total amount line found in bill text");
}

Decimal cost_to_kwh(const Decimal& total_cost, const Decimal& tariff) {
  if (tariff.units <= 0) throw Error(ErrorCode::InvalidTariff, "tariff must be positive");
  if (total_cost.is_negative()) throw Error(ErrorCode::InvalidRequest, "bill total must not be negative");
  return divide_half_up(total_cost, tariff, 3);
}

Decimal cost_to_kwh(const Decimal& total_cost, std::string_view region, const TariffTable& tariffs) {
  return cost_to_kwh(total_cost, tariffs.lookup(region));
}

BillReading bill_footprint(const BillText& text, const TariffTable& tariffs, const FactorRegistry& registry) {
  const std::string region = csv::to_lower(csv::trim(text.region));
  if (region.empty()) throw Error(ErrorCode::RegionUnknown, "bill region is required");
  BillReading reading;
  reading.region = region;
  reading.total_cost = extract_total(text);
  reading.tariff_per_kwh = tariffs.lookup(region);
  reading.kwh = cost_to_kwh(reading.total_cost, reading.tariff_per_kwh);
  const auto& factor = registry.lookup(FactorCategory::electricity, "grid:" + region);
  if (factor.key.unit != FactorUnit::kWh) {
    throw Error(ErrorCode::UnitMismatch, "grid factor must be per kWh", factor.key.variant);
  }
  reading.footprint_kg = reading.kwh.to_double() * factor.kg_co2e_per_unit;
  return reading;
}

}  // namespace carbon
