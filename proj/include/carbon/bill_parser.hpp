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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carbon/decimal.hpp"
#include "carbon/factor_registry.hpp"

namespace carbon {

struct BillText {
  std::vector<std::string> lines;
  std::string region;

  /// Splits on LF (CR stripped).
  static BillText from_text(std::string_view text, std::string_view region);
};

struct BillReading {
  Decimal total_cost;
  Decimal tariff_per_kwh;
  Decimal kwh;  // 3 dp
  double footprint_kg = 0.0;
  std::string region;
};

/// region -> price per kWh (strictly positive). CSV `region,tariff_per_kwh`.
class TariffTable {
 public:
  void insert(std::string region, Decimal tariff);
  const Decimal& lookup(std::string_view region) const;
  std::size_t size() const noexcept { return tariffs_.size(); }

 private:
  std::map<std::string, Decimal, std::less<>> tariffs_;
};

TariffTable load_tariffs(std::string_view csv_text);
TariffTable load_tariffs_file(const std::string& path);

/// Parses one line as `<label>[:] [currency] <amount>`; nullopt if it does
/// not match.
std::optional<Decimal> match_total_line(std::string_view line);

/// Amount on the last line that matches the total grammar. Throws
/// TotalNotFound.
Decimal extract_total(const BillText& text);

/// cost / tariff, rounded half-up to 3 decimal places. Throws RegionUnknown.
Decimal cost_to_kwh(const Decimal& total_cost, std::string_view region, const TariffTable& tariffs);
Decimal cost_to_kwh(const Decimal& total_cost, const Decimal& tariff);

BillReading bill_footprint(const BillText& text, const TariffTable& tariffs, const FactorRegistry& registry);

}  // namespace carbon
