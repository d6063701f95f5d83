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
#include <optional>
#include <string>
#include <string_view>

namespace carbon {

/// Plain base-10 decimal: value = units / 10^scale. Used where rounding has
/// to be exact (tariffs, bill totals, kWh).
struct Decimal {
  std::int64_t units = 0;
  int scale = 0;

  double to_double() const noexcept;
  std::string to_string() const;
  bool is_negative() const noexcept { return units < 0; }
  bool is_zero() const noexcept { return units == 0; }

  static Decimal from_int(std::int64_t v) noexcept { return Decimal{v, 0}; }

  friend bool operator==(const Decimal& a, const Decimal& b) noexcept;
};

/// Accepts `-?[0-9]+(\.[0-9]+)?` only: no exponent, no '+', no separators.
/// Returns nullopt on anything else or on overflow (more than 18 significant
/// digits).
std::optional<Decimal> parse_decimal(std::string_view text) noexcept;

/// Same grammar as parse_decimal, but yields the correctly rounded double.
std::optional<double> parse_plain_double(std::string_view text) noexcept;

/// numerator / denominator rounded half-up (away from zero on .5) to
/// `scale` places, computed exactly. Denominator must be non-zero.
Decimal divide_half_up(const Decimal& numerator, const Decimal& denominator, int scale);

}  // namespace carbon
