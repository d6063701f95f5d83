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

#include "carbon/decimal.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

#include "carbon/error.hpp"

namespace carbon {
namespace {

__extension__ typedef __int128 i128;

i128 pow10(int n) {
  i128 r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

bool plain_grammar(std::string_view s) noexcept {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++int_digits; }
  if (int_digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '.') return false;
  ++i;
  std::size_t frac_digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++frac_digits; }
  return frac_digits > 0 && i == s.size();
}

}  // namespace

double Decimal::to_double() const noexcept {
  // Going through text gives the correctly rounded double for the decimal.
  double out = 0.0;
  const std::string text = to_string();
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

std::string Decimal::to_string() const {
  const bool neg = units < 0;
  const i128 magnitude = neg ? -static_cast<i128>(units) : static_cast<i128>(units);
  std::string digits = std::to_string(static_cast<unsigned long long>(magnitude));
  if (scale > 0) {
    if (digits.size() <= static_cast<std::size_t>(scale)) {
      digits.insert(0, static_cast<std::size_t>(scale) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale), 1, '.');
  }
  return neg ? "-" + digits : digits;
}

bool operator==(const Decimal& a, const Decimal& b) noexcept {
  const int s = a.scale > b.scale ? a.scale : b.scale;
  return static_cast<i128>(a.units) * pow10(s - a.scale) == static_cast<i128>(b.units) * pow10(s - b.scale);
}

std::optional<Decimal> parse_decimal(std::string_view text) noexcept {
  if (!plain_grammar(text)) return std::nullopt;
  const bool neg = text.front() == '-';
  if (neg) text.remove_prefix(1);
  i128 units = 0;
  int scale = 0;
  bool after_point = false;
  int significant = 0;
  for (char c : text) {
    if (c == '.') {
      after_point = true;
      continue;
    }
    units = units * 10 + (c - '0');
    if (units != 0) ++significant;
    if (after_point) ++scale;
    if (significant > 18) return std::nullopt;
  }
  return Decimal{static_cast<std::int64_t>(neg ? -units : units), scale};
}

std::optional<double> parse_plain_double(std::string_view text) noexcept {
  if (!plain_grammar(text)) return std::nullopt;
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return out;
}

Decimal divide_half_up(const Decimal& numerator, const Decimal& denominator, int scale) {
  if (denominator.units == 0) {
    throw Error(ErrorCode::InvalidRequest, "division by zero");
  }
  i128 n = static_cast<i128>(numerator.units) * pow10(denominator.scale + scale);
  i128 d = static_cast<i128>(denominator.units) * pow10(numerator.scale);
  const bool neg = (n < 0) != (d < 0);
  if (n < 0) n = -n;
  if (d < 0) d = -d;
  i128 q = (2 * n + d) / (2 * d);
  if (q > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorCode::InvalidRequest, "decimal overflow");
  }
  return Decimal{static_cast<std::int64_t>(neg ? -q : q), scale};
}

}  // namespace carbon
