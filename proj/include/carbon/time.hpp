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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace carbon {

/// UTC instant at one-second resolution.
using Instant = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

/// "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(Instant t);

/// Accepts "YYYY-MM-DDTHH:MM:SS" followed by an optional fraction (truncated)
/// and either 'Z' or a +hh:mm / -hh:mm offset. Lowercase 't'/'z' allowed.
std::optional<Instant> parse_rfc3339(std::string_view text);

std::string format_date(Date d);
std::optional<Date> parse_date(std::string_view text);

Instant now_utc();

enum class PeriodKind { weekly, monthly };

std::string_view to_string(PeriodKind k) noexcept;
std::optional<PeriodKind> parse_period_kind(std::string_view s) noexcept;

/// Half-open UTC interval [start, end).
struct Window {
  Instant start;
  Instant end;

  bool contains(Instant t) const noexcept { return start <= t && t < end; }
};

/// A weekly period is the ISO week (Monday 00:00 UTC onward) containing the
/// anchor date; a monthly period is the calendar month containing it.
struct Period {
  PeriodKind kind = PeriodKind::weekly;
  Date anchor{};

  Window window() const;
  /// The period immediately after this one.
  Period next() const;
};

}  // namespace carbon
