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

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "carbon/append_log.hpp"
#include "carbon/time.hpp"

namespace carbon {

/// kgCO2e as a fixed-point count of micro-kilograms. Integer addition keeps
/// ledger sums exact and independent of grouping.
class CarbonMass {
 public:
  constexpr CarbonMass() = default;
  static constexpr CarbonMass from_micro(std::int64_t micro) { return CarbonMass(micro); }
  /// Rounds to the nearest micro-kg (half away from zero).
  static CarbonMass from_kg(double kg);

  constexpr std::int64_t micro() const noexcept { return micro_; }
  double kg() const noexcept { return static_cast<double>(micro_) / 1e6; }

  constexpr CarbonMass& operator+=(CarbonMass o) noexcept {
    micro_ += o.micro_;
    return *this;
  }
  friend constexpr CarbonMass operator+(CarbonMass a, CarbonMass b) noexcept { return a += b; }
  friend constexpr CarbonMass operator*(std::int64_t n, CarbonMass m) noexcept { return CarbonMass(n * m.micro_); }
  friend constexpr auto operator<=>(CarbonMass, CarbonMass) = default;

 private:
  constexpr explicit CarbonMass(std::int64_t micro) : micro_(micro) {}
  std::int64_t micro_ = 0;
};

enum class EventSource { trip, meal, electricity, purchase };

inline constexpr EventSource kAllSources[] = {EventSource::trip, EventSource::meal, EventSource::electricity,
                                              EventSource::purchase};

std::string_view to_string(EventSource s) noexcept;
std::optional<EventSource> parse_source(std::string_view s) noexcept;

struct FootprintEvent {
  std::string event_id;
  std::string user_id;
  EventSource source = EventSource::trip;
  CarbonMass kg_co2e;
  Instant occurred_at{};
  std::string detail;
};

bool operator==(const FootprintEvent& a, const FootprintEvent& b) noexcept;

/// One JSON object per line: {event_id, user_id, source, kg_co2e,
/// occurred_at, detail}.
std::string to_json_line(const FootprintEvent& e);
FootprintEvent event_from_json_line(std::string_view line);

/// Random RFC 4122 version-4 identifier.
std::string make_uuid();

struct PeriodTotal {
  CarbonMass total;
  bool empty = true;  // the user has no events in the window
};

/// Append-only event store. With a log path every append is written and
/// fsync'ed before it becomes visible; the in-memory index is rebuilt from
/// the log on open.
class Ledger {
 public:
  /// In-memory ledger (tests, tools).
  Ledger();
  ~Ledger();
  Ledger(const Ledger&) = delete;
  Ledger& operator=(const Ledger&) = delete;

  /// Opens (creating if needed) a JSON-lines log and replays it. A corrupt
  /// final line is truncated; corruption earlier in the file throws
  /// CorruptLog.
  static std::unique_ptr<Ledger> open(const std::filesystem::path& log_path, RecoveryReport* report = nullptr);

  /// Throws InvalidEvent or DuplicateEventId; the store is unchanged on error.
  void append(FootprintEvent event);

  PeriodTotal user_total(std::string_view user_id, const Window& window) const;
  PeriodTotal user_total(std::string_view user_id, const Period& period) const {
    return user_total(user_id, period.window());
  }
  std::map<EventSource, CarbonMass> source_totals(std::string_view user_id, const Window& window) const;

  /// Events of one user ordered by (occurred_at, event_id).
  std::vector<FootprintEvent> events_for(std::string_view user_id) const;
  std::vector<FootprintEvent> all_events() const;
  bool contains(std::string_view event_id) const;
  std::size_t size() const;

 private:
  void validate_locked(const FootprintEvent& e) const;
  void index_locked(FootprintEvent e);

  mutable std::shared_mutex mutex_;
  std::vector<FootprintEvent> events_;
  std::set<std::string, std::less<>> ids_;
  // user -> indices into events_, sorted by (occurred_at, event_id)
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_user_;
  std::unique_ptr<AppendLog> log_;
};

}  // namespace carbon
