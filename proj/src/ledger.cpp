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

#include "carbon/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

#include <nlohmann/json.hpp>

#include "carbon/error.hpp"

namespace carbon {
namespace {

using nlohmann::json;

}  // namespace

CarbonMass CarbonMass::from_kg(double kg) {
  if (!std::isfinite(kg)) throw Error(ErrorCode::InvalidEvent, "non-finite mass");
  return CarbonMass(std::llround(kg * 1e6));
}

std::string_view to_string(EventSource s) noexcept {
  switch (s) {
    case EventSource::trip: return "trip";
    case EventSource::meal: return "meal";
    case EventSource::electricity: return "electricity";
    case EventSource::purchase: return "purchase";
  }
  return "?";
}

std::optional<EventSource> parse_source(std::string_view s) noexcept {
  for (auto src : kAllSources) {
    if (to_string(src) == s) return src;
  }
  return std::nullopt;
}

bool operator==(const FootprintEvent& a, const FootprintEvent& b) noexcept {
  return a.event_id == b.event_id && a.user_id == b.user_id && a.source == b.source && a.kg_co2e == b.kg_co2e &&
         a.occurred_at == b.occurred_at && a.detail == b.detail;
}

std::string to_json_line(const FootprintEvent& e) {
  json j = {{"event_id", e.event_id},
            {"user_id", e.user_id},
            {"source", std::string(to_string(e.source))},
            {"kg_co2e", e.kg_co2e.kg()},
            {"occurred_at", format_rfc3339(e.occurred_at)},
            {"detail", e.detail}};
  return j.dump();
}

FootprintEvent event_from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::CorruptLog, std::string("unparseable event: ") + e.what());
  }
  try {
    FootprintEvent e;
    e.event_id = j.at("event_id").get<std::string>();
    e.user_id = j.at("user_id").get<std::string>();
    const auto source = parse_source(j.at("source").get<std::string>());
    if (!source) throw Error(ErrorCode::CorruptLog, "unknown event source");
    e.source = *source;
    e.kg_co2e = CarbonMass::from_kg(j.at("kg_co2e").get<double>());
    const auto at = parse_rfc3339(j.at("occurred_at").get<std::string>());
    if (!at) throw Error(ErrorCode::CorruptLog, "bad occurred_at");
    e.occurred_at = *at;
    e.detail = j.value("detail", std::string{});
    return e;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::CorruptLog, std::string("malformed event: ") + ex.what());
  }
}

std::string make_uuid() {
  thread_local std::mt19937_64 rng{std::random_device{}()};
  std::uniform_int_distribution<unsigned> byte(0, 255);
  unsigned char b[16];
  for (auto& x : b) x = static_cast<unsigned char>(byte(rng));
  b[6] = static_cast<unsigned char>((b[6] & 0x0F) | 0x40);
  b[8] = static_cast<unsigned char>((b[8] & 0x3F) | 0x80);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < 16; ++i) {
    if (i == 4 || i == 6 || i == 8 || i == 10) out.push_back('-');
    out.push_back(hex[b[i] >> 4]);
    out.push_back(hex[b[i] & 0x0F]);
  }
  return out;
}

Ledger::Ledger() = default;

Ledger::~Ledger() = default;

std::unique_ptr<Ledger> Ledger::open(const std::filesystem::path& log_path, RecoveryReport* report) {
  auto ledger = std::make_unique<Ledger>();
  Ledger* raw = ledger.get();
  ledger->log_ = AppendLog::open(
      log_path,
      [raw](std::string_view line) {
        auto e = event_from_json_line(line);
        raw->validate_locked(e);
        raw->index_locked(std::move(e));
      },
      report);
  return ledger;
}

void Ledger::validate_locked(const FootprintEvent& e) const {
  if (e.event_id.empty() || e.user_id.empty()) throw Error(ErrorCode::InvalidEvent, "event_id and user_id required");
  if (e.kg_co2e.micro() < 0) throw Error(ErrorCode::InvalidEvent, "kg_co2e must be non-negative", e.event_id);
  if (ids_.count(e.event_id) != 0) throw Error(ErrorCode::DuplicateEventId, "duplicate event id", e.event_id);
}

void Ledger::index_locked(FootprintEvent e) {
  const std::size_t idx = events_.size();
  ids_.insert(e.event_id);
  auto& user_events = by_user_[e.user_id];
  events_.push_back(std::move(e));
  auto pos = std::upper_bound(user_events.begin(), user_events.end(), idx, [&](std::size_t a, std::size_t b) {
    const auto& ea = events_[a];
    const auto& eb = events_[b];
    if (ea.occurred_at != eb.occurred_at) return ea.occurred_at < eb.occurred_at;
    return ea.event_id < eb.event_id;
  });
  user_events.insert(pos, idx);
}

void Ledger::append(FootprintEvent event) {
  std::unique_lock lock(mutex_);
  validate_locked(event);
  if (log_) log_->append(to_json_line(event));
  index_locked(std::move(event));
}

PeriodTotal Ledger::user_total(std::string_view user_id, const Window& window) const {
  std::shared_lock lock(mutex_);
  PeriodTotal out;
  auto it = by_user_.find(user_id);
  if (it == by_user_.end()) return out;
  for (std::size_t idx : it->second) {
    const auto& e = events_[idx];
    if (e.occurred_at >= window.end) break;
    if (window.contains(e.occurred_at)) {
      out.total += e.kg_co2e;
      out.empty = false;
    }
  }
  return out;
}

std::map<EventSource, CarbonMass> Ledger::source_totals(std::string_view user_id, const Window& window) const {
  std::shared_lock lock(mutex_);
  std::map<EventSource, CarbonMass> out;
  for (auto s : kAllSources) out[s] = CarbonMass{};
  auto it = by_user_.find(user_id);
  if (it == by_user_.end()) return out;
  for (std::size_t idx : it->second) {
    const auto& e = events_[idx];
    if (window.contains(e.occurred_at)) out[e.source] += e.kg_co2e;
  }
  return out;
}

std::vector<FootprintEvent> Ledger::events_for(std::string_view user_id) const {
  std::shared_lock lock(mutex_);
  std::vector<FootprintEvent> out;
  auto it = by_user_.find(user_id);
  if (it == by_user_.end()) return out;
  for (std::size_t idx : it->second) out.push_back(events_[idx]);
  return out;
}

std::vector<FootprintEvent> Ledger::all_events() const {
  std::shared_lock lock(mutex_);
  return events_;
}

bool Ledger::contains(std::string_view event_id) const {
  std::shared_lock lock(mutex_);
  return ids_.count(event_id) != 0;
}

std::size_t Ledger::size() const {
  std::shared_lock lock(mutex_);
  return events_.size();
}

}  // namespace carbon
