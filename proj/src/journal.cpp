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

#include "carbon/journal.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "carbon/csv.hpp"
#include "carbon/error.hpp"

namespace carbon {
namespace {

using nlohmann::json;

constexpr std::string_view kDetailPrefix = "journal:";

json entry_to_json(const JournalEntry& e) {
  json j = {{"entry_id", e.entry_id},
            {"user_id", e.user_id},
            {"label", e.label},
            {"quantity", e.quantity},
            {"footprint_kg_each", e.footprint_kg_each},
            {"state", std::string(to_string(e.state))},
            {"created_at", format_rfc3339(e.created_at)},
            {"updated_at", format_rfc3339(e.updated_at)}};
  j["barcode"] = e.barcode ? json(e.barcode->digits()) : json(nullptr);
  return j;
}

Instant instant_field(const json& j, const char* key) {
  const auto t = parse_rfc3339(j.at(key).get<std::string>());
  if (!t) throw Error(ErrorCode::CorruptLog, std::string("bad timestamp in journal field ") + key);
  return *t;
}

JournalEntry entry_from_json(const json& j) {
  JournalEntry e;
  e.entry_id = j.at("entry_id").get<std::string>();
  e.user_id = j.at("user_id").get<std::string>();
  e.label = j.at("label").get<std::string>();
  e.quantity = j.at("quantity").get<std::int64_t>();
  e.footprint_kg_each = j.at("footprint_kg_each").get<double>();
  const auto state = j.at("state").get<std::string>();
  if (state != "pending" && state != "purchased") throw Error(ErrorCode::CorruptLog, "bad journal state");
  e.state = state == "pending" ? EntryState::pending : EntryState::purchased;
  e.created_at = instant_field(j, "created_at");
  e.updated_at = instant_field(j, "updated_at");
  if (!j.at("barcode").is_null()) e.barcode = parse_barcode(j.at("barcode").get<std::string>());
  return e;
}

void check_quantity(std::int64_t q) {
  if (q < 1) throw Error(ErrorCode::InvalidQuantity, "quantity must be at least 1", std::to_string(q));
}

void check_footprint(double kg) {
  if (!std::isfinite(kg) || kg < 0.0) {
    throw Error(ErrorCode::InvalidRequest, "footprint_kg_each must be finite and non-negative");
  }
}

}  // namespace

std::string_view to_string(EntryState s) noexcept { return s == EntryState::pending ? "pending" : "purchased"; }

CarbonMass JournalEntry::line_total() const { return quantity * CarbonMass::from_kg(footprint_kg_each); }

bool operator==(const JournalEntry& a, const JournalEntry& b) noexcept {
  return a.entry_id == b.entry_id && a.user_id == b.user_id && a.label == b.label && a.barcode == b.barcode &&
         a.quantity == b.quantity && a.footprint_kg_each == b.footprint_kg_each && a.state == b.state &&
         a.created_at == b.created_at && a.updated_at == b.updated_at;
}

std::string purchase_detail(std::string_view entry_id) { return std::string(kDetailPrefix) + std::string(entry_id); }

Journal::Journal(Clock clock, IdSource ids) : clock_(std::move(clock)), ids_(std::move(ids)) {}

std::unique_ptr<Journal> Journal::open(const std::filesystem::path& path, Clock clock, IdSource ids,
                                       RecoveryReport* report) {
  auto journal = std::make_unique<Journal>(std::move(clock), std::move(ids));
  Journal* raw = journal.get();
  journal->log_ = AppendLog::open(path, [raw](std::string_view line) { raw->apply_record(line); }, report);
  return journal;
}

void Journal::apply_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::CorruptLog, std::string("unparseable journal record: ") + e.what());
  }
  try {
    const auto op = j.at("op").get<std::string>();
    if (op == "put") {
      JournalEntry e = entry_from_json(j.at("entry"));
      auto it = entries_.find(e.entry_id);
      if (it == entries_.end()) {
        std::string id = e.entry_id;
        entries_.emplace(std::move(id), Stored{next_seq_++, std::move(e)});
      } else {
        it->second.entry = std::move(e);
      }
    } else if (op == "delete") {
      if (entries_.erase(j.at("entry_id").get<std::string>()) == 0) {
        throw Error(ErrorCode::CorruptLog, "journal delete of unknown entry");
      }
    } else if (op == "purchase") {
      auto it = entries_.find(j.at("entry_id").get<std::string>());
      if (it == entries_.end()) throw Error(ErrorCode::CorruptLog, "journal purchase of unknown entry");
      it->second.entry.state = EntryState::purchased;
      it->second.entry.updated_at = instant_field(j, "updated_at");
    } else {
      throw Error(ErrorCode::CorruptLog, "unknown journal op " + op);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CorruptLog, std::string("malformed journal record: ") + e.what());
  }
}

void Journal::persist(const std::string& line) {
  if (log_) log_->append(line);
}

Journal::Stored& Journal::require_locked(std::string_view entry_id) {
  auto it = entries_.find(entry_id);
  if (it == entries_.end()) {
    throw Error(ErrorCode::EntryNotFound, "no journal entry " + std::string(entry_id), std::string(entry_id));
  }
  return it->second;
}

JournalEntry Journal::create(std::string_view user_id, std::string label, std::optional<Barcode> barcode,
                             std::int64_t quantity, const Catalog& catalog, std::optional<double> footprint_kg_each) {
  check_quantity(quantity);
  if (user_id.empty()) throw Error(ErrorCode::InvalidRequest, "user_id is required");
  JournalEntry e;
  e.user_id = std::string(user_id);
  e.quantity = quantity;
  if (barcode) {
    const Product& p = catalog.lookup(*barcode);
    e.footprint_kg_each = p.footprint_kg;
    e.barcode = std::move(barcode);
    e.label = csv::trim(label).empty() ? p.name : std::move(label);
  } else {
    if (!footprint_kg_each) {
      throw Error(ErrorCode::InvalidRequest, "footprint_kg_each is required when no barcode is given");
    }
    check_footprint(*footprint_kg_each);
    e.footprint_kg_each = *footprint_kg_each;
    e.label = std::move(label);
  }

  std::lock_guard lock(mutex_);
  e.entry_id = ids_();
  while (entries_.count(e.entry_id) != 0) e.entry_id = ids_();
  e.created_at = clock_();
  e.updated_at = e.created_at;
  persist(json{{"op", "put"}, {"entry", entry_to_json(e)}}.dump());
  std::string id = e.entry_id;
  entries_.emplace(std::move(id), Stored{next_seq_++, e});
  return e;
}

JournalEntry Journal::update(std::string_view entry_id, const JournalPatch& patch, const Catalog& catalog) {
  std::lock_guard lock(mutex_);
  Stored& stored = require_locked(entry_id);
  if (stored.entry.state != EntryState::pending) {
    throw Error(ErrorCode::EntryImmutable, "purchased entries cannot be changed", std::string(entry_id));
  }
  JournalEntry next = stored.entry;
  if (patch.label) next.label = *patch.label;
  if (patch.quantity) {
    check_quantity(*patch.quantity);
    next.quantity = *patch.quantity;
  }
  if (patch.barcode) {
    next.footprint_kg_each = catalog.lookup(*patch.barcode).footprint_kg;
    next.barcode = patch.barcode;
  } else if (patch.footprint_kg_each) {
    if (next.barcode) {
      throw Error(ErrorCode::InvalidRequest, "footprint of a scanned item comes from the catalog");
    }
    check_footprint(*patch.footprint_kg_each);
    next.footprint_kg_each = *patch.footprint_kg_each;
  }
  next.updated_at = std::max(clock_(), next.created_at);
  persist(json{{"op", "put"}, {"entry", entry_to_json(next)}}.dump());
  stored.entry = next;
  return next;
}

void Journal::remove(std::string_view entry_id) {
  std::lock_guard lock(mutex_);
  require_locked(entry_id);
  persist(json{{"op", "delete"}, {"entry_id", entry_id}}.dump());
  entries_.erase(entries_.find(entry_id));
}

FootprintEvent Journal::purchase(std::string_view entry_id, Ledger& ledger, std::optional<Instant> at) {
  std::lock_guard lock(mutex_);
  Stored& stored = require_locked(entry_id);
  if (stored.entry.state != EntryState::pending) {
    throw Error(ErrorCode::EntryImmutable, "entry already purchased", std::string(entry_id));
  }
  const Instant when = at.value_or(clock_());
  FootprintEvent event;
  event.event_id = make_uuid();
  event.user_id = stored.entry.user_id;
  event.source = EventSource::purchase;
  event.kg_co2e = stored.entry.line_total();
  event.occurred_at = when;
  event.detail = purchase_detail(stored.entry.entry_id);
  // Ledger first: reconcile() repairs the journal if we stop in between.
  ledger.append(event);
  const Instant updated = std::max(clock_(), stored.entry.created_at);
  persist(json{{"op", "purchase"}, {"entry_id", entry_id}, {"updated_at", format_rfc3339(updated)}}.dump());
  stored.entry.state = EntryState::purchased;
  stored.entry.updated_at = updated;
  return event;
}

std::optional<JournalEntry> Journal::find(std::string_view entry_id) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(entry_id);
  if (it == entries_.end()) return std::nullopt;
  return it->second.entry;
}

JournalEntry Journal::get(std::string_view entry_id) const {
  auto e = find(entry_id);
  if (!e) throw Error(ErrorCode::EntryNotFound, "no journal entry " + std::string(entry_id), std::string(entry_id));
  return *e;
}

std::vector<JournalEntry> Journal::list(std::string_view user_id) const {
  std::lock_guard lock(mutex_);
  std::vector<const Stored*> picked;
  for (const auto& [id, s] : entries_) {
    if (s.entry.user_id == user_id) picked.push_back(&s);
  }
  std::sort(picked.begin(), picked.end(), [](const Stored* a, const Stored* b) { return a->seq < b->seq; });
  std::vector<JournalEntry> out;
  out.reserve(picked.size());
  for (const auto* s : picked) out.push_back(s->entry);
  return out;
}

std::size_t Journal::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t Journal::reconcile(const Ledger& ledger) {
  std::map<std::string, Instant, std::less<>> purchased;
  for (const auto& e : ledger.all_events()) {
    if (e.source == EventSource::purchase && std::string_view(e.detail).substr(0, kDetailPrefix.size()) == kDetailPrefix) {
      purchased.emplace(e.detail.substr(kDetailPrefix.size()), e.occurred_at);
    }
  }
  std::lock_guard lock(mutex_);
  std::size_t repaired = 0;
  for (auto& [id, s] : entries_) {
    if (s.entry.state != EntryState::pending) continue;
    auto hit = purchased.find(id);
    if (hit == purchased.end()) continue;
    const Instant updated = std::max(hit->second, s.entry.created_at);
    persist(json{{"op", "purchase"}, {"entry_id", id}, {"updated_at", format_rfc3339(updated)}}.dump());
    s.entry.state = EntryState::purchased;
    s.entry.updated_at = updated;
    ++repaired;
  }
  return repaired;
}

}  // namespace carbon
