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
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carbon/append_log.hpp"
#include "carbon/barcode.hpp"
#include "carbon/ledger.hpp"
#include "carbon/time.hpp"

namespace carbon {

enum class EntryState { pending, purchased };

std::string_view to_string(EntryState s) noexcept;

struct JournalEntry {
  std::string entry_id;
  std::string user_id;
  std::string label;
  std::optional<Barcode> barcode;
  std::int64_t quantity = 1;
  double footprint_kg_each = 0.0;
  EntryState state = EntryState::pending;
  Instant created_at{};
  Instant updated_at{};

  /// quantity x footprint_kg_each at ledger resolution.
  CarbonMass line_total() const;
};

bool operator==(const JournalEntry& a, const JournalEntry& b) noexcept;

struct JournalPatch {
  std::optional<std::string> label;
  std::optional<std::int64_t> quantity;
  std::optional<Barcode> barcode;
  /// Only honoured for entries without a barcode.
  std::optional<double> footprint_kg_each;
};

/// Ledger detail string that ties a purchase event to its journal entry.
std::string purchase_detail(std::string_view entry_id);

/// Per-user grocery list. Entries move pending -> purchased exactly once;
/// purchase is the only operation that writes to the ledger.
class Journal {
 public:
  using Clock = std::function<Instant()>;
  using IdSource = std::function<std::string()>;

  explicit Journal(Clock clock = now_utc, IdSource ids = make_uuid);

  /// File-backed journal; replays the operation log at `path`.
  static std::unique_ptr<Journal> open(const std::filesystem::path& path, Clock clock = now_utc,
                                       IdSource ids = make_uuid, RecoveryReport* report = nullptr);

  /// Footprint comes from the catalog when `barcode` is set, otherwise from
  /// `footprint_kg_each` (required then). Throws InvalidQuantity,
  /// ProductNotFound, InvalidRequest.
  JournalEntry create(std::string_view user_id, std::string label, std::optional<Barcode> barcode,
                      std::int64_t quantity, const Catalog& catalog,
                      std::optional<double> footprint_kg_each = std::nullopt);

  /// Throws EntryNotFound, EntryImmutable, InvalidQuantity, ProductNotFound.
  JournalEntry update(std::string_view entry_id, const JournalPatch& patch, const Catalog& catalog);

  /// Throws EntryNotFound.
  void remove(std::string_view entry_id);

  /// Appends one purchase event (kg = quantity x footprint each) and marks
  /// the entry purchased. Throws EntryNotFound, EntryImmutable.
  FootprintEvent purchase(std::string_view entry_id, Ledger& ledger, std::optional<Instant> at = std::nullopt);

  JournalEntry get(std::string_view entry_id) const;
  std::optional<JournalEntry> find(std::string_view entry_id) const;
  /// A user's entries in creation order.
  std::vector<JournalEntry> list(std::string_view user_id) const;
  std::size_t size() const;

  /// Marks pending entries purchased when the ledger already holds their
  /// purchase event (crash between ledger append and journal write).
  /// Returns the number of entries repaired.
  std::size_t reconcile(const Ledger& ledger);

 private:
  struct Stored {
    std::uint64_t seq = 0;
    JournalEntry entry;
  };

  void apply_record(std::string_view line);
  void persist(const std::string& line);
  Stored& require_locked(std::string_view entry_id);

  Clock clock_;
  IdSource ids_;
  mutable std::mutex mutex_;
  std::map<std::string, Stored, std::less<>> entries_;
  std::uint64_t next_seq_ = 0;
  std::unique_ptr<AppendLog> log_;
};

}  // namespace carbon
