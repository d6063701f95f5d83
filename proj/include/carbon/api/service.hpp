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

#include <memory>
#include <mutex>
#include <string>

#include "carbon/api/auth.hpp"
#include "carbon/api/config.hpp"
#include "carbon/barcode.hpp"
#include "carbon/bill_parser.hpp"
#include "carbon/factor_registry.hpp"
#include "carbon/journal.hpp"
#include "carbon/leaderboard.hpp"
#include "carbon/ledger.hpp"
#include "carbon/menu_recommender.hpp"

namespace httplib {
class Server;
}

namespace carbon::api {

/// Immutable reference data. A reload builds a fresh set and swaps it in;
/// requests keep the snapshot they started with.
struct Stores {
  std::shared_ptr<const FactorRegistry> factors;
  std::shared_ptr<const Catalog> catalog;
  std::shared_ptr<const TariffTable> tariffs;
  std::shared_ptr<const MenuStore> menus;
  std::shared_ptr<const TipsConfig> tips;
};

/// Loads every configured file; throws on the first invalid one.
Stores load_stores(const ServiceConfig& config);

/// The /v1 JSON-over-HTTP service: reference stores, the event ledger, the
/// grocery journal and the user directory, all file-backed under data_dir.
class Service {
 public:
  using Clock = Journal::Clock;

  /// Validates the config, loads stores and replays the logs. Throws on any
  /// unreadable or invalid input.
  explicit Service(ServiceConfig config, Clock clock = now_utc);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Re-reads the reference files and swaps them in atomically. On failure
  /// the previous stores stay active and the error propagates.
  void reload();

  void register_routes(httplib::Server& server);

  Stores stores() const;
  const ServiceConfig& config() const noexcept { return config_; }
  Ledger& ledger() noexcept { return *ledger_; }
  Journal& journal() noexcept { return *journal_; }
  UserDirectory& users() noexcept { return *users_; }

 private:
  class Routes;

  ServiceConfig config_;
  Clock clock_;
  mutable std::mutex stores_mutex_;
  Stores stores_;
  std::unique_ptr<UserDirectory> users_;
  std::unique_ptr<Ledger> ledger_;
  std::unique_ptr<Journal> journal_;
};

}  // namespace carbon::api
