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

#include <filesystem>
#include <string>
#include <vector>

namespace carbon::api {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int listen_port = 8080;  // 0 picks a free port
  std::filesystem::path data_dir = "var";
  std::filesystem::path factors_csv = "data/factors.csv";
  std::filesystem::path catalog_csv = "data/catalog.csv";
  std::filesystem::path tariffs_csv = "data/tariffs.csv";
  std::filesystem::path menus_json = "data/menus.json";
  std::filesystem::path tips_config = "data/tips.json";

  /// Throws InvalidRequest naming the first unreadable input file or an
  /// out-of-range port. The data directory is created if missing.
  void validate() const;

  std::filesystem::path events_log() const { return data_dir / "events.jsonl"; }
  std::filesystem::path journal_log() const { return data_dir / "journal.jsonl"; }
  std::filesystem::path users_log() const { return data_dir / "users.jsonl"; }
};

/// Thrown by parse_command_line after --help output or a usage error has
/// been printed; `status` is the process exit code.
struct CommandLineExit {
  int status = 0;
};

/// Parses --port, --data-dir, --factors, --catalog, --tariffs, --menus,
/// --tips-config (and --host). Each flag has a CARBON_* environment
/// equivalent; flags win over the environment.
ServiceConfig parse_command_line(int argc, const char* const* argv);

}  // namespace carbon::api
