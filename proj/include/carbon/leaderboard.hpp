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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "carbon/ledger.hpp"
#include "carbon/time.hpp"

namespace carbon {

struct UserProfile {
  std::string user_id;
  std::string display_name;
  std::string region;  // area key, lowercase
};

struct LeaderboardEntry {
  std::string user_id;
  CarbonMass total;
  int rank = 0;  // 1 = lowest total; competition ranking on ties
};

/// Ascending totals over every profiled user in scope (zero-event users
/// included). `friends` restricts the scope; nullopt means all users.
std::vector<LeaderboardEntry> leaderboard(const Ledger& ledger, const std::vector<UserProfile>& profiles,
                                          const Period& period,
                                          const std::optional<std::set<std::string>>& friends = std::nullopt);

/// Mean period total over the profiles in `region`. Throws EmptyRegion.
double area_average(const Ledger& ledger, const std::vector<UserProfile>& profiles, std::string_view region,
                    const Period& period);

struct Tip {
  std::string category;  // event source name, or "onboarding"
  std::string message;
  double share = 0.0;
};

struct TipsConfig {
  double threshold = 0.4;
  std::map<EventSource, std::string> messages;
  std::string onboarding;

  static TipsConfig defaults();
};

/// JSON: {"threshold": 0.4, "messages": {"trip": "...", ...}, "onboarding": "..."}.
/// Missing keys fall back to defaults().
TipsConfig parse_tips_config(std::string_view json_text);
TipsConfig load_tips_config_file(const std::string& path);

/// One tip per source whose share of the period total exceeds the
/// threshold, by descending share; a single onboarding tip when the total
/// is zero.
std::vector<Tip> personalized_tips(const Ledger& ledger, std::string_view user_id, const Period& period,
                                   const TipsConfig& config);

}  // namespace carbon
