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

#include "carbon/leaderboard.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "carbon/csv.hpp"
#include "carbon/error.hpp"
#include "carbon/factor_registry.hpp"

namespace carbon {

std::vector<LeaderboardEntry> leaderboard(const Ledger& ledger, const std::vector<UserProfile>& profiles,
                                          const Period& period, const std::optional<std::set<std::string>>& friends) {
  const Window window = period.window();
  std::vector<LeaderboardEntry> out;
  for (const auto& p : profiles) {
    if (friends && friends->count(p.user_id) == 0) continue;
    out.push_back(LeaderboardEntry{p.user_id, ledger.user_total(p.user_id, window).total, 0});
  }
  std::sort(out.begin(), out.end(), [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
    if (a.total != b.total) return a.total < b.total;
    return a.user_id < b.user_id;
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].rank = (i > 0 && out[i].total == out[i - 1].total) ? out[i - 1].rank : static_cast<int>(i) + 1;
  }
  return out;
}

double area_average(const Ledger& ledger, const std::vector<UserProfile>& profiles, std::string_view region,
                    const Period& period) {
  const std::string key = csv::to_lower(csv::trim(region));
  const Window window = period.window();
  CarbonMass sum;
  std::size_t n = 0;
  for (const auto& p : profiles) {
    if (p.region != key) continue;
    sum += ledger.user_total(p.user_id, window).total;
    ++n;
  }
  if (n == 0) throw Error(ErrorCode::EmptyRegion, "no users in region " + key, key);
  return static_cast<double>(sum.micro()) / static_cast<double>(n) / 1e6;
}

TipsConfig TipsConfig::defaults() {
  TipsConfig c;
  c.threshold = 0.4;
  c.messages = {
      {EventSource::trip, "Most of your footprint comes from travel. Try walking, cycling, car pooling or public "
                          "transport for short trips."},
      {EventSource::meal, "Meals are your largest source. Swapping one red-meat dish a week for a plant-based one "
                          "makes a visible dent."},
      {EventSource::electricity, "Electricity dominates your footprint. Check standby loads and shift to "
                                 "efficient appliances."},
      {EventSource::purchase, "Shopping is your largest source. Scan products and pick a lower-footprint "
                              "alternative in the same category."},
  };
  c.onboarding = "No activity recorded for this period yet. Log a trip, a meal, a bill or a purchase to see your "
                 "footprint.";
  return c;
}

TipsConfig parse_tips_config(std::string_view json_text) {
  using nlohmann::json;
  TipsConfig c = TipsConfig::defaults();
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, std::string("invalid tips config: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedDocument, "tips config must be an object");
  try {
    if (doc.contains("threshold")) c.threshold = doc.at("threshold").get<double>();
    if (doc.contains("onboarding")) c.onboarding = doc.at("onboarding").get<std::string>();
    if (doc.contains("messages")) {
      for (const auto& [k, v] : doc.at("messages").items()) {
        const auto src = parse_source(k);
        if (!src) throw Error(ErrorCode::MalformedDocument, "unknown tip category " + k, k);
        c.messages[*src] = v.get<std::string>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, std::string("invalid tips config: ") + e.what());
  }
  if (!(c.threshold >= 0.0 && c.threshold < 1.0)) {
    throw Error(ErrorCode::MalformedDocument, "tips threshold must be in [0, 1)");
  }
  return c;
}

TipsConfig load_tips_config_file(const std::string& path) { return parse_tips_config(read_text_file(path)); }

std::vector<Tip> personalized_tips(const Ledger& ledger, std::string_view user_id, const Period& period,
                                   const TipsConfig& config) {
  const Window window = period.window();
  const auto by_source = ledger.source_totals(user_id, window);
  std::int64_t total = 0;
  for (const auto& [s, m] : by_source) total += m.micro();
  if (total == 0) return {Tip{"onboarding", config.onboarding, 0.0}};

  std::vector<Tip> tips;
  for (const auto& [s, m] : by_source) {
    const double share = static_cast<double>(m.micro()) / static_cast<double>(total);
    if (share > config.threshold) {
      auto msg = config.messages.find(s);
      tips.push_back(Tip{std::string(to_string(s)), msg == config.messages.end() ? std::string{} : msg->second, share});
    }
  }
  std::stable_sort(tips.begin(), tips.end(), [](const Tip& a, const Tip& b) { return a.share > b.share; });
  return tips;
}

}  // namespace carbon
