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

#include <gtest/gtest.h>

#include <random>

#include "carbon/error.hpp"
#include "carbon/leaderboard.hpp"
#include "oracles.hpp"

namespace carbon {
namespace {

const Period kWeek{PeriodKind::weekly, *parse_date("2026-10-14")};
const Instant kInWeek = *parse_rfc3339("2026-10-14T12:00:00Z");

struct Fixture {
  Ledger ledger;
  std::vector<UserProfile> profiles;
  int next_id = 0;

  void user(const std::string& id, const std::string& region = "in-ka") { profiles.push_back({id, id, region}); }
  void add(const std::string& user, std::int64_t micro, EventSource source = EventSource::trip,
           Instant when = kInWeek) {
    ledger.append(FootprintEvent{"e" + std::to_string(next_id++), user, source, CarbonMass::from_micro(micro), when, ""});
  }
};

std::vector<std::pair<std::string, int>> ranks(const std::vector<LeaderboardEntry>& board) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& e : board) out.emplace_back(e.user_id, e.rank);
  return out;
}

using Ranks = std::vector<std::pair<std::string, int>>;

TEST(Leaderboard, AscendingOrder) {
  Fixture f;
  for (const char* u : {"a", "b", "c"}) f.user(u);
  f.add("a", 5);
  f.add("b", 3);
  f.add("c", 9);
  EXPECT_EQ(ranks(leaderboard(f.ledger, f.profiles, kWeek)), (Ranks{{"b", 1}, {"a", 2}, {"c", 3}}));
}

TEST(Leaderboard, CompetitionRankingOnTies) {
  Fixture f;
  for (const char* u : {"c", "b", "a"}) f.user(u);
  f.add("a", 3);
  f.add("b", 3);
  f.add("c", 9);
  EXPECT_EQ(ranks(leaderboard(f.ledger, f.profiles, kWeek)), (Ranks{{"a", 1}, {"b", 1}, {"c", 3}}));
}

TEST(Leaderboard, ZeroEventUsersAndFriendScope) {
  Fixture f;
  for (const char* u : {"a", "b", "c", "d"}) f.user(u);
  f.add("a", 5);
  f.add("c", 1);
  f.add("c", 100, EventSource::trip, *parse_rfc3339("2026-10-20T00:00:00Z"));  // next week
  EXPECT_EQ(ranks(leaderboard(f.ledger, f.profiles, kWeek)), (Ranks{{"b", 1}, {"d", 1}, {"c", 3}, {"a", 4}}));
  const std::set<std::string> friends = {"a", "c", "zed"};
  EXPECT_EQ(ranks(leaderboard(f.ledger, f.profiles, kWeek, friends)), (Ranks{{"c", 1}, {"a", 2}}));
}

TEST(LeaderboardProperty, FiftyUsersMatchOracle) {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 50; ++round) {
    Fixture f;
    std::map<std::string, std::int64_t> totals;
    for (int u = 0; u < 50; ++u) {
      const std::string id = "user" + std::to_string(rng() % 1000);
      if (totals.count(id)) continue;
      f.user(id);
      totals[id] = 0;
      const int n = static_cast<int>(rng() % 4);
      for (int k = 0; k < n; ++k) {
        const std::int64_t micro = static_cast<std::int64_t>(rng() % 5) * 250000;  // frequent ties
        f.add(id, micro);
        totals[id] += micro;
      }
    }
    const auto board = leaderboard(f.ledger, f.profiles, kWeek);
    const auto want = oracle::competition_rank(totals);
    ASSERT_EQ(board.size(), want.size());
    for (std::size_t i = 0; i < board.size(); ++i) {
      EXPECT_EQ(board[i].user_id, want[i].user);
      EXPECT_EQ(board[i].total.micro(), want[i].total);
      EXPECT_EQ(board[i].rank, want[i].rank);
    }
  }
}

TEST(LeaderboardProperty, ArgminInvariantUnderUniformScaling) {
  std::mt19937_64 rng(62);
  for (int round = 0; round < 100; ++round) {
    Fixture base, scaled;
    const std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 20);
    for (int u = 0; u < 10; ++u) {
      const std::string id = "u" + std::to_string(u);
      base.user(id);
      scaled.user(id);
      const std::int64_t micro = static_cast<std::int64_t>(rng() % 1000000);
      base.add(id, micro);
      scaled.add(id, c * micro);
    }
    const auto a = leaderboard(base.ledger, base.profiles, kWeek);
    const auto b = leaderboard(scaled.ledger, scaled.profiles, kWeek);
    EXPECT_EQ(a.front().user_id, b.front().user_id);
    EXPECT_EQ(ranks(a), ranks(b));
  }
}

TEST(AreaAverage, Examples) {
  Fixture f;
  f.user("a", "in-ka");
  f.add("a", 2000000);
  EXPECT_EQ(area_average(f.ledger, f.profiles, "in-ka", kWeek), 2.0);
  f.user("b", "in-ka");
  f.add("b", 4000000);
  f.user("c", "uk");
  f.add("c", 100000000);
  EXPECT_EQ(area_average(f.ledger, f.profiles, "in-ka", kWeek), 3.0);
  f.user("d", "in-ka");
  EXPECT_EQ(area_average(f.ledger, f.profiles, "in-ka", kWeek), 2.0);
  try {
    area_average(f.ledger, f.profiles, "de", kWeek);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyRegion);
  }
}

TEST(Tips, AllTripsGiveOneTripTip) {
  Fixture f;
  f.add("a", 10);
  f.add("a", 20);
  const auto tips = personalized_tips(f.ledger, "a", kWeek, TipsConfig::defaults());
  ASSERT_EQ(tips.size(), 1u);
  EXPECT_EQ(tips[0].category, "trip");
  EXPECT_EQ(tips[0].share, 1.0);
  EXPECT_FALSE(tips[0].message.empty());
}

TEST(Tips, ThresholdRule) {
  Fixture f;
  f.add("a", 5, EventSource::trip);
  f.add("a", 3, EventSource::meal);
  f.add("a", 2, EventSource::purchase);
  const auto tips = personalized_tips(f.ledger, "a", kWeek, TipsConfig::defaults());
  ASSERT_EQ(tips.size(), 1u);
  EXPECT_EQ(tips[0].category, "trip");
  EXPECT_EQ(tips[0].share, 0.5);
}

TEST(Tips, TwoLargeSharesByDescendingShare) {
  Fixture f;
  f.add("a", 45, EventSource::meal);
  f.add("a", 55, EventSource::electricity);
  const auto tips = personalized_tips(f.ledger, "a", kWeek, TipsConfig::defaults());
  ASSERT_EQ(tips.size(), 2u);
  EXPECT_EQ(tips[0].category, "electricity");
  EXPECT_EQ(tips[1].category, "meal");
}

TEST(Tips, NoEventsGivesOnboarding) {
  Fixture f;
  const auto tips = personalized_tips(f.ledger, "nobody", kWeek, TipsConfig::defaults());
  ASSERT_EQ(tips.size(), 1u);
  EXPECT_EQ(tips[0].category, "onboarding");
}

TEST(TipsConfig, FileAndValidation) {
  const auto cfg = load_tips_config_file(CARBON_DATA_DIR "/tips.json");
  EXPECT_EQ(cfg.threshold, 0.4);
  EXPECT_EQ(cfg.messages.size(), 4u);
  const auto custom = parse_tips_config(R"({"threshold":0.25,"messages":{"meal":"eat greens"}})");
  EXPECT_EQ(custom.threshold, 0.25);
  EXPECT_EQ(custom.messages.at(EventSource::meal), "eat greens");
  EXPECT_FALSE(custom.onboarding.empty());
  EXPECT_THROW(parse_tips_config(R"({"threshold":1.5})"), Error);
  EXPECT_THROW(parse_tips_config(R"({"messages":{"rocket":"x"}})"), Error);
  EXPECT_THROW(parse_tips_config("[]"), Error);
}

}  // namespace
}  // namespace carbon
