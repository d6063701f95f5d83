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
#include "carbon/menu_recommender.hpp"
#include "oracles.hpp"

namespace carbon {
namespace {

FactorRegistry food(std::initializer_list<std::pair<const char*, double>> factors) {
  FactorRegistry r;
  for (const auto& [variant, value] : factors) {
    r.upsert(EmissionFactor{{FactorCategory::food_ingredient, variant, FactorUnit::kg}, value, "test"});
  }
  return r;
}

MenuItem dish(std::string id, std::string category, std::vector<IngredientQuantity> ingredients) {
  return MenuItem{id, id, std::move(category), std::move(ingredients)};
}

TEST(RecipeFootprint, Examples) {
  const auto r = food({{"beef", 27.0}, {"rice", 2.7}});
  EXPECT_EQ(recipe_footprint({}, r), 0.0);
  EXPECT_NEAR(recipe_footprint({{"beef", 150}}, r), 4.05, 1e-12);
  EXPECT_NEAR(recipe_footprint({{"beef", 150}, {"rice", 100}}, r), 4.32, 1e-12);
}

TEST(RecipeFootprint, Errors) {
  auto r = food({{"beef", 27.0}});
  EXPECT_THROW(recipe_footprint({{"tofu", 100}}, r), Error);
  r.upsert(EmissionFactor{{FactorCategory::food_ingredient, "milk", FactorUnit::item}, 1.0, ""});
  try {
    recipe_footprint({{"milk", 100}}, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnitMismatch);
  }
}

TEST(Recommend, Examples) {
  const auto r = food({{"a", 10.0}, {"b", 20.0}, {"c", 30.0}});
  Menu m{"r1", {dish("x1", "mains", {{"a", 100}}), dish("x2", "mains", {{"b", 100}}), dish("x3", "mains", {{"c", 100}}),
                dish("s1", "sides", {{"a", 10}})}};
  EXPECT_TRUE(recommend_menu(m, "x1", r).empty());
  const auto recs = recommend_menu(m, "x3", r);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].item.id, "x1");
  EXPECT_EQ(recs[1].item.id, "x2");
  EXPECT_NEAR(recs[1].footprint_kg, 2.0, 1e-12);
  try {
    recommend_menu(m, "nope", r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ItemNotFound);
  }
}

TEST(Recommend, SeedMenuMatchesOracle) {
  const auto r = load_factors_file(CARBON_DATA_DIR "/factors.csv");
  const auto store = load_menus_file(CARBON_DATA_DIR "/menus.json");
  for (const auto& rid : store.restaurant_ids()) {
    const Menu& m = store.get(rid);
    EXPECT_GE(m.items.size(), 10u);
    std::vector<oracle::Candidate> pool;
    for (const auto& it : m.items) pool.push_back({it.id, it.category, rate(it, r).footprint_kg});
    for (const auto& c : pool) {
      std::vector<std::string> got;
      for (const auto& rec : recommend_menu(m, c.key, r)) got.push_back(rec.item.id);
      EXPECT_EQ(got, oracle::better_alternatives(pool, c.group, c.footprint, 4)) << rid << "/" << c.key;
    }
  }
}

TEST(MenuStore, MissingRestaurant) {
  MenuStore s;
  try {
    s.get("nowhere");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RestaurantNotFound);
  }
}

TEST(ParseMenu, Validation) {
  EXPECT_NO_THROW(parse_menu(R"({"restaurant_id":"r","items":[]})"));
  EXPECT_THROW(parse_menu(R"({"items":[]})"), Error);
  EXPECT_THROW(parse_menu("not json"), Error);
  const char* dup = R"({"restaurant_id":"r","items":[
    {"id":"a","name":"A","category":"c","ingredients":[]},
    {"id":"a","name":"B","category":"c","ingredients":[]}]})";
  EXPECT_THROW(parse_menu(dup), Error);
  const char* zero = R"({"restaurant_id":"r","items":[
    {"id":"a","name":"A","category":"c","ingredients":[{"ingredient":"beef","grams":0}]}]})";
  try {
    parse_menu(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidQuantity);
  }
}

TEST(MenuProperty, LinearAndPermutationInvariant) {
  const auto r = load_factors_file(CARBON_DATA_DIR "/factors.csv");
  const auto variants = r.list(FactorCategory::food_ingredient);
  std::mt19937_64 rng(31);
  for (int round = 0; round < 500; ++round) {
    std::vector<IngredientQuantity> ings;
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      ings.push_back({variants[rng() % variants.size()].key.variant, 1.0 + static_cast<double>(rng() % 50000) / 100.0});
    }
    const double base = recipe_footprint(ings, r);
    auto doubled = ings;
    for (auto& q : doubled) q.grams *= 2;
    EXPECT_NEAR(recipe_footprint(doubled, r), 2 * base, 1e-12 * 2 * base);
    auto shuffled = ings;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(recipe_footprint(shuffled, r), base);
  }
}

TEST(MenuProperty, RecommendMatchesOracleOnRandomMenus) {
  std::mt19937_64 rng(32);
  for (int draw = 0; draw < 300; ++draw) {
    FactorRegistry r;
    Menu m{"r", {}};
    std::vector<oracle::Candidate> pool;
    const int n = 1 + static_cast<int>(rng() % 100);
    for (int i = 0; i < n; ++i) {
      const std::string id = "i" + std::to_string(i);
      r.upsert(EmissionFactor{{FactorCategory::food_ingredient, "x" + std::to_string(i), FactorUnit::kg},
                              static_cast<double>(rng() % 6), ""});
      m.items.push_back(dish(id, "c" + std::to_string(rng() % 3), {{"x" + std::to_string(i), 1000}}));
    }
    for (const auto& it : m.items) pool.push_back({it.id, it.category, rate(it, r).footprint_kg});
    const auto& chosen = pool[rng() % pool.size()];
    std::vector<std::string> got;
    for (const auto& rec : recommend_menu(m, chosen.key, r)) got.push_back(rec.item.id);
    EXPECT_EQ(got, oracle::better_alternatives(pool, chosen.group, chosen.footprint, 4));
  }
}

}  // namespace
}  // namespace carbon
