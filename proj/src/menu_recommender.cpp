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

#include "carbon/menu_recommender.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "carbon/csv.hpp"
#include "carbon/error.hpp"
#include "carbon/ranking.hpp"

namespace carbon {
namespace {

using nlohmann::json;

std::string require_string(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw Error(ErrorCode::MalformedDocument, std::string("menu field '") + field + "' must be a string", field);
  }
  return it->get<std::string>();
}

Menu menu_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::MalformedDocument, "menu must be a JSON object");
  Menu menu;
  menu.restaurant_id = require_string(doc, "restaurant_id");
  auto items = doc.find("items");
  if (items == doc.end() || !items->is_array()) {
    throw Error(ErrorCode::MalformedDocument, "menu 'items' must be an array", menu.restaurant_id);
  }
  std::set<std::string> seen;
  for (const auto& it : *items) {
    if (!it.is_object()) throw Error(ErrorCode::MalformedDocument, "menu item must be an object");
    MenuItem item;
    item.id = require_string(it, "id");
    item.name = require_string(it, "name");
    item.category = csv::to_lower(csv::trim(require_string(it, "category")));
    if (!seen.insert(item.id).second) {
      throw Error(ErrorCode::DuplicateKey, "duplicate menu item id " + item.id, item.id);
    }
    auto ing = it.find("ingredients");
    if (ing == it.end() || !ing->is_array() || ing->empty()) {
      throw Error(ErrorCode::MalformedDocument, "item " + item.id + " needs a non-empty ingredients array", item.id);
    }
    for (const auto& q : *ing) {
      if (!q.is_object() || !q.contains("grams") || !q["grams"].is_number()) {
        throw Error(ErrorCode::MalformedDocument, "ingredient needs numeric grams", item.id);
      }
      IngredientQuantity iq{normalize_variant(require_string(q, "ingredient")), q["grams"].get<double>()};
      if (!std::isfinite(iq.grams) || iq.grams <= 0.0) {
        throw Error(ErrorCode::InvalidQuantity, "grams must be positive", item.id);
      }
      item.ingredients.push_back(std::move(iq));
    }
    menu.items.push_back(std::move(item));
  }
  return menu;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, std::string("invalid menu JSON: ") + e.what());
  }
}

}  // namespace

const MenuItem& Menu::item(std::string_view id) const {
  for (const auto& it : items) {
    if (it.id == id) return it;
  }
  throw Error(ErrorCode::ItemNotFound, "no menu item " + std::string(id), std::string(id));
}

double recipe_footprint(const std::vector<IngredientQuantity>& ingredients, const FactorRegistry& registry) {
  std::vector<const IngredientQuantity*> ordered;
  ordered.reserve(ingredients.size());
  for (const auto& q : ingredients) ordered.push_back(&q);
  std::sort(ordered.begin(), ordered.end(), [](const IngredientQuantity* a, const IngredientQuantity* b) {
    if (a->ingredient != b->ingredient) return a->ingredient < b->ingredient;
    return a->grams < b->grams;
  });
  double total = 0.0;
  for (const auto* q : ordered) {
    const auto& f = registry.lookup(FactorCategory::food_ingredient, q->ingredient);
    if (f.key.unit != FactorUnit::kg) {
      throw Error(ErrorCode::UnitMismatch, "ingredient factor must be per kg", q->ingredient);
    }
    total += (q->grams / 1000.0) * f.kg_co2e_per_unit;
  }
  return total;
}

RatedMenuItem rate(const MenuItem& item, const FactorRegistry& registry) {
  return RatedMenuItem{item, recipe_footprint(item.ingredients, registry)};
}

std::vector<RatedMenuItem> recommend_menu(const Menu& menu, std::string_view chosen_id, const FactorRegistry& registry,
                                          std::size_t limit) {
  if (limit == 0) throw Error(ErrorCode::InvalidRequest, "limit must be at least 1");
  const RatedMenuItem chosen = rate(menu.item(chosen_id), registry);
  std::vector<RatedMenuItem> rated;
  for (const auto& it : menu.items) {
    if (it.category == chosen.item.category && it.id != chosen.item.id) rated.push_back(rate(it, registry));
  }
  return rank_lower_alternatives(
      rated, chosen.footprint_kg, [](const RatedMenuItem&) { return true; }, &RatedMenuItem::footprint_kg,
      [](const RatedMenuItem& r) -> const std::string& { return r.item.id; }, limit);
}

Menu parse_menu(std::string_view json_text) { return menu_from_json(parse_json(json_text)); }

void MenuStore::add(Menu menu) {
  if (menus_.count(menu.restaurant_id) != 0) {
    throw Error(ErrorCode::DuplicateKey, "duplicate restaurant " + menu.restaurant_id, menu.restaurant_id);
  }
  std::string id = menu.restaurant_id;
  menus_.emplace(std::move(id), std::move(menu));
}

const Menu* MenuStore::find(std::string_view restaurant_id) const {
  auto it = menus_.find(restaurant_id);
  return it == menus_.end() ? nullptr : &it->second;
}

const Menu& MenuStore::get(std::string_view restaurant_id) const {
  if (const auto* m = find(restaurant_id)) return *m;
  throw Error(ErrorCode::RestaurantNotFound, "no restaurant " + std::string(restaurant_id),
              std::string(restaurant_id));
}

std::vector<std::string> MenuStore::restaurant_ids() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : menus_) out.push_back(k);
  return out;
}

MenuStore load_menus(std::string_view json_text) {
  const json doc = parse_json(json_text);
  MenuStore store;
  if (doc.is_array()) {
    for (const auto& m : doc) store.add(menu_from_json(m));
  } else {
    store.add(menu_from_json(doc));
  }
  return store;
}

MenuStore load_menus_file(const std::string& path) { return load_menus(read_text_file(path)); }

}  // namespace carbon
