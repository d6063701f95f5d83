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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "carbon/factor_registry.hpp"

namespace carbon {

struct IngredientQuantity {
  std::string ingredient;  // food_ingredient variant
  double grams = 0.0;
};

/// A dish as listed on a menu. Footprints are never stored on the item; they
/// are computed against the registry in force (see RatedMenuItem).
struct MenuItem {
  std::string id;
  std::string name;
  std::string category;
  std::vector<IngredientQuantity> ingredients;
};

struct RatedMenuItem {
  MenuItem item;
  double footprint_kg = 0.0;
};

struct Menu {
  std::string restaurant_id;
  std::vector<MenuItem> items;

  const MenuItem& item(std::string_view id) const;
};

/// Sum of grams/1000 x factor, accumulated in ascending ingredient-name
/// order so the result is independent of list order.
double recipe_footprint(const std::vector<IngredientQuantity>& ingredients, const FactorRegistry& registry);

RatedMenuItem rate(const MenuItem& item, const FactorRegistry& registry);

/// Same-category items with strictly lower footprint than `chosen_id`,
/// ascending by footprint then item id, at most `limit`.
std::vector<RatedMenuItem> recommend_menu(const Menu& menu, std::string_view chosen_id, const FactorRegistry& registry,
                                          std::size_t limit = 4);

/// Throws MalformedDocument on schema errors, DuplicateKey on repeated item
/// ids, InvalidQuantity on non-positive grams.
Menu parse_menu(std::string_view json_text);

class MenuStore {
 public:
  MenuStore() = default;
  void add(Menu menu);
  const Menu& get(std::string_view restaurant_id) const;
  const Menu* find(std::string_view restaurant_id) const;
  std::vector<std::string> restaurant_ids() const;

 private:
  std::map<std::string, Menu, std::less<>> menus_;
};

/// A single menu object or an array of them.
MenuStore load_menus(std::string_view json_text);
MenuStore load_menus_file(const std::string& path);

}  // namespace carbon
