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

#include "carbon/api/json_codec.hpp"

namespace carbon::api {

json to_json(const TripRecord& r) {
  json j = {{"user_id", r.request.user_id},
            {"mode", r.request.mode},
            {"fuel", r.request.fuel},
            {"distance_km", r.distance_km},
            {"footprint_kg", r.footprint_kg},
            {"timestamp", format_rfc3339(r.request.timestamp)}};
  j["declared_distance_km"] = r.request.declared_distance_km ? json(*r.request.declared_distance_km) : json(nullptr);
  json trace = json::array();
  for (const auto& p : r.request.trace) trace.push_back({{"lat", p.lat}, {"lon", p.lon}});
  j["trace"] = std::move(trace);
  return j;
}

json to_json(const AlternativeSuggestion& s) {
  return {{"mode", s.mode}, {"fuel", s.fuel}, {"footprint_kg", s.footprint_kg}, {"savings_kg", s.savings_kg}};
}

json to_json(const Product& p) {
  return {{"barcode", p.barcode.digits()}, {"name", p.name}, {"category", p.category},
          {"footprint_kg", p.footprint_kg}};
}

json to_json(const MenuItem& item) {
  json ingredients = json::array();
  for (const auto& q : item.ingredients) ingredients.push_back({{"ingredient", q.ingredient}, {"grams", q.grams}});
  return {{"id", item.id}, {"name", item.name}, {"category", item.category}, {"ingredients", std::move(ingredients)}};
}

json to_json(const RatedMenuItem& r) {
  json j = to_json(r.item);
  j["footprint_kg"] = r.footprint_kg;
  return j;
}

json to_json(const BillReading& r) {
  return {{"region", r.region},
          {"total_cost", r.total_cost.to_double()},
          {"tariff_per_kwh", r.tariff_per_kwh.to_double()},
          {"kwh", r.kwh.to_double()},
          {"kwh_text", r.kwh.to_string()},
          {"footprint_kg", r.footprint_kg}};
}

json to_json(const JournalEntry& e) {
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

json to_json(const FootprintEvent& e) { return json::parse(to_json_line(e)); }

json to_json(const Tip& t) { return {{"category", t.category}, {"message", t.message}, {"share", t.share}}; }

json to_json(const Window& w, PeriodKind kind) {
  return {{"kind", std::string(to_string(kind))}, {"start", format_rfc3339(w.start)}, {"end", format_rfc3339(w.end)}};
}

json error_body(const Error& e) { return error_body(to_string(e.code()), e.what(), e.detail()); }

json error_body(std::string_view code, std::string_view message, std::string_view detail) {
  return {{"code", code}, {"message", message}, {"detail", detail}};
}

}  // namespace carbon::api
