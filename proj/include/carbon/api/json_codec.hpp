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

#include <nlohmann/json.hpp>

#include "carbon/barcode.hpp"
#include "carbon/bill_parser.hpp"
#include "carbon/error.hpp"
#include "carbon/journal.hpp"
#include "carbon/leaderboard.hpp"
#include "carbon/ledger.hpp"
#include "carbon/menu_recommender.hpp"
#include "carbon/trip_engine.hpp"

// Wire representations for the /v1 API. All masses are kgCO2e numbers and
// all instants RFC 3339 UTC strings.
namespace carbon::api {

using nlohmann::json;

json to_json(const TripRecord& r);
json to_json(const AlternativeSuggestion& s);
json to_json(const Product& p);
json to_json(const RatedMenuItem& r);
json to_json(const MenuItem& item);
json to_json(const BillReading& r);
json to_json(const JournalEntry& e);
json to_json(const FootprintEvent& e);
json to_json(const Tip& t);
json to_json(const Window& w, PeriodKind kind);

/// {code, message, detail}
json error_body(const Error& e);
json error_body(std::string_view code, std::string_view message, std::string_view detail = {});

}  // namespace carbon::api
