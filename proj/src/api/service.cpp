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

#include "carbon/api/service.hpp"

#include <charconv>
#include <set>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "carbon/api/json_codec.hpp"
#include "carbon/csv.hpp"
#include "carbon/decimal.hpp"
#include "carbon/error.hpp"
#include "carbon/trip_engine.hpp"

namespace carbon::api {
namespace {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGeoPoint:
    case ErrorCode::InvalidTripRequest:
    case ErrorCode::TraceTooShort:
    case ErrorCode::NonDigitInput:
    case ErrorCode::BadLength:
    case ErrorCode::ChecksumMismatch:
    case ErrorCode::InvalidQuantity:
    case ErrorCode::InvalidEvent:
    case ErrorCode::InvalidRequest:
    case ErrorCode::MalformedDocument:
    case ErrorCode::MalformedRow:
      return 400;
    case ErrorCode::Unauthorized:
      return 401;
    case ErrorCode::Forbidden:
      return 403;
    case ErrorCode::ProductNotFound:
    case ErrorCode::RestaurantNotFound:
    case ErrorCode::EntryNotFound:
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::DuplicateUser:
    case ErrorCode::DuplicateEventId:
    case ErrorCode::DuplicateKey:
    case ErrorCode::EntryImmutable:
      return 409;
    case ErrorCode::FactorNotFound:
    case ErrorCode::UnitMismatch:
    case ErrorCode::ItemNotFound:
    case ErrorCode::RegionUnknown:
    case ErrorCode::TotalNotFound:
    case ErrorCode::EmptyRegion:
    case ErrorCode::InvalidTariff:
    case ErrorCode::InvalidFactor:
      return 422;
    case ErrorCode::UnknownCategory:
    case ErrorCode::UnknownUnit:
    case ErrorCode::CorruptLog:
      return 500;
  }
  return 500;
}

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

[[noreturn]] void bad_request(const std::string& message, const std::string& detail = {}) {
  throw Error(ErrorCode::InvalidRequest, message, detail);
}

json parse_body(const httplib::Request& req) {
  json body;
  try {
    body = req.body.empty() ? json::object() : json::parse(req.body);
  } catch (const json::parse_error&) {
    bad_request("request body is not valid JSON");
  }
  if (!body.is_object()) bad_request("request body must be a JSON object");
  return body;
}

std::string require_string(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) bad_request(std::string("'") + key + "' must be a string", key);
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) bad_request(std::string("'") + key + "' must be a string", key);
  return it->get<std::string>();
}

std::optional<double> optional_number(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) bad_request(std::string("'") + key + "' must be a number", key);
  return it->get<double>();
}

std::optional<std::int64_t> optional_integer(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) bad_request(std::string("'") + key + "' must be an integer", key);
  return it->get<std::int64_t>();
}

std::optional<Instant> optional_instant(const json& body, const char* key) {
  const auto text = optional_string(body, key);
  if (!text) return std::nullopt;
  const auto t = parse_rfc3339(*text);
  if (!t) bad_request(std::string("'") + key + "' must be an RFC 3339 timestamp", key);
  return t;
}

std::optional<std::string> query(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) return std::nullopt;
  return req.get_param_value(key);
}

std::size_t parse_limit(const httplib::Request& req) {
  const auto text = query(req, "limit");
  if (!text) return 4;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc{} || ptr != text->data() + text->size() || v == 0) bad_request("'limit' must be >= 1", *text);
  return v;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string item = csv::trim(s.substr(pos, end - pos));
    if (!item.empty()) out.push_back(std::move(item));
    pos = end + 1;
  }
  return out;
}

json period_totals_json(const std::map<EventSource, CarbonMass>& by_source) {
  json j = json::object();
  for (const auto& [s, m] : by_source) j[std::string(to_string(s))] = m.kg();
  return j;
}

}  // namespace

Stores load_stores(const ServiceConfig& config) {
  Stores s;
  s.factors = std::make_shared<const FactorRegistry>(load_factors_file(config.factors_csv.string()));
  s.catalog = std::make_shared<const Catalog>(load_catalog_file(config.catalog_csv.string()));
  s.tariffs = std::make_shared<const TariffTable>(load_tariffs_file(config.tariffs_csv.string()));
  s.menus = std::make_shared<const MenuStore>(load_menus_file(config.menus_json.string()));
  s.tips = std::make_shared<const TipsConfig>(load_tips_config_file(config.tips_config.string()));
  return s;
}

Service::Service(ServiceConfig config, Clock clock) : config_(std::move(config)), clock_(std::move(clock)) {
  config_.validate();
  stores_ = load_stores(config_);

  const auto report = [](const char* what, const RecoveryReport& r) {
    if (r.truncated_bytes > 0) {
      spdlog::warn("{} log: truncated {} bytes of corrupt trailing data", what, r.truncated_bytes);
    }
    spdlog::info("{} log: replayed {} records", what, r.records);
  };
  RecoveryReport rep;
  users_ = UserDirectory::open(config_.users_log(), &rep);
  report("users", rep);
  ledger_ = Ledger::open(config_.events_log(), &rep);
  report("events", rep);
  journal_ = Journal::open(config_.journal_log(), clock_, make_uuid, &rep);
  report("journal", rep);
  if (const auto repaired = journal_->reconcile(*ledger_); repaired > 0) {
    spdlog::warn("journal: marked {} entries purchased from ledger events", repaired);
  }
}

Service::~Service() = default;

void Service::reload() {
  Stores fresh = load_stores(config_);
  std::lock_guard lock(stores_mutex_);
  stores_ = std::move(fresh);
  spdlog::info("reference data reloaded (factor registry version {})", stores_.factors->version());
}

Stores Service::stores() const {
  std::lock_guard lock(stores_mutex_);
  return stores_;
}

/// Request handlers. Each handler authenticates first, so unauthorized
/// requests never reach module state.
class Service::Routes {
 public:
  explicit Routes(Service& svc) : svc_(svc) {}

  /// Each handler co-owns the routes object.
  template <class Fn>
  static httplib::Server::Handler guarded(std::shared_ptr<Routes> self, Fn fn) {
    return [self = std::move(self), fn](const httplib::Request& req, httplib::Response& res) {
      try {
        ((*self).*fn)(req, res);
      } catch (const Error& e) {
        send(res, status_for(e.code()), error_body(e));
      } catch (const json::exception& e) {
        send(res, 400, error_body("InvalidRequest", e.what()));
      } catch (const std::exception& e) {
        spdlog::error("{} {}: {}", req.method, req.path, e.what());
        send(res, 500, error_body("Internal", e.what()));
      }
    };
  }

  std::string acting_user(const httplib::Request& req) const {
    const std::string header = req.get_header_value("Authorization");
    constexpr std::string_view prefix = "Bearer ";
    if (header.size() <= prefix.size() || std::string_view(header).substr(0, prefix.size()) != prefix) {
      throw Error(ErrorCode::Unauthorized, "missing bearer token");
    }
    return svc_.users().authenticate(csv::trim(std::string_view(header).substr(prefix.size())));
  }

  Instant now() const { return svc_.clock_(); }

  Period period_from(const httplib::Request& req) const {
    Period p;
    if (const auto kind = query(req, "kind")) {
      const auto k = parse_period_kind(*kind);
      if (!k) bad_request("'kind' must be weekly or monthly", *kind);
      p.kind = *k;
    }
    if (const auto anchor = query(req, "anchor")) {
      const auto d = parse_date(*anchor);
      if (!d) bad_request("'anchor' must be YYYY-MM-DD", *anchor);
      p.anchor = *d;
    } else {
      p.anchor = std::chrono::floor<std::chrono::days>(now());
    }
    return p;
  }

  FootprintEvent commit(const std::string& user, EventSource source, double kg, Instant at, std::string detail) {
    FootprintEvent e;
    e.event_id = make_uuid();
    e.user_id = user;
    e.source = source;
    e.kg_co2e = CarbonMass::from_kg(kg);
    e.occurred_at = at;
    e.detail = std::move(detail);
    svc_.ledger().append(e);
    return e;
  }

  JournalEntry owned_entry(const std::string& user, const std::string& id) const {
    auto entry = svc_.journal().find(id);
    if (!entry) throw Error(ErrorCode::EntryNotFound, "no journal entry " + id, id);
    if (entry->user_id != user) throw Error(ErrorCode::Forbidden, "entry belongs to another user", id);
    return *entry;
  }

  // --- accounts -----------------------------------------------------------

  void signup(const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    const auto issued = svc_.users().signup(require_string(body, "user_id"), require_string(body, "password"),
                                            optional_string(body, "display_name").value_or(""),
                                            require_string(body, "region"));
    send(res, 201, {{"user_id", issued.user_id}, {"token", issued.token}});
  }

  void login(const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    const auto issued = svc_.users().login(require_string(body, "user_id"), require_string(body, "password"));
    send(res, 200, {{"user_id", issued.user_id}, {"token", issued.token}});
  }

  void me(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const auto p = svc_.users().profile(user);
    send(res, 200, {{"user_id", p->user_id}, {"display_name", p->display_name}, {"region", p->region}});
  }

  // --- trips --------------------------------------------------------------

  void create_trip(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const json body = parse_body(req);
    const Stores stores = svc_.stores();
    TripRequest trip;
    trip.user_id = user;
    trip.mode = require_string(body, "mode");
    trip.fuel = require_string(body, "fuel");
    trip.declared_distance_km = optional_number(body, "declared_distance_km");
    if (auto it = body.find("trace"); it != body.end() && !it->is_null()) {
      if (!it->is_array()) bad_request("'trace' must be an array of {lat, lon}");
      for (const auto& p : *it) {
        if (!p.is_object() || !p.contains("lat") || !p.contains("lon") || !p["lat"].is_number() ||
            !p["lon"].is_number()) {
          bad_request("trace points need numeric lat and lon");
        }
        trip.trace.push_back(GeoPoint{p["lat"].get<double>(), p["lon"].get<double>()});
      }
      if (trip.trace.empty()) bad_request("'trace' must not be empty");
    }
    trip.timestamp = optional_instant(body, "timestamp").value_or(optional_instant(body, "occurred_at").value_or(now()));

    const TripRecord record = compute_trip(trip, *stores.factors);
    char detail[96];
    std::snprintf(detail, sizeof detail, "trip:%s %.3f km", record.variant().c_str(), record.distance_km);
    const auto event = commit(user, EventSource::trip, record.footprint_kg, trip.timestamp, detail);
    send(res, 201, {{"trip", to_json(record)}, {"event", to_json(event)}});
  }

  void trip_alternatives(const httplib::Request& req, httplib::Response& res) {
    acting_user(req);
    const Stores stores = svc_.stores();
    const auto mode = query(req, "mode");
    const auto fuel = query(req, "fuel");
    const auto distance_text = query(req, "distance_km");
    if (!mode || !fuel || !distance_text) bad_request("mode, fuel and distance_km are required");
    const auto distance = parse_plain_double(*distance_text);
    if (!distance) bad_request("'distance_km' must be a plain decimal", *distance_text);
    TripRequest trip;
    trip.mode = *mode;
    trip.fuel = *fuel;
    trip.declared_distance_km = *distance;
    const TripRecord record = compute_trip(trip, *stores.factors);
    json alts = json::array();
    for (const auto& s : suggest_alternatives(record, *stores.factors)) alts.push_back(to_json(s));
    send(res, 200,
         {{"mode", record.request.mode},
          {"fuel", record.request.fuel},
          {"distance_km", record.distance_km},
          {"footprint_kg", record.footprint_kg},
          {"alternatives", std::move(alts)}});
  }

  // --- barcode scanner ----------------------------------------------------

  void scan(const httplib::Request& req, httplib::Response& res) {
    acting_user(req);
    const json body = parse_body(req);
    const Stores stores = svc_.stores();
    const Barcode code = parse_barcode(require_string(body, "raw_barcode"));
    const Product& product = stores.catalog->lookup(code);
    json alts = json::array();
    for (const auto& p : alternatives(*stores.catalog, product, 4)) alts.push_back(to_json(p));
    send(res, 200, {{"product", to_json(product)}, {"alternatives", std::move(alts)}});
  }

  void scan_commit(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const json body = parse_body(req);
    const Stores stores = svc_.stores();
    const Barcode code = parse_barcode(require_string(body, "barcode"));
    const Product product = stores.catalog->lookup(code);
    const std::int64_t quantity = optional_integer(body, "quantity").value_or(1);
    if (quantity < 1) throw Error(ErrorCode::InvalidQuantity, "quantity must be at least 1");
    const Instant at = optional_instant(body, "occurred_at").value_or(now());
    FootprintEvent e;
    e.event_id = make_uuid();
    e.user_id = user;
    e.source = EventSource::purchase;
    e.kg_co2e = quantity * CarbonMass::from_kg(product.footprint_kg);
    e.occurred_at = at;
    e.detail = "scan:" + code.digits() + " x" + std::to_string(quantity);
    svc_.ledger().append(e);
    send(res, 201, {{"product", to_json(product)}, {"quantity", quantity}, {"event", to_json(e)}});
  }

  // --- bills and meals ----------------------------------------------------

  void bill(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const json body = parse_body(req);
    const Stores stores = svc_.stores();
    std::string region = optional_string(body, "region").value_or("");
    if (csv::trim(region).empty()) region = svc_.users().profile(user)->region;
    const BillText text = BillText::from_text(require_string(body, "text"), region);
    const BillReading reading = bill_footprint(text, *stores.tariffs, *stores.factors);
    const Instant at = optional_instant(body, "occurred_at").value_or(now());
    const auto event = commit(user, EventSource::electricity, reading.footprint_kg, at,
                              "bill:" + reading.region + " " + reading.kwh.to_string() + " kWh");
    send(res, 201, {{"reading", to_json(reading)}, {"event", to_json(event)}});
  }

  void meal(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const json body = parse_body(req);
    const Stores stores = svc_.stores();
    const std::string restaurant = require_string(body, "restaurant_id");
    const std::string item_id = require_string(body, "item_id");
    const RatedMenuItem rated = rate(stores.menus->get(restaurant).item(item_id), *stores.factors);
    const Instant at = optional_instant(body, "occurred_at").value_or(now());
    const auto event = commit(user, EventSource::meal, rated.footprint_kg, at, "meal:" + restaurant + "/" + item_id);
    send(res, 201, {{"item", to_json(rated)}, {"footprint_kg", rated.footprint_kg}, {"event", to_json(event)}});
  }

  void menu(const httplib::Request& req, httplib::Response& res) {
    acting_user(req);
    const Stores stores = svc_.stores();
    const Menu& m = stores.menus->get(req.matches[1].str());
    json items = json::array();
    for (const auto& it : m.items) items.push_back(to_json(rate(it, *stores.factors)));
    send(res, 200, {{"restaurant_id", m.restaurant_id}, {"items", std::move(items)}});
  }

  void menu_recommend(const httplib::Request& req, httplib::Response& res) {
    acting_user(req);
    const Stores stores = svc_.stores();
    const Menu& m = stores.menus->get(req.matches[1].str());
    const auto item = query(req, "item");
    if (!item) bad_request("'item' query parameter is required");
    const std::size_t limit = parse_limit(req);
    const RatedMenuItem chosen = rate(m.item(*item), *stores.factors);
    json recs = json::array();
    for (const auto& r : recommend_menu(m, *item, *stores.factors, limit)) recs.push_back(to_json(r));
    send(res, 200,
         {{"restaurant_id", m.restaurant_id}, {"chosen", to_json(chosen)}, {"recommendations", std::move(recs)}});
  }

  // --- journal ------------------------------------------------------------

  void journal_create(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const json body = parse_body(req);
    const Stores stores = svc_.stores();
    std::optional<Barcode> code;
    if (const auto raw = optional_string(body, "barcode")) code = parse_barcode(*raw);
    const auto entry =
        svc_.journal().create(user, optional_string(body, "label").value_or(""), code,
                              optional_integer(body, "quantity").value_or(1), *stores.catalog,
                              optional_number(body, "footprint_kg_each"));
    send(res, 201, to_json(entry));
  }

  void journal_list(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const std::string owner = query(req, "user_id").value_or(user);
    if (owner != user) throw Error(ErrorCode::Forbidden, "cannot read another user's journal", owner);
    json entries = json::array();
    for (const auto& e : svc_.journal().list(user)) entries.push_back(to_json(e));
    send(res, 200, {{"user_id", user}, {"entries", std::move(entries)}});
  }

  void journal_get(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    send(res, 200, to_json(owned_entry(user, req.matches[1].str())));
  }

  void journal_update(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const std::string id = req.matches[1].str();
    owned_entry(user, id);
    const json body = parse_body(req);
    const Stores stores = svc_.stores();
    JournalPatch patch;
    patch.label = optional_string(body, "label");
    patch.quantity = optional_integer(body, "quantity");
    if (const auto raw = optional_string(body, "barcode")) patch.barcode = parse_barcode(*raw);
    patch.footprint_kg_each = optional_number(body, "footprint_kg_each");
    send(res, 200, to_json(svc_.journal().update(id, patch, *stores.catalog)));
  }

  void journal_delete(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const std::string id = req.matches[1].str();
    owned_entry(user, id);
    svc_.journal().remove(id);
    send(res, 200, {{"deleted", id}});
  }

  void journal_purchase(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const std::string id = req.matches[1].str();
    owned_entry(user, id);
    const json body = parse_body(req);
    const auto event = svc_.journal().purchase(id, svc_.ledger(), optional_instant(body, "occurred_at"));
    send(res, 201, {{"entry", to_json(svc_.journal().get(id))}, {"event", to_json(event)}});
  }

  // --- ledger views -------------------------------------------------------

  void events(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    json list = json::array();
    for (const auto& e : svc_.ledger().events_for(user)) list.push_back(to_json(e));
    send(res, 200, {{"user_id", user}, {"events", std::move(list)}});
  }

  void leaderboard_view(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const Period period = period_from(req);
    const std::string scope = query(req, "scope").value_or("all");
    std::optional<std::set<std::string>> friends;
    if (scope == "friends") {
      friends.emplace();
      for (auto& f : split_list(query(req, "friends").value_or(""))) friends->insert(std::move(f));
      friends->insert(user);
    } else if (scope != "all") {
      bad_request("'scope' must be all or friends", scope);
    }
    const auto profiles = svc_.users().profiles();
    std::map<std::string, std::string> names;
    for (const auto& p : profiles) names[p.user_id] = p.display_name;
    json entries = json::array();
    for (const auto& e : leaderboard(svc_.ledger(), profiles, period, friends)) {
      entries.push_back(
          {{"rank", e.rank}, {"user_id", e.user_id}, {"display_name", names[e.user_id]}, {"total_kg", e.total.kg()}});
    }
    send(res, 200, {{"period", to_json(period.window(), period.kind)}, {"scope", scope}, {"entries", std::move(entries)}});
  }

  void summary(const httplib::Request& req, httplib::Response& res) {
    const auto user = acting_user(req);
    const Period period = period_from(req);
    const Window window = period.window();
    const Stores stores = svc_.stores();
    const auto profile = svc_.users().profile(user);
    const auto by_source = svc_.ledger().source_totals(user, window);
    const PeriodTotal total = svc_.ledger().user_total(user, window);

    json shares = json::object();
    for (const auto& [s, m] : by_source) {
      shares[std::string(to_string(s))] =
          total.total.micro() > 0 ? static_cast<double>(m.micro()) / static_cast<double>(total.total.micro()) : 0.0;
    }
    json area = {{"region", profile->region}};
    try {
      area["average_kg"] = area_average(svc_.ledger(), svc_.users().profiles(), profile->region, period);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyRegion) throw;
      area["average_kg"] = nullptr;
    }
    json tips = json::array();
    for (const auto& t : personalized_tips(svc_.ledger(), user, period, *stores.tips)) tips.push_back(to_json(t));
    send(res, 200,
         {{"user_id", user},
          {"period", to_json(window, period.kind)},
          {"total_kg", total.total.kg()},
          {"by_source", period_totals_json(by_source)},
          {"shares", std::move(shares)},
          {"area", std::move(area)},
          {"tips", std::move(tips)}});
  }

 private:
  Service& svc_;
};

void Service::register_routes(httplib::Server& server) {
  // The server keeps the handlers (and this object) for its lifetime.
  auto routes = std::make_shared<Routes>(*this);
  auto bind = [routes](auto fn) { return Routes::guarded(routes, fn); };

  server.Get("/v1/health", [](const httplib::Request&, httplib::Response& res) { send(res, 200, {{"status", "ok"}}); });
  server.Post("/v1/users", bind(&Routes::signup));
  server.Post("/v1/login", bind(&Routes::login));
  server.Get("/v1/me", bind(&Routes::me));

  server.Post("/v1/trips", bind(&Routes::create_trip));
  server.Get("/v1/trips/alternatives", bind(&Routes::trip_alternatives));

  server.Post("/v1/scan", bind(&Routes::scan));
  server.Post("/v1/scan/commit", bind(&Routes::scan_commit));

  server.Post("/v1/bills", bind(&Routes::bill));
  server.Post("/v1/meals", bind(&Routes::meal));
  server.Get(R"(/v1/menus/([^/]+))", bind(&Routes::menu));
  server.Get(R"(/v1/menus/([^/]+)/recommend)", bind(&Routes::menu_recommend));

  server.Post("/v1/journal", bind(&Routes::journal_create));
  server.Get("/v1/journal", bind(&Routes::journal_list));
  server.Get(R"(/v1/journal/([^/]+))", bind(&Routes::journal_get));
  server.Patch(R"(/v1/journal/([^/]+))", bind(&Routes::journal_update));
  server.Delete(R"(/v1/journal/([^/]+))", bind(&Routes::journal_delete));
  server.Post(R"(/v1/journal/([^/]+)/purchase)", bind(&Routes::journal_purchase));

  server.Get("/v1/events", bind(&Routes::events));
  server.Get("/v1/leaderboard", bind(&Routes::leaderboard_view));
  server.Get("/v1/summary", bind(&Routes::summary));
}

}  // namespace carbon::api
