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

#include "carbon/trip_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "carbon/csv.hpp"
#include "carbon/error.hpp"
#include "carbon/ranking.hpp"

namespace carbon {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

const EmissionFactor& travel_factor(const FactorRegistry& registry, const std::string& variant) {
  const auto& f = registry.lookup(FactorCategory::travel, variant);
  if (f.key.unit != FactorUnit::km) {
    throw Error(ErrorCode::UnitMismatch, "travel factor must be per km", variant);
  }
  return f;
}

}  // namespace

void validate(const GeoPoint& p) {
  if (!std::isfinite(p.lat) || !std::isfinite(p.lon) || p.lat < -90.0 || p.lat > 90.0 || p.lon < -180.0 ||
      p.lon > 180.0) {
    throw Error(ErrorCode::InvalidGeoPoint, "coordinate out of range");
  }
}

std::string TripRecord::variant() const { return travel_variant(request.mode, request.fuel); }

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  validate(a);
  validate(b);
  const double lat1 = a.lat * kDegToRad;
  const double lat2 = b.lat * kDegToRad;
  const double dlat = (b.lat - a.lat) * kDegToRad;
  const double dlon = (b.lon - a.lon) * kDegToRad;
  const double s_lat = std::sin(dlat / 2.0);
  const double s_lon = std::sin(dlon / 2.0);
  // Each term is symmetric in (a, b): sin^2 is even and the cosine product
  // commutes, so the result does not depend on argument order.
  const double cos_product = lat1 <= lat2 ? std::cos(lat1) * std::cos(lat2) : std::cos(lat2) * std::cos(lat1);
  double h = s_lat * s_lat + cos_product * s_lon * s_lon;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

double trace_distance_km(const std::vector<GeoPoint>& trace) {
  if (trace.size() < 2) throw Error(ErrorCode::TraceTooShort, "trace needs at least two points");
  double total = 0.0;
  for (std::size_t i = 1; i < trace.size(); ++i) total += haversine_km(trace[i - 1], trace[i]);
  return total;
}

double TraceDistanceProvider::distance_km(const TripRequest& request) const {
  return trace_distance_km(request.trace);
}

std::string travel_variant(std::string_view mode, std::string_view fuel) {
  return csv::to_lower(csv::trim(mode)) + ":" + csv::to_lower(csv::trim(fuel));
}

void validate(const TripRequest& request) {
  const bool has_trace = !request.trace.empty();
  const bool has_declared = request.declared_distance_km.has_value();
  if (has_trace == has_declared) {
    throw Error(ErrorCode::InvalidTripRequest, "exactly one of trace or declared_distance_km is required");
  }
  if (has_declared && (!std::isfinite(*request.declared_distance_km) || *request.declared_distance_km < 0.0)) {
    throw Error(ErrorCode::InvalidTripRequest, "declared_distance_km must be finite and non-negative");
  }
  if (has_trace && request.trace.size() < 2) {
    throw Error(ErrorCode::TraceTooShort, "trace needs at least two points");
  }
  for (const auto& p : request.trace) validate(p);
  if (csv::trim(request.mode).empty() || csv::trim(request.fuel).empty()) {
    throw Error(ErrorCode::InvalidTripRequest, "mode and fuel are required");
  }
}

TripRecord compute_trip(const TripRequest& request, const FactorRegistry& registry, const DistanceProvider& provider) {
  validate(request);
  TripRecord rec;
  rec.request = request;
  rec.request.mode = csv::to_lower(csv::trim(request.mode));
  rec.request.fuel = csv::to_lower(csv::trim(request.fuel));
  const auto& factor = travel_factor(registry, rec.variant());
  rec.distance_km = request.declared_distance_km ? *request.declared_distance_km : provider.distance_km(request);
  rec.footprint_kg = rec.distance_km * factor.kg_co2e_per_unit;
  return rec;
}

std::vector<AlternativeSuggestion> suggest_alternatives(const TripRecord& record, const FactorRegistry& registry) {
  const std::string own = record.variant();
  std::vector<AlternativeSuggestion> candidates;
  for (const auto& f : registry.list(FactorCategory::travel)) {
    if (f.key.variant == own || f.key.unit != FactorUnit::km) continue;
    const auto colon = f.key.variant.find(':');
    AlternativeSuggestion s;
    s.mode = f.key.variant.substr(0, colon);
    s.fuel = colon == std::string::npos ? std::string{} : f.key.variant.substr(colon + 1);
    s.footprint_kg = record.distance_km * f.kg_co2e_per_unit;
    s.savings_kg = record.footprint_kg - s.footprint_kg;
    candidates.push_back(std::move(s));
  }
  return rank_lower_alternatives(
      candidates, record.footprint_kg, [](const AlternativeSuggestion&) { return true; },
      &AlternativeSuggestion::footprint_kg,
      [](const AlternativeSuggestion& s) { return travel_variant(s.mode, s.fuel); });
}

}  // namespace carbon
