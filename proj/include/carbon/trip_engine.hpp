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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carbon/factor_registry.hpp"
#include "carbon/time.hpp"

namespace carbon {

inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

/// Throws InvalidGeoPoint for non-finite or out-of-range coordinates.
void validate(const GeoPoint& p);

struct TripRequest {
  std::string user_id;
  std::vector<GeoPoint> trace;
  std::optional<double> declared_distance_km;
  std::string mode;
  std::string fuel;
  Instant timestamp{};
};

struct TripRecord {
  TripRequest request;
  double distance_km = 0.0;
  double footprint_kg = 0.0;

  /// "mode:fuel", the registry variant used.
  std::string variant() const;
};

struct AlternativeSuggestion {
  std::string mode;
  std::string fuel;
  double footprint_kg = 0.0;
  double savings_kg = 0.0;
};

/// Great-circle distance on a sphere of radius kEarthRadiusKm.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

/// Sum of consecutive haversine legs. Throws TraceTooShort below 2 points.
double trace_distance_km(const std::vector<GeoPoint>& trace);

/// Source of trip distance. The built-in provider measures the GPS trace;
/// a road-routing provider can be substituted.
class DistanceProvider {
 public:
  virtual ~DistanceProvider() = default;
  virtual double distance_km(const TripRequest& request) const = 0;
};

class TraceDistanceProvider final : public DistanceProvider {
 public:
  double distance_km(const TripRequest& request) const override;
};

std::string travel_variant(std::string_view mode, std::string_view fuel);

/// Throws InvalidTripRequest unless exactly one of trace / declared distance
/// is given (declared must be finite and >= 0; trace must have >= 2 points),
/// and mode/fuel are non-empty.
void validate(const TripRequest& request);

TripRecord compute_trip(const TripRequest& request, const FactorRegistry& registry,
                        const DistanceProvider& provider = TraceDistanceProvider{});

/// Every travel variant whose footprint over the same distance is strictly
/// below the record's, ascending by footprint then by "mode:fuel".
std::vector<AlternativeSuggestion> suggest_alternatives(const TripRecord& record, const FactorRegistry& registry);

}  // namespace carbon
