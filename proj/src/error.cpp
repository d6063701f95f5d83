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

#include "carbon/error.hpp"

namespace carbon {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::UnknownUnit: return "UnknownUnit";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::InvalidTariff: return "InvalidTariff";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::FactorNotFound: return "FactorNotFound";
    case ErrorCode::UnitMismatch: return "UnitMismatch";
    case ErrorCode::ProductNotFound: return "ProductNotFound";
    case ErrorCode::ItemNotFound: return "ItemNotFound";
    case ErrorCode::RestaurantNotFound: return "RestaurantNotFound";
    case ErrorCode::RegionUnknown: return "RegionUnknown";
    case ErrorCode::InvalidGeoPoint: return "InvalidGeoPoint";
    case ErrorCode::InvalidTripRequest: return "InvalidTripRequest";
    case ErrorCode::TraceTooShort: return "TraceTooShort";
    case ErrorCode::NonDigitInput: return "NonDigitInput";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::TotalNotFound: return "TotalNotFound";
    case ErrorCode::InvalidQuantity: return "InvalidQuantity";
    case ErrorCode::EntryNotFound: return "EntryNotFound";
    case ErrorCode::EntryImmutable: return "EntryImmutable";
    case ErrorCode::DuplicateEventId: return "DuplicateEventId";
    case ErrorCode::InvalidEvent: return "InvalidEvent";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::CorruptLog: return "CorruptLog";
    case ErrorCode::InvalidRequest: return "InvalidRequest";
    case ErrorCode::Unauthorized: return "Unauthorized";
    case ErrorCode::Forbidden: return "Forbidden";
    case ErrorCode::DuplicateUser: return "DuplicateUser";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

}  // namespace carbon
