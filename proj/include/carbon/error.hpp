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

#include <stdexcept>
#include <string>
#include <string_view>

namespace carbon {

enum class ErrorCode {
  // ingestion
  MalformedRow,
  DuplicateKey,
  UnknownCategory,
  UnknownUnit,
  InvalidFactor,
  InvalidTariff,
  MalformedDocument,
  // lookups
  FactorNotFound,
  UnitMismatch,
  ProductNotFound,
  ItemNotFound,
  RestaurantNotFound,
  RegionUnknown,
  // trips
  InvalidGeoPoint,
  InvalidTripRequest,
  TraceTooShort,
  // barcodes
  NonDigitInput,
  BadLength,
  ChecksumMismatch,
  // bills
  TotalNotFound,
  // journal
  InvalidQuantity,
  EntryNotFound,
  EntryImmutable,
  // ledger
  DuplicateEventId,
  InvalidEvent,
  EmptyRegion,
  CorruptLog,
  // service
  InvalidRequest,
  Unauthorized,
  Forbidden,
  DuplicateUser,
  NotFound,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code and
/// an optional detail string (the offending key, line number, etc).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string detail = {})
      : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace carbon
