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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <ranges>
#include <type_traits>
#include <vector>

namespace carbon {

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Shared "better alternatives" ranking: keeps candidates accepted by
/// `eligible` whose footprint is strictly below `reference`, orders them
/// ascending by footprint and then by `tie_key`, and truncates to `limit`.
///
/// Used by the barcode scanner, the menu recommender and the trip engine so
/// that all three agree on what "better" means.
template <std::ranges::input_range Range, class Eligible, class Footprint, class TieKey>
auto rank_lower_alternatives(const Range& candidates, double reference, Eligible&& eligible, Footprint&& footprint,
                             TieKey&& tie_key, std::size_t limit = kUnlimited) {
  using Value = std::remove_cvref_t<std::ranges::range_reference_t<const Range>>;
  std::vector<Value> out;
  for (const auto& c : candidates) {
    if (std::invoke(eligible, c) && std::invoke(footprint, c) < reference) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [&](const Value& a, const Value& b) {
    const double fa = std::invoke(footprint, a);
    const double fb = std::invoke(footprint, b);
    if (fa != fb) return fa < fb;
    return std::invoke(tie_key, a) < std::invoke(tie_key, b);
  });
  if (out.size() > limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(limit), out.end());
  return out;
}

}  // namespace carbon
