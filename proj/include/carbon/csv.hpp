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
#include <string>
#include <string_view>
#include <vector>

namespace carbon::csv {

struct Row {
  std::size_t line_no = 0;  // 1-based physical line
  std::vector<std::string> fields;
};

/// Splits UTF-8 CSV text (LF line endings; a trailing CR is tolerated) into
/// rows. Lines starting with '#' and blank lines are skipped. Fields may be
/// double-quoted with "" as the escaped quote; quoted fields cannot span
/// lines. Throws MalformedRow on an unterminated quote.
std::vector<Row> parse(std::string_view text);

/// Verifies that the first row equals `expected` exactly and removes it.
/// An empty row list is accepted (no header, no data).
void expect_header(std::vector<Row>& rows, const std::vector<std::string>& expected);

/// Quotes a field when it contains a comma, quote, or leading '#'.
std::string escape(std::string_view field);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

}  // namespace carbon::csv
