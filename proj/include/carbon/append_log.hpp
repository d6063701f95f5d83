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
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <string_view>

namespace carbon {

struct RecoveryReport {
  std::size_t records = 0;
  std::size_t truncated_bytes = 0;  // corrupt tail removed during recovery
};

/// Durable line-oriented log. Each append is one write(2) of `line + '\n'`
/// followed by fsync(2).
class AppendLog {
 public:
  using Apply = std::function<void(std::string_view line)>;

  ~AppendLog();
  AppendLog(const AppendLog&) = delete;
  AppendLog& operator=(const AppendLog&) = delete;

  /// Replays every line through `apply` (which throws carbon::Error to
  /// reject a line). A rejected final line is truncated away; a rejected
  /// line anywhere else throws CorruptLog. Creates the file if absent.
  static std::unique_ptr<AppendLog> open(const std::filesystem::path& path, const Apply& apply,
                                         RecoveryReport* report = nullptr);

  void append(std::string_view line);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  AppendLog(std::filesystem::path path, int fd) : path_(std::move(path)), fd_(fd) {}

  std::filesystem::path path_;
  int fd_ = -1;
  std::mutex mutex_;
};

}  // namespace carbon
