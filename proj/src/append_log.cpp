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

#include "carbon/append_log.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>

#include "carbon/error.hpp"
#include "carbon/factor_registry.hpp"

namespace carbon {
namespace {

void write_all(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::CorruptLog, std::string("log write failed: ") + std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

AppendLog::~AppendLog() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<AppendLog> AppendLog::open(const std::filesystem::path& path, const Apply& apply,
                                           RecoveryReport* report) {
  RecoveryReport rep;
  bool needs_newline = false;
  if (std::filesystem::exists(path)) {
    const std::string text = read_text_file(path.string());
    std::size_t pos = 0;
    std::size_t good_end = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      const bool terminated = end != std::string::npos;
      if (!terminated) end = text.size();
      const std::string_view line(text.data() + pos, end - pos);
      const bool is_last = !terminated || end + 1 >= text.size();
      if (!line.empty()) {
        try {
          apply(line);
          ++rep.records;
          needs_newline = !terminated;
        } catch (const Error& e) {
          if (!is_last) {
            throw Error(ErrorCode::CorruptLog, "corrupt record in " + path.string() + ": " + e.what(),
                        std::to_string(pos));
          }
          break;
        }
      }
      good_end = terminated ? end + 1 : end;
      pos = end + 1;
    }
    if (good_end < text.size()) {
      rep.truncated_bytes = text.size() - good_end;
      std::filesystem::resize_file(path, good_end);
    }
  } else if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(ErrorCode::CorruptLog, "cannot open log " + path.string());
  std::unique_ptr<AppendLog> log(new AppendLog(path, fd));
  if (needs_newline) write_all(fd, "\n");
  if (report) *report = rep;
  return log;
}

void AppendLog::append(std::string_view line) {
  std::string buf;
  buf.reserve(line.size() + 1);
  buf.append(line);
  buf.push_back('\n');
  std::lock_guard lock(mutex_);
  write_all(fd_, buf);
  if (::fsync(fd_) != 0) throw Error(ErrorCode::CorruptLog, "fsync failed on " + path_.string());
}

}  // namespace carbon
