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

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "carbon/append_log.hpp"
#include "carbon/leaderboard.hpp"

namespace carbon::api {

struct IssuedToken {
  std::string user_id;
  std::string token;  // "<id>.<secret>", shown to the client once
};

/// User profiles plus credentials. Passwords are stored as Argon2id strings;
/// bearer tokens as a salted BLAKE2b digest of their secret half, compared
/// in constant time.
class UserDirectory {
 public:
  UserDirectory();
  ~UserDirectory();
  UserDirectory(const UserDirectory&) = delete;
  UserDirectory& operator=(const UserDirectory&) = delete;

  static std::unique_ptr<UserDirectory> open(const std::filesystem::path& path, RecoveryReport* report = nullptr);

  /// Throws DuplicateUser, InvalidRequest (bad id, short password, empty
  /// region).
  IssuedToken signup(std::string_view user_id, std::string_view password, std::string_view display_name,
                     std::string_view region);
  /// Throws Unauthorized.
  IssuedToken login(std::string_view user_id, std::string_view password);
  /// Resolves a bearer token to its user. Throws Unauthorized.
  std::string authenticate(std::string_view token) const;

  std::optional<UserProfile> profile(std::string_view user_id) const;
  /// Ordered by user_id.
  std::vector<UserProfile> profiles() const;

 private:
  struct Account {
    UserProfile profile;
    std::string password_hash;
  };
  struct TokenRecord {
    std::string user_id;
    std::string salt_hex;
    std::string digest_hex;
  };

  void apply_record(std::string_view line);
  IssuedToken issue_locked(const std::string& user_id);
  void persist(const std::string& line);

  mutable std::shared_mutex mutex_;
  std::map<std::string, Account, std::less<>> accounts_;
  std::map<std::string, TokenRecord, std::less<>> tokens_;
  std::unique_ptr<AppendLog> log_;
};

/// Lowercase hex of the keyed BLAKE2b-256 digest of `secret` under `salt`.
std::string token_digest_hex(std::string_view salt_hex, std::string_view secret);

}  // namespace carbon::api
