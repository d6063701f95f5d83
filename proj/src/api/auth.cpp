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

#include "carbon/api/auth.hpp"

#include <sodium.h>

#include <mutex>

#include <nlohmann/json.hpp>

#include "carbon/csv.hpp"
#include "carbon/error.hpp"

namespace carbon::api {
namespace {

using nlohmann::json;

constexpr std::size_t kTokenIdBytes = 8;
constexpr std::size_t kSecretBytes = 32;
constexpr std::size_t kSaltBytes = 16;
constexpr std::size_t kDigestBytes = 32;
constexpr std::size_t kMinPasswordLength = 8;

void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw Error(ErrorCode::InvalidRequest, "libsodium initialisation failed");
  });
}

std::string random_hex(std::size_t bytes) {
  std::vector<unsigned char> buf(bytes);
  randombytes_buf(buf.data(), buf.size());
  std::string hex(bytes * 2 + 1, '\0');
  sodium_bin2hex(hex.data(), hex.size(), buf.data(), buf.size());
  hex.pop_back();
  return hex;
}

std::string random_secret() {
  unsigned char buf[kSecretBytes];
  randombytes_buf(buf, sizeof buf);
  const int variant = sodium_base64_VARIANT_URLSAFE_NO_PADDING;
  std::string out(sodium_base64_ENCODED_LEN(sizeof buf, variant), '\0');
  sodium_bin2base64(out.data(), out.size(), buf, sizeof buf, variant);
  out.resize(out.find('\0'));
  return out;
}

bool valid_user_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

[[noreturn]] void unauthorized(const char* why) { throw Error(ErrorCode::Unauthorized, why); }

}  // namespace

std::string token_digest_hex(std::string_view salt_hex, std::string_view secret) {
  ensure_sodium();
  unsigned char salt[kSaltBytes];
  std::size_t salt_len = 0;
  if (sodium_hex2bin(salt, sizeof salt, salt_hex.data(), salt_hex.size(), nullptr, &salt_len, nullptr) != 0 ||
      salt_len != kSaltBytes) {
    throw Error(ErrorCode::CorruptLog, "bad token salt");
  }
  unsigned char digest[kDigestBytes];
  crypto_generichash(digest, sizeof digest, reinterpret_cast<const unsigned char*>(secret.data()), secret.size(), salt,
                     sizeof salt);
  char hex[kDigestBytes * 2 + 1];
  sodium_bin2hex(hex, sizeof hex, digest, sizeof digest);
  return hex;
}

UserDirectory::UserDirectory() { ensure_sodium(); }
UserDirectory::~UserDirectory() = default;

std::unique_ptr<UserDirectory> UserDirectory::open(const std::filesystem::path& path, RecoveryReport* report) {
  auto dir = std::make_unique<UserDirectory>();
  UserDirectory* raw = dir.get();
  dir->log_ = AppendLog::open(path, [raw](std::string_view line) { raw->apply_record(line); }, report);
  return dir;
}

void UserDirectory::apply_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
    const auto op = j.at("op").get<std::string>();
    if (op == "user") {
      Account a;
      a.profile.user_id = j.at("user_id").get<std::string>();
      a.profile.display_name = j.at("display_name").get<std::string>();
      a.profile.region = j.at("region").get<std::string>();
      a.password_hash = j.at("password_hash").get<std::string>();
      if (accounts_.count(a.profile.user_id) != 0) throw Error(ErrorCode::CorruptLog, "duplicate user record");
      std::string id = a.profile.user_id;
      accounts_.emplace(std::move(id), std::move(a));
    } else if (op == "token") {
      TokenRecord t{j.at("user_id").get<std::string>(), j.at("salt").get<std::string>(),
                    j.at("digest").get<std::string>()};
      if (accounts_.count(t.user_id) == 0) throw Error(ErrorCode::CorruptLog, "token for unknown user");
      tokens_.insert_or_assign(j.at("token_id").get<std::string>(), std::move(t));
    } else {
      throw Error(ErrorCode::CorruptLog, "unknown user record op " + op);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CorruptLog, std::string("malformed user record: ") + e.what());
  }
}

void UserDirectory::persist(const std::string& line) {
  if (log_) log_->append(line);
}

IssuedToken UserDirectory::issue_locked(const std::string& user_id) {
  std::string token_id = random_hex(kTokenIdBytes);
  while (tokens_.count(token_id) != 0) token_id = random_hex(kTokenIdBytes);
  const std::string secret = random_secret();
  TokenRecord rec{user_id, random_hex(kSaltBytes), {}};
  rec.digest_hex = token_digest_hex(rec.salt_hex, secret);
  persist(json{{"op", "token"},
               {"token_id", token_id},
               {"user_id", user_id},
               {"salt", rec.salt_hex},
               {"digest", rec.digest_hex}}
              .dump());
  tokens_.emplace(token_id, std::move(rec));
  return IssuedToken{user_id, token_id + "." + secret};
}

IssuedToken UserDirectory::signup(std::string_view user_id, std::string_view password, std::string_view display_name,
                                  std::string_view region) {
  if (!valid_user_id(user_id)) {
    throw Error(ErrorCode::InvalidRequest, "user_id must be 1-64 characters of [A-Za-z0-9_.-]");
  }
  if (password.size() < kMinPasswordLength) {
    throw Error(ErrorCode::InvalidRequest, "password must have at least 8 characters");
  }
  const std::string area = csv::to_lower(csv::trim(region));
  if (area.empty()) throw Error(ErrorCode::InvalidRequest, "region is required");

  char hash[crypto_pwhash_STRBYTES];
  if (crypto_pwhash_str(hash, password.data(), password.size(), crypto_pwhash_OPSLIMIT_INTERACTIVE,
                        crypto_pwhash_MEMLIMIT_INTERACTIVE) != 0) {
    throw Error(ErrorCode::InvalidRequest, "password hashing failed");
  }

  std::unique_lock lock(mutex_);
  if (accounts_.count(user_id) != 0) {
    throw Error(ErrorCode::DuplicateUser, "user already exists", std::string(user_id));
  }
  Account a;
  a.profile.user_id = std::string(user_id);
  a.profile.display_name = csv::trim(display_name).empty() ? a.profile.user_id : csv::trim(display_name);
  a.profile.region = area;
  a.password_hash = hash;
  persist(json{{"op", "user"},
               {"user_id", a.profile.user_id},
               {"display_name", a.profile.display_name},
               {"region", a.profile.region},
               {"password_hash", a.password_hash}}
              .dump());
  accounts_.emplace(a.profile.user_id, a);
  return issue_locked(a.profile.user_id);
}

IssuedToken UserDirectory::login(std::string_view user_id, std::string_view password) {
  std::string stored_hash;
  {
    std::shared_lock lock(mutex_);
    auto it = accounts_.find(user_id);
    if (it == accounts_.end()) unauthorized("unknown user or wrong password");
    stored_hash = it->second.password_hash;
  }
  if (crypto_pwhash_str_verify(stored_hash.c_str(), password.data(), password.size()) != 0) {
    unauthorized("unknown user or wrong password");
  }
  std::unique_lock lock(mutex_);
  return issue_locked(std::string(user_id));
}

std::string UserDirectory::authenticate(std::string_view token) const {
  const auto dot = token.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 >= token.size()) unauthorized("malformed token");
  const std::string_view id = token.substr(0, dot);
  const std::string_view secret = token.substr(dot + 1);

  std::shared_lock lock(mutex_);
  auto it = tokens_.find(id);
  if (it == tokens_.end()) unauthorized("unknown token");
  const std::string computed = token_digest_hex(it->second.salt_hex, secret);
  const std::string& stored = it->second.digest_hex;
  if (computed.size() != stored.size() || sodium_memcmp(computed.data(), stored.data(), stored.size()) != 0) {
    unauthorized("invalid token");
  }
  return it->second.user_id;
}

std::optional<UserProfile> UserDirectory::profile(std::string_view user_id) const {
  std::shared_lock lock(mutex_);
  auto it = accounts_.find(user_id);
  if (it == accounts_.end()) return std::nullopt;
  return it->second.profile;
}

std::vector<UserProfile> UserDirectory::profiles() const {
  std::shared_lock lock(mutex_);
  std::vector<UserProfile> out;
  out.reserve(accounts_.size());
  for (const auto& [id, a] : accounts_) out.push_back(a.profile);
  return out;
}

}  // namespace carbon::api
