// Copyright 2026 The vSIM Authors
//
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

#include "vsim/provisioner/config.hpp"

#include <system_error>

#include "vsim/common/file_io.hpp"
#include "vsim/common/key_value.hpp"

namespace vsim::provisioner {
namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

std::uint64_t bounded(const KeyValueFile& kv, const std::string& key, std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t v = kv.get_u64(key);
  if (v < lo || v > hi) throw Error(ErrorCode::kConfigError, key + ": out of range");
  return v;
}

void wipe_string(std::string& s) {
  secure_wipe(std::span<std::uint8_t>(reinterpret_cast<std::uint8_t*>(s.data()), s.size()));
}

crypto::Scalar read_static_secret(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kConfigError, "static_key_file: cannot read " + path.string());
  }
  Bytes raw = read_file(path);
  std::string text(raw.begin(), raw.end());
  secure_wipe(raw);
  std::string line = text.substr(0, text.find_first_of("\r\n"));
  std::optional<crypto::Scalar> s;
  try {
    s = crypto::Scalar::from_bytes(array_from_hex<32>(line));
  } catch (const Error&) {
  }
  wipe_string(text);
  wipe_string(line);
  if (!s || s->is_zero()) throw Error(ErrorCode::kConfigError, "static_key_file: not a valid scalar");
  return *s;
}

}  // namespace

ProvisionerConfig ProvisionerConfig::load(const std::filesystem::path& path) {
  KeyValueFile kv = KeyValueFile::load(path);
  const std::filesystem::path base = path.parent_path();

  ProvisionerConfig c;
  if (auto h = kv.find("listen_host")) c.listen_host = *h;
  if (kv.has("listen_port")) c.listen_port = static_cast<std::uint16_t>(bounded(kv, "listen_port", 0, 0xffff));
  c.static_key_file = resolve(base, kv.get("static_key_file"));
  c.static_secret = read_static_secret(c.static_key_file);
  try {
    c.group_public_key = crypto::GroupPublicKey::parse(kv.get_hex("group_public_key"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    throw Error(ErrorCode::kConfigError, "group_public_key: invalid");
  }
  c.revocation_file = resolve(base, kv.get("revocation_file"));
  c.expected_measurement.digest = kv.get_hex_array<32>("expected_measurement");
  c.inventory = resolve(base, kv.get("inventory"));
  c.basename = kv.get("basename");
  if (c.basename.empty()) throw Error(ErrorCode::kConfigError, "basename: empty");
  if (kv.has("tee_version")) c.tee_version = static_cast<std::uint16_t>(bounded(kv, "tee_version", 0, 0xffff));
  if (kv.has("session_timeout")) c.session_timeout = bounded(kv, "session_timeout", 1, 86'400);
  if (kv.has("replay_window")) c.replay_window = bounded(kv, "replay_window", 1, 1ull << 32);
  if (kv.has("replay_capacity")) c.replay_capacity = bounded(kv, "replay_capacity", 1, 1ull << 24);
  if (auto log = kv.find("session_log")) c.session_log = resolve(base, *log);
  if (kv.has("rng_seed")) c.rng_seed = kv.get_hex_array<32>("rng_seed");

  std::error_code ec;
  for (const auto& p : {c.inventory, c.revocation_file}) {
    if (!std::filesystem::is_directory(p.parent_path().empty() ? "." : p.parent_path(), ec)) {
      throw Error(ErrorCode::kConfigError, "directory does not exist for " + p.string());
    }
  }
  return c;
}

}  // namespace vsim::provisioner
