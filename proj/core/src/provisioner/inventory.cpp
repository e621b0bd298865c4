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

#include "vsim/provisioner/inventory.hpp"

#include <sstream>
#include <system_error>

#include "vsim/common/file_io.hpp"

namespace vsim::provisioner {
namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string hex_of(std::string_view s) { return to_hex(as_bytes(s)); }

std::string text_of(const std::string& hex) {
  Bytes b = from_hex(hex);
  return std::string(b.begin(), b.end());
}

template <std::size_t N>
ByteArray<N> field(const std::string& hex) {
  return array_from_hex<N>(hex);
}

}  // namespace

std::string serialize_inventory(const std::vector<ProfileRecord>& records) {
  std::ostringstream out;
  for (const ProfileRecord& r : records) {
    ByteArray<6> sqn;
    store_be48(sqn, r.profile.sqn);
    out << to_hex(r.activation_token) << '\t' << hex_of(r.profile.supi) << '\t' << to_hex(r.profile.k) << '\t'
        << to_hex(r.profile.opc) << '\t' << to_hex(r.profile.amf) << '\t' << to_hex(sqn) << '\t'
        << hex_of(r.profile.carrier_name) << '\t' << hex_of(r.profile.serving_network_name) << '\t'
        << (r.claimed ? "01" : "00") << '\t'
        << (r.claimed_by_pseudonym ? to_hex(r.claimed_by_pseudonym->bytes()) : std::string()) << '\n';
  }
  return out.str();
}

std::vector<ProfileRecord> parse_inventory(std::string_view text) {
  std::vector<ProfileRecord> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    try {
      std::vector<std::string> f = split_tabs(line);
      if (f.size() != 10) throw Error(ErrorCode::kConfigError, "expected 10 fields");
      ProfileRecord r;
      r.activation_token = field<16>(f[0]);
      r.profile.supi = text_of(f[1]);
      r.profile.k = field<32>(f[2]);
      r.profile.opc = field<16>(f[3]);
      r.profile.amf = field<2>(f[4]);
      r.profile.sqn = load_be48(field<6>(f[5]));
      r.profile.carrier_name = text_of(f[6]);
      r.profile.serving_network_name = text_of(f[7]);
      if (f[8] != "00" && f[8] != "01") throw Error(ErrorCode::kConfigError, "claimed must be 00 or 01");
      r.claimed = f[8] == "01";
      if (!f[9].empty()) {
        std::optional<crypto::Point> p = crypto::Point::from_bytes(field<32>(f[9]));
        if (!p) throw Error(ErrorCode::kConfigError, "invalid pseudonym");
        r.claimed_by_pseudonym = *p;
      }
      r.profile.validate();
      out.push_back(std::move(r));
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfigError, "inventory line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

InventoryStore::InventoryStore(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<ProfileRecord> InventoryStore::read_locked() const {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return {};
  Bytes raw = read_file(path_);
  return parse_inventory(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
}

void InventoryStore::write_locked(const std::vector<ProfileRecord>& records) {
  write_file_atomic(path_, as_bytes(serialize_inventory(records)));
}

ActivationToken InventoryStore::add_profile(const sim::SubscriberProfile& profile, RandomSource& rng) {
  profile.validate();
  std::lock_guard guard(mu_);
  FileLock lock(path_);
  std::vector<ProfileRecord> records = read_locked();
  ActivationToken token{};
  bool unique = false;
  while (!unique) {
    token = rng.array<16>();
    unique = true;
    for (const ProfileRecord& r : records) {
      if (r.profile.supi == profile.supi) throw Error(ErrorCode::kDuplicateSupi, profile.supi);
      if (r.activation_token == token) unique = false;
    }
  }
  records.push_back(ProfileRecord{token, profile, false, std::nullopt});
  write_locked(records);
  return token;
}

std::vector<ProfileRecord> InventoryStore::list() const {
  std::lock_guard guard(mu_);
  FileLock lock(path_);
  return read_locked();
}

std::optional<ProfileRecord> InventoryStore::find(const ActivationToken& token) const {
  for (ProfileRecord& r : list()) {
    if (constant_time_equal(r.activation_token, token)) return std::move(r);
  }
  return std::nullopt;
}

TokenStatus InventoryStore::check(const ActivationToken& token) const {
  std::optional<ProfileRecord> r = find(token);
  if (!r) return TokenStatus::kUnknown;
  return r->claimed ? TokenStatus::kClaimed : TokenStatus::kAvailable;
}

sim::SubscriberProfile InventoryStore::claim(const ActivationToken& token, const crypto::Point& pseudonym) {
  std::lock_guard guard(mu_);
  FileLock lock(path_);
  std::vector<ProfileRecord> records = read_locked();
  for (ProfileRecord& r : records) {
    if (!constant_time_equal(r.activation_token, token)) continue;
    if (r.claimed) throw Error(ErrorCode::kTokenAlreadyClaimed);
    r.claimed = true;
    r.claimed_by_pseudonym = pseudonym;
    write_locked(records);
    return r.profile;
  }
  throw Error(ErrorCode::kUnknownToken);
}

}  // namespace vsim::provisioner
