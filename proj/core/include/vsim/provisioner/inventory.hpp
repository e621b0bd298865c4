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

#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <vector>

#include "vsim/common/random.hpp"
#include "vsim/crypto/group.hpp"
#include "vsim/sim/profile.hpp"

namespace vsim::provisioner {

using ActivationToken = ByteArray<16>;

struct ProfileRecord {
  ActivationToken activation_token{};
  sim::SubscriberProfile profile;
  bool claimed = false;
  std::optional<crypto::Point> claimed_by_pseudonym;
};

enum class TokenStatus { kAvailable, kUnknown, kClaimed };

// Inventory file: one record per line, tab-separated, every field hex:
//   token  supi  k  opc  amf  sqn(6 bytes)  carrier_name  serving_network_name  claimed(00|01)  pseudonym
// `pseudonym` is empty while unclaimed. Lines starting with '#' are ignored.
std::string serialize_inventory(const std::vector<ProfileRecord>& records);
std::vector<ProfileRecord> parse_inventory(std::string_view text);

/// File-backed profile inventory. Every operation re-reads the file under an
/// exclusive lock, so several processes and threads may share one file.
class InventoryStore {
 public:
  explicit InventoryStore(std::filesystem::path path);

  /// Throws kDuplicateSupi, kInvalidProfile, kIoError.
  ActivationToken add_profile(const sim::SubscriberProfile& profile, RandomSource& rng = system_random());
  std::vector<ProfileRecord> list() const;
  std::optional<ProfileRecord> find(const ActivationToken& token) const;
  TokenStatus check(const ActivationToken& token) const;

  /// Marks the record claimed by `pseudonym` and returns its profile.
  /// Throws kUnknownToken or kTokenAlreadyClaimed; at most one caller wins.
  sim::SubscriberProfile claim(const ActivationToken& token, const crypto::Point& pseudonym);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::vector<ProfileRecord> read_locked() const;
  void write_locked(const std::vector<ProfileRecord>& records);

  std::filesystem::path path_;
  mutable std::mutex mu_;
};

}  // namespace vsim::provisioner
