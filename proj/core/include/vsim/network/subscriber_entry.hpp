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

#include "vsim/common/random.hpp"
#include "vsim/sim/aka_functions.hpp"
#include "vsim/sim/profile.hpp"

namespace vsim::network {

/// Home-network copy of a subscriber's long-term data.
///
/// Stored as a key-value file with keys supi, k, opc, amf, sqn_he,
/// serving_network_name (binary values hex, sqn_he decimal).
struct NetworkSubscriberEntry {
  std::string supi;
  sim::Key k{};
  sim::Opc opc{};
  sim::Amf amf{};
  std::uint64_t sqn_he = 0;
  std::string serving_network_name;

  static NetworkSubscriberEntry from_profile(const sim::SubscriberProfile& profile);
  /// Throws kConfigError.
  static NetworkSubscriberEntry load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

struct AuthVector {
  sim::Rand rand{};
  ByteArray<16> autn{};
  ByteArray<16> hxres_star{};
  ByteArray<16> xres_star{};
  ByteArray<32> k_ausf{};
};

/// Advances entry.sqn_he and builds a vector for it with a fresh RAND.
AuthVector generate_auth_vector(NetworkSubscriberEntry& entry, RandomSource& rng = system_random());

/// Recovers SQN_MS from AUTS and sets entry.sqn_he to it.
/// Throws kResyncMacFailure if MAC-S does not verify.
void process_resync(NetworkSubscriberEntry& entry, const sim::Rand& rand, const ByteArray<14>& auts);

}  // namespace vsim::network
