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

#include <optional>

#include "vsim/network/subscriber_entry.hpp"
#include "vsim/sim/aka_responder.hpp"

namespace vsim::network {

/// Collapsed SEAF/AUSF/UDM endpoint for one subscriber.
class ServingNetwork {
 public:
  explicit ServingNetwork(NetworkSubscriberEntry entry, RandomSource& rng = system_random());

  sim::AuthChallenge issue_challenge();
  /// HXRES* check followed by the RES* comparison for the outstanding
  /// challenge. On success the session's K_AUSF becomes available.
  bool verify_response(const ByteArray<16>& res_star);
  /// Throws kResyncMacFailure, or kProtocolViolation with no outstanding challenge.
  void resync(const ByteArray<14>& auts);

  bool attached() const { return k_ausf_.has_value(); }
  const std::optional<ByteArray<32>>& k_ausf() const { return k_ausf_; }
  void detach() { k_ausf_.reset(); }

  const NetworkSubscriberEntry& entry() const { return entry_; }
  const std::string& serving_network_name() const { return entry_.serving_network_name; }

 private:
  NetworkSubscriberEntry entry_;
  RandomSource& rng_;
  std::optional<AuthVector> pending_;
  std::optional<ByteArray<32>> k_ausf_;
};

}  // namespace vsim::network
