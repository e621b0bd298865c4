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

#include <string_view>
#include <variant>

#include "vsim/sim/aka_functions.hpp"
#include "vsim/sim/profile.hpp"

namespace vsim::sim {

/// Largest forward SQN jump the responder accepts.
inline constexpr std::uint64_t kSqnWindow = std::uint64_t{1} << 16;
inline constexpr Amf kResyncAmf{0x00, 0x00};

using Autn = ByteArray<16>;
using Auts = ByteArray<14>;

struct AuthChallenge {
  Rand rand{};
  Autn autn{};  // (sqn ^ ak)(6) || amf(2) || mac(8)
};

struct AuthSuccess {
  ByteArray<16> res_star{};
  ByteArray<32> k_ausf{};
  friend bool operator==(const AuthSuccess&, const AuthSuccess&) = default;
};

struct SyncFailure {
  Auts auts{};
  friend bool operator==(const SyncFailure&, const SyncFailure&) = default;
};

struct MacFailure {
  friend bool operator==(const MacFailure&, const MacFailure&) = default;
};

using AuthResult = std::variant<AuthSuccess, SyncFailure, MacFailure>;

std::string_view describe(const AuthResult& r);

struct ChallengeOutcome {
  AuthResult result;
  SubscriberProfile profile;  // sqn advanced on success, unchanged otherwise
};

/// Verifies AUTN and produces RES*/K_AUSF, or an AUTS when the network's
/// SQN is outside (stored, stored + kSqnWindow].
ChallengeOutcome respond_to_challenge(const SubscriberProfile& profile, const AuthChallenge& challenge,
                                      std::string_view serving_network_name);

/// AUTS = (sqn_ms ^ f5*(rand)) || f1*(k, opc, rand, sqn_ms, 0x0000).
Auts make_auts(const SubscriberProfile& profile, const Rand& rand);

}  // namespace vsim::sim
