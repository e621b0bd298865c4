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

#include <string>
#include <string_view>

#include "vsim/network/mobile_equipment.hpp"
#include "vsim/network/serving_network.hpp"

namespace vsim::network {

enum class AttachOutcome { kAttached, kRejected, kResyncedThenAttached };
enum class RejectReason { kNone, kMacFailure, kResStarMismatch, kNotProvisioned, kResyncMacFailure, kSyncFailure };

std::string_view to_string(AttachOutcome o);
std::string_view to_string(RejectReason r);

struct AttachReport {
  AttachOutcome outcome = AttachOutcome::kRejected;
  RejectReason reason = RejectReason::kNone;
  std::uint64_t vsim_invocations = 0;
  std::uint64_t auth_round_trips = 0;

  bool attached() const { return outcome != AttachOutcome::kRejected; }
  /// `attach outcome=<o> reason=<r> vsim_invocations=<n> auth_round_trips=<n>`
  std::string format() const;
};

/// One challenge round trip, plus one more after a successful resync.
/// Both sides hold the same K_AUSF when the report says attached.
AttachReport attach(MobileEquipment& ue, ServingNetwork& network);

}  // namespace vsim::network
