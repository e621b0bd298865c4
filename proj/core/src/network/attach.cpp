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

#include "vsim/network/attach.hpp"

#include <sstream>

namespace vsim::network {

std::string_view to_string(AttachOutcome o) {
  switch (o) {
    case AttachOutcome::kAttached: return "Attached";
    case AttachOutcome::kRejected: return "Rejected";
    case AttachOutcome::kResyncedThenAttached: return "ResyncedThenAttached";
  }
  return "Unknown";
}

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::kNone: return "None";
    case RejectReason::kMacFailure: return "MacFailure";
    case RejectReason::kResStarMismatch: return "ResStarMismatch";
    case RejectReason::kNotProvisioned: return "NotProvisioned";
    case RejectReason::kResyncMacFailure: return "ResyncMacFailure";
    case RejectReason::kSyncFailure: return "SyncFailure";
  }
  return "Unknown";
}

std::string AttachReport::format() const {
  std::ostringstream out;
  out << "attach outcome=" << to_string(outcome) << " reason=" << to_string(reason)
      << " vsim_invocations=" << vsim_invocations << " auth_round_trips=" << auth_round_trips;
  return out.str();
}

namespace {

enum class Round { kAccepted, kMacFailure, kResStarMismatch, kSyncFailure, kNotProvisioned };

Round run_round(MobileEquipment& ue, ServingNetwork& network, sim::Auts* auts_out) {
  const sim::AuthChallenge challenge = network.issue_challenge();
  sim::AuthResult result;
  try {
    result = ue.forward_challenge(challenge, network.serving_network_name());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotProvisioned) return Round::kNotProvisioned;
    throw;
  }
  if (std::holds_alternative<sim::MacFailure>(result)) return Round::kMacFailure;
  if (const auto* sync = std::get_if<sim::SyncFailure>(&result)) {
    *auts_out = sync->auts;
    return Round::kSyncFailure;
  }
  if (!network.verify_response(std::get<sim::AuthSuccess>(result).res_star)) return Round::kResStarMismatch;
  ue.complete_attach();
  return Round::kAccepted;
}

RejectReason reason_for(Round r) {
  switch (r) {
    case Round::kMacFailure: return RejectReason::kMacFailure;
    case Round::kResStarMismatch: return RejectReason::kResStarMismatch;
    case Round::kSyncFailure: return RejectReason::kSyncFailure;
    case Round::kNotProvisioned: return RejectReason::kNotProvisioned;
    case Round::kAccepted: break;
  }
  return RejectReason::kNone;
}

}  // namespace

AttachReport attach(MobileEquipment& ue, ServingNetwork& network) {
  AttachReport report;
  const std::uint64_t before = ue.module().invocations();
  sim::Auts auts{};

  ++report.auth_round_trips;
  Round first = run_round(ue, network, &auts);
  if (first == Round::kAccepted) {
    report.outcome = AttachOutcome::kAttached;
  } else if (first == Round::kSyncFailure) {
    try {
      network.resync(auts);
      ++report.auth_round_trips;
      Round second = run_round(ue, network, &auts);
      if (second == Round::kAccepted) {
        report.outcome = AttachOutcome::kResyncedThenAttached;
      } else {
        report.reason = reason_for(second);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kResyncMacFailure) throw;
      report.reason = RejectReason::kResyncMacFailure;
    }
  } else {
    report.reason = reason_for(first);
  }
  report.vsim_invocations = ue.module().invocations() - before;
  return report;
}

}  // namespace vsim::network
