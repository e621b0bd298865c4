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

#include "vsim/network/mobile_equipment.hpp"

namespace vsim::network {

sim::AuthResult VSimModule::authenticate(const sim::Rand& rand, const sim::Autn& autn, std::string_view snn) {
  return vsim_.handle_challenge(rand, autn, snn);
}

sim::AuthResult DirectKeyModule::authenticate(const sim::Rand& rand, const sim::Autn& autn, std::string_view snn) {
  ++invocations_;
  sim::ChallengeOutcome out = sim::respond_to_challenge(profile_, {rand, autn}, snn);
  profile_ = std::move(out.profile);
  return out.result;
}

sim::AuthResult MobileEquipment::forward_challenge(const sim::AuthChallenge& challenge, std::string_view snn) {
  detach();
  sim::AuthResult r = module_.authenticate(challenge.rand, challenge.autn, snn);
  if (const auto* ok = std::get_if<sim::AuthSuccess>(&r)) pending_k_ausf_ = ok->k_ausf;
  return r;
}

bool MobileEquipment::complete_attach() {
  if (!pending_k_ausf_) return false;
  k_ausf_ = pending_k_ausf_;
  pending_k_ausf_.reset();
  return true;
}

}  // namespace vsim::network
