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

#include "vsim/network/serving_network.hpp"

#include "vsim/sim/key_derivation.hpp"

namespace vsim::network {

ServingNetwork::ServingNetwork(NetworkSubscriberEntry entry, RandomSource& rng)
    : entry_(std::move(entry)), rng_(rng) {}

sim::AuthChallenge ServingNetwork::issue_challenge() {
  k_ausf_.reset();
  pending_ = generate_auth_vector(entry_, rng_);
  return {pending_->rand, pending_->autn};
}

bool ServingNetwork::verify_response(const ByteArray<16>& res_star) {
  if (!pending_) return false;
  const AuthVector v = *pending_;
  pending_.reset();
  if (!constant_time_equal(sim::derive_hxres_star(v.rand, res_star), v.hxres_star)) return false;
  if (!constant_time_equal(res_star, v.xres_star)) return false;
  k_ausf_ = v.k_ausf;
  return true;
}

void ServingNetwork::resync(const ByteArray<14>& auts) {
  if (!pending_) throw Error(ErrorCode::kProtocolViolation, "no outstanding challenge");
  const sim::Rand rand = pending_->rand;
  pending_.reset();
  process_resync(entry_, rand, auts);
}

}  // namespace vsim::network
