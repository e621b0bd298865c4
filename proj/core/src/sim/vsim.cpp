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

#include "vsim/sim/vsim.hpp"

#include <system_error>

#include "vsim/common/file_io.hpp"

namespace vsim::sim {

std::string_view to_string(VSimStatus::Kind k) {
  switch (k) {
    case VSimStatus::Kind::kUnprovisioned: return "Unprovisioned";
    case VSimStatus::Kind::kProvisioned: return "Provisioned";
    case VSimStatus::Kind::kCorrupted: return "Corrupted";
  }
  return "Unknown";
}

VSim::VSim(tee::EnclaveContext enclave, std::filesystem::path storage, RandomSource& rng, const Clock& clock)
    : enclave_(std::move(enclave)), storage_(std::move(storage)), rng_(rng), clock_(clock) {}

SubscriberProfile VSim::load_profile() const {
  std::error_code ec;
  if (!std::filesystem::exists(storage_, ec)) throw Error(ErrorCode::kNotProvisioned);
  Bytes plain = enclave_.unseal_bytes(read_file(storage_));
  SubscriberProfile p;
  try {
    p = SubscriberProfile::parse(plain);
  } catch (const Error&) {
    secure_wipe(plain);
    throw Error(ErrorCode::kSealTamper, "sealed profile does not parse");
  }
  secure_wipe(plain);
  return p;
}

void VSim::store_profile(const SubscriberProfile& profile) {
  Bytes plain = profile.serialize();
  tee::SealedBlob blob = enclave_.seal(plain, rng_);
  secure_wipe(plain);
  tee::store_blob(storage_, blob);
}

VSimStatus VSim::provision(protocol::Transport& transport, const crypto::Point& provisioner_pk,
                           const protocol::AttestRequest& expected_request, const ByteArray<16>& activation_token) {
  std::error_code ec;
  if (std::filesystem::exists(storage_, ec)) throw Error(ErrorCode::kAlreadyProvisioned);

  ProvisioningClient client(enclave_, provisioner_pk, expected_request, activation_token, rng_, clock_);
  transport.send(client.start());
  transport.send(client.on_server_hello(transport.receive()));
  SubscriberProfile profile = client.on_profile_delivery(transport.receive());
  store_profile(profile);
  profile.k.fill(0);
  profile.opc.fill(0);
  return status();
}

VSimStatus VSim::status() const {
  try {
    SubscriberProfile p = load_profile();
    VSimStatus s{VSimStatus::Kind::kProvisioned, p.supi, p.carrier_name, p.sqn};
    secure_wipe(p.k);
    secure_wipe(p.opc);
    return s;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotProvisioned) return {};
    return {VSimStatus::Kind::kCorrupted, {}, {}, 0};
  }
}

AuthResult VSim::handle_challenge(const Rand& rand, const Autn& autn, std::string_view serving_network_name) {
  ++invocations_;
  SubscriberProfile profile = load_profile();
  ChallengeOutcome outcome = respond_to_challenge(profile, AuthChallenge{rand, autn}, serving_network_name);
  if (std::holds_alternative<AuthSuccess>(outcome.result)) store_profile(outcome.profile);
  secure_wipe(profile.k);
  secure_wipe(outcome.profile.k);
  return outcome.result;
}

}  // namespace vsim::sim
