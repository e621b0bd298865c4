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
#include <string>

#include "vsim/protocol/transport.hpp"
#include "vsim/sim/aka_responder.hpp"
#include "vsim/sim/provisioning_client.hpp"

namespace vsim::sim {

struct VSimStatus {
  enum class Kind { kUnprovisioned, kProvisioned, kCorrupted };
  Kind kind = Kind::kUnprovisioned;
  std::string supi;
  std::string carrier_name;
  std::uint64_t sqn = 0;
};

std::string_view to_string(VSimStatus::Kind k);

/// The software SIM: one enclave, one sealed profile slot on untrusted
/// storage. Single-threaded by contract.
class VSim {
 public:
  VSim(tee::EnclaveContext enclave, std::filesystem::path storage, RandomSource& rng = system_random(),
       const Clock& clock = system_clock());

  /// Runs M1..M4 over `transport`, then seals and stores the profile.
  /// Throws kAlreadyProvisioned if a profile is stored, plus every
  /// ProvisioningClient and transport error.
  VSimStatus provision(protocol::Transport& transport, const crypto::Point& provisioner_pk,
                       const protocol::AttestRequest& expected_request, const ByteArray<16>& activation_token);

  /// Never exposes k or opc. Unreadable or tampered storage is kCorrupted.
  VSimStatus status() const;

  /// The ME-facing surface: unseals the profile, answers the challenge and
  /// reseals the advanced SQN on success. Throws kNotProvisioned when no
  /// profile is stored and kSealTamper/kBadHeader on corrupted storage.
  AuthResult handle_challenge(const Rand& rand, const Autn& autn, std::string_view serving_network_name);

  /// Number of handle_challenge calls so far.
  std::uint64_t invocations() const { return invocations_; }
  const tee::EnclaveContext& enclave() const { return enclave_; }
  const std::filesystem::path& storage() const { return storage_; }

 private:
  SubscriberProfile load_profile() const;
  void store_profile(const SubscriberProfile& profile);

  tee::EnclaveContext enclave_;
  std::filesystem::path storage_;
  RandomSource& rng_;
  const Clock& clock_;
  std::uint64_t invocations_ = 0;
};

}  // namespace vsim::sim
