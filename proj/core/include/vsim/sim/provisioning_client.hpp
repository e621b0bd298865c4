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

#include "vsim/common/random.hpp"
#include "vsim/crypto/dh.hpp"
#include "vsim/protocol/wire.hpp"
#include "vsim/sim/profile.hpp"
#include "vsim/tee/enclave.hpp"

namespace vsim::sim {

/// Thrown when the provisioner answers with an Error frame; code() is the
/// client-side mapping and wire_error() the code the server sent.
class ServerRejected : public Error {
 public:
  explicit ServerRejected(protocol::WireError e);
  protocol::WireError wire_error() const { return wire_error_; }

 private:
  protocol::WireError wire_error_;
};

enum class ProvisioningState { kInit, kHelloSent, kAttesting, kProvisioned, kFailed };

std::string_view to_string(ProvisioningState s);

/// Client half of the four-message provisioning handshake, driven one
/// message at a time. Any error moves the state to kFailed, erases the
/// ephemeral secret and session key, and throws Error; so does calling a
/// step out of order. Reaching kProvisioned erases them too.
class ProvisioningClient {
 public:
  ProvisioningClient(const tee::EnclaveContext& enclave, const crypto::Point& provisioner_pk,
                     protocol::AttestRequest expected_request, const ByteArray<16>& activation_token,
                     RandomSource& rng = system_random(), const Clock& clock = system_clock());
  ~ProvisioningClient();
  ProvisioningClient(const ProvisioningClient&) = delete;
  ProvisioningClient& operator=(const ProvisioningClient&) = delete;

  /// Init -> HelloSent. Returns M1.
  protocol::Frame start();
  /// HelloSent -> Attesting. Consumes M2, returns M3.
  protocol::Frame on_server_hello(const protocol::Frame& m2);
  /// Attesting -> Provisioned. Consumes M4.
  SubscriberProfile on_profile_delivery(const protocol::Frame& m4);

  ProvisioningState state() const { return state_; }
  std::optional<ErrorCode> failure() const { return failure_; }
  /// True once the ephemeral secret and session key have been overwritten.
  bool secrets_erased() const;

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& detail = {});
  [[noreturn]] void fail_from_error_frame(const protocol::Frame& f);
  void erase_secrets();

  const tee::EnclaveContext& enclave_;
  crypto::Point provisioner_pk_;
  protocol::AttestRequest expected_;
  ByteArray<16> token_;
  RandomSource& rng_;
  const Clock& clock_;

  ProvisioningState state_ = ProvisioningState::kInit;
  std::optional<ErrorCode> failure_;
  ByteArray<32> nonce_c_{};
  ByteArray<32> nonce_s_{};
  std::optional<crypto::DhKeyPair> ephemeral_;
  std::optional<crypto::AeadKey> session_key_;
  protocol::Frame m1_;
};

}  // namespace vsim::sim
