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

#include "vsim/sim/provisioning_client.hpp"

#include "vsim/crypto/pke.hpp"

namespace vsim::sim {

using protocol::Frame;
using protocol::MsgType;

ServerRejected::ServerRejected(protocol::WireError e)
    : Error(protocol::client_error_for(e), "server reported " + std::string(protocol::to_string(e))),
      wire_error_(e) {}

std::string_view to_string(ProvisioningState s) {
  switch (s) {
    case ProvisioningState::kInit: return "Init";
    case ProvisioningState::kHelloSent: return "HelloSent";
    case ProvisioningState::kAttesting: return "Attesting";
    case ProvisioningState::kProvisioned: return "Provisioned";
    case ProvisioningState::kFailed: return "Failed";
  }
  return "Unknown";
}

ProvisioningClient::ProvisioningClient(const tee::EnclaveContext& enclave, const crypto::Point& provisioner_pk,
                                       protocol::AttestRequest expected_request,
                                       const ByteArray<16>& activation_token, RandomSource& rng, const Clock& clock)
    : enclave_(enclave),
      provisioner_pk_(provisioner_pk),
      expected_(std::move(expected_request)),
      token_(activation_token),
      rng_(rng),
      clock_(clock) {}

ProvisioningClient::~ProvisioningClient() { erase_secrets(); }

bool ProvisioningClient::secrets_erased() const { return !ephemeral_ && !session_key_; }

void ProvisioningClient::erase_secrets() {
  if (ephemeral_) {
    ephemeral_->wipe();
    ephemeral_.reset();
  }
  if (session_key_) {
    secure_wipe(*session_key_);
    session_key_.reset();
  }
}

void ProvisioningClient::fail(ErrorCode code, const std::string& detail) {
  state_ = ProvisioningState::kFailed;
  failure_ = code;
  erase_secrets();
  if (detail.empty()) throw Error(code);
  throw Error(code, detail);
}

void ProvisioningClient::fail_from_error_frame(const Frame& f) {
  protocol::WireError code;
  try {
    code = protocol::parse_error_frame(f);
  } catch (const Error&) {
    fail(ErrorCode::kProtocolViolation, "malformed error frame");
  }
  state_ = ProvisioningState::kFailed;
  failure_ = protocol::client_error_for(code);
  erase_secrets();
  throw ServerRejected(code);
}

Frame ProvisioningClient::start() {
  if (state_ != ProvisioningState::kInit) fail(ErrorCode::kProtocolViolation, "start() outside Init");
  nonce_c_ = rng_.array<32>();
  ephemeral_ = crypto::dh_keygen(rng_);
  protocol::ClientHello hello{nonce_c_, ephemeral_->public_key.bytes(), token_};
  m1_ = Frame{MsgType::kClientHello, crypto::pk_encrypt(provisioner_pk_, hello.encode(), rng_)};
  state_ = ProvisioningState::kHelloSent;
  return m1_;
}

Frame ProvisioningClient::on_server_hello(const Frame& m2) {
  if (state_ != ProvisioningState::kHelloSent) fail(ErrorCode::kProtocolViolation, "ServerHello outside HelloSent");
  if (m2.type == MsgType::kError) fail_from_error_frame(m2);
  if (m2.type != MsgType::kServerHello) fail(ErrorCode::kProtocolViolation, "expected ServerHello");

  Bytes plain;
  try {
    plain = crypto::pk_decrypt(ephemeral_->secret, m2.payload);
  } catch (const Error&) {
    fail(ErrorCode::kChannelAuthFailure, "ServerHello does not open under this session's ephemeral key");
  }
  protocol::ServerHello hello;
  try {
    hello = protocol::ServerHello::decode(plain);
  } catch (const Error&) {
    fail(ErrorCode::kProtocolViolation, "malformed ServerHello");
  }
  if (!constant_time_equal(hello.nonce_c, nonce_c_)) fail(ErrorCode::kServerNonceMismatch);
  if (!(hello.attest_request == expected_)) fail(ErrorCode::kAttestRequestMismatch);

  ByteArray<32> shared;
  try {
    shared = crypto::dh(ephemeral_->secret, hello.epk_s);
  } catch (const Error&) {
    fail(ErrorCode::kProtocolViolation, "invalid server ephemeral key");
  }
  const crypto::Digest transcript = protocol::transcript_hash(m1_, m2);
  session_key_ = protocol::derive_session_key(shared, transcript);
  secure_wipe(shared);
  nonce_s_ = hello.nonce_s;

  attest::SignedQuote quote = enclave_.attest(attest::session_report_data(transcript, nonce_c_, nonce_s_),
                                              expected_.tee_version, expected_.basename, clock_, rng_);
  protocol::ClientAttest body{std::move(quote), nonce_c_, nonce_s_};
  Frame m3{MsgType::kClientAttest, {}};
  m3.payload = crypto::aead_seal(*session_key_, protocol::counter_nonce(protocol::kClientAttestCounter),
                                 m3.associated_data(), body.encode());
  state_ = ProvisioningState::kAttesting;
  return m3;
}

SubscriberProfile ProvisioningClient::on_profile_delivery(const Frame& m4) {
  if (state_ != ProvisioningState::kAttesting) {
    fail(ErrorCode::kProtocolViolation, "ProfileDelivery outside Attesting");
  }
  if (m4.type == MsgType::kError) fail_from_error_frame(m4);
  if (m4.type != MsgType::kProfileDelivery) fail(ErrorCode::kProtocolViolation, "expected ProfileDelivery");

  Bytes plain;
  try {
    plain = crypto::aead_open(*session_key_, protocol::counter_nonce(protocol::kProfileDeliveryCounter),
                              m4.associated_data(), m4.payload);
  } catch (const Error&) {
    fail(ErrorCode::kChannelAuthFailure, "ProfileDelivery failed authentication");
  }
  SubscriberProfile profile;
  try {
    profile = SubscriberProfile::parse(plain);
  } catch (const Error& e) {
    secure_wipe(plain);
    fail(ErrorCode::kProfileParseError, e.what());
  }
  secure_wipe(plain);
  state_ = ProvisioningState::kProvisioned;
  erase_secrets();
  return profile;
}

}  // namespace vsim::sim
