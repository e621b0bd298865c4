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
#include <mutex>
#include <optional>

#include "vsim/attestation/quote.hpp"
#include "vsim/crypto/dh.hpp"
#include "vsim/protocol/wire.hpp"
#include "vsim/provisioner/inventory.hpp"
#include "vsim/provisioner/replay_cache.hpp"
#include "vsim/provisioner/revocation_store.hpp"

namespace vsim::provisioner {

/// One line per verified attestation: verdict, basename and pseudonym.
struct SessionRecord {
  attest::QuoteVerdict verdict;
  Bytes basename;
  crypto::Point pseudonym;
};

/// Append-only text log of SessionRecords (tab-separated, hex fields).
class SessionLog {
 public:
  explicit SessionLog(std::filesystem::path path) : path_(std::move(path)) {}
  void append(const SessionRecord& record);
  std::vector<SessionRecord> read() const;

 private:
  std::filesystem::path path_;
  std::mutex mu_;
};

/// State shared by every session of one provisioner.
struct ProvisionerContext {
  crypto::Scalar static_secret;
  crypto::GroupPublicKey gpk;
  attest::Measurement expected_measurement;
  protocol::AttestRequest attest_request;
  InventoryStore& inventory;
  RevocationStore& revocations;
  ReplayCache& replay_cache;
  RandomSource& rng;
  SessionLog* session_log = nullptr;
};

enum class SessionState { kAwaitHello, kAwaitAttest, kDone, kFailed };

std::string_view to_string(SessionState s);

/// Server half of the handshake for one connection.
class ServerSession {
 public:
  explicit ServerSession(ProvisionerContext& ctx) : ctx_(ctx) {}
  ~ServerSession();
  ServerSession(const ServerSession&) = delete;
  ServerSession& operator=(const ServerSession&) = delete;

  /// Returns the reply frame: M2, M4 or an Error frame. Never throws for
  /// peer-controlled input; every failure moves the session to kFailed.
  protocol::Frame handle(const protocol::Frame& frame);

  SessionState state() const { return state_; }
  std::optional<protocol::WireError> failure() const { return failure_; }
  bool secrets_erased() const { return !ephemeral_ && !session_key_; }
  /// Set once a quote has been verified in this session.
  std::optional<attest::QuoteVerdict> verdict() const { return verdict_; }

 private:
  protocol::Frame on_client_hello(const protocol::Frame& m1);
  protocol::Frame on_client_attest(const protocol::Frame& m3);
  protocol::Frame fail(protocol::WireError code);
  void erase_secrets();

  ProvisionerContext& ctx_;
  SessionState state_ = SessionState::kAwaitHello;
  std::optional<protocol::WireError> failure_;
  std::optional<attest::QuoteVerdict> verdict_;
  ByteArray<32> nonce_c_{};
  ByteArray<32> nonce_s_{};
  ActivationToken token_{};
  crypto::Digest transcript_{};
  std::optional<crypto::DhKeyPair> ephemeral_;
  std::optional<crypto::AeadKey> session_key_;
};

}  // namespace vsim::provisioner
