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

// Provisioning wire protocol.
//
//   frame = magic "VSP1"(4) || msg_type(1) || payload_len(4,BE) || payload
//
//   0x01 ClientHello      pk_encrypt(provisioner_pk, nonce_c(32) || epk_c(32) || token(16))
//   0x02 ServerHello      pk_encrypt(epk_c, nonce_c(32) || nonce_s(32) || tee_version(2)
//                                           || basename_len(2) || basename || epk_s(32))
//   0x03 ClientAttest     aead(k_session, counter 0, signed_quote || nonce_c(32) || nonce_s(32))
//   0x04 ProfileDelivery  aead(k_session, counter 1, canonical profile)
//   0xFF Error            code(2,BE)
//
// AEAD associated data is magic || msg_type. Nonces are 12-byte counters
// (big-endian in the low 8 bytes); client-origin frames use even counters,
// server-origin frames odd ones.
//
//   transcript_hash = SHA-256(M1 frame || M2 frame)
//   k_session       = kdf(dh(esk, peer_epk), "vsim-session" || transcript_hash, 32)

#include <cstdint>
#include <string_view>

#include "vsim/attestation/quote.hpp"
#include "vsim/crypto/aead.hpp"

namespace vsim::protocol {

inline constexpr ByteArray<4> kMagic{'V', 'S', 'P', '1'};
inline constexpr std::size_t kFrameHeaderSize = 9;
inline constexpr std::size_t kMaxPayload = 1 << 20;

enum class MsgType : std::uint8_t {
  kClientHello = 0x01,
  kServerHello = 0x02,
  kClientAttest = 0x03,
  kProfileDelivery = 0x04,
  kError = 0xFF,
};

std::string_view to_string(MsgType t);

struct Frame {
  MsgType type = MsgType::kError;
  Bytes payload;

  Bytes encode() const;
  /// Throws kParseError on bad magic, unknown type, size mismatch.
  static Frame decode(ByteView data);
  ByteArray<5> associated_data() const;
  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Error frame codes. Attestation rejections occupy 0x01xx.
enum class WireError : std::uint16_t {
  kDecryptFailure = 0x0001,
  kReplayDetected = 0x0002,
  kUnknownToken = 0x0003,
  kTokenAlreadyClaimed = 0x0004,
  kChannelAuthFailure = 0x0005,
  kNonceMismatch = 0x0006,
  kProtocolViolation = 0x0007,
  kMalformedMessage = 0x0008,
  kTimeout = 0x0009,
  kInternal = 0x000A,
  kAttestBadSignature = 0x0101,
  kAttestRevokedByKey = 0x0102,
  kAttestRevokedBySignature = 0x0103,
  kAttestMeasurementMismatch = 0x0104,
  kAttestReportDataMismatch = 0x0105,
};

std::string_view to_string(WireError e);
bool is_attestation_rejection(WireError e);
WireError attestation_wire_error(attest::QuoteVerdict verdict);
/// Library error a client raises when it receives `e`.
ErrorCode client_error_for(WireError e);

Frame error_frame(WireError e);
/// Throws kParseError if the frame is not a well-formed Error frame.
WireError parse_error_frame(const Frame& f);

crypto::AeadNonce counter_nonce(std::uint64_t counter);
inline constexpr std::uint64_t kClientAttestCounter = 0;
inline constexpr std::uint64_t kProfileDeliveryCounter = 1;

struct AttestRequest {
  std::uint16_t tee_version = 1;
  Bytes basename;
  friend bool operator==(const AttestRequest&, const AttestRequest&) = default;
};

struct ClientHello {
  ByteArray<32> nonce_c{};
  ByteArray<32> epk_c{};
  ByteArray<16> token{};

  static constexpr std::size_t kSize = 80;
  Bytes encode() const;
  static ClientHello decode(ByteView data);
};

struct ServerHello {
  ByteArray<32> nonce_c{};
  ByteArray<32> nonce_s{};
  AttestRequest attest_request;
  ByteArray<32> epk_s{};

  Bytes encode() const;
  static ServerHello decode(ByteView data);
};

struct ClientAttest {
  attest::SignedQuote signed_quote;
  ByteArray<32> nonce_c{};
  ByteArray<32> nonce_s{};

  Bytes encode() const;
  static ClientAttest decode(ByteView data);
};

crypto::Digest transcript_hash(const Frame& m1, const Frame& m2);
crypto::AeadKey derive_session_key(ByteView dh_shared, const crypto::Digest& transcript);

}  // namespace vsim::protocol
