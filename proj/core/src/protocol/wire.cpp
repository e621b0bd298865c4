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

#include "vsim/protocol/wire.hpp"

#include "vsim/crypto/kdf.hpp"

namespace vsim::protocol {
namespace {

constexpr std::string_view kSessionLabel = "vsim-session";

bool known_type(std::uint8_t t) {
  switch (static_cast<MsgType>(t)) {
    case MsgType::kClientHello:
    case MsgType::kServerHello:
    case MsgType::kClientAttest:
    case MsgType::kProfileDelivery:
    case MsgType::kError:
      return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(MsgType t) {
  switch (t) {
    case MsgType::kClientHello: return "ClientHello";
    case MsgType::kServerHello: return "ServerHello";
    case MsgType::kClientAttest: return "ClientAttest";
    case MsgType::kProfileDelivery: return "ProfileDelivery";
    case MsgType::kError: return "Error";
  }
  return "Unknown";
}

Bytes Frame::encode() const {
  if (payload.size() > kMaxPayload) throw Error(ErrorCode::kLengthError, "frame payload too large");
  ByteWriter w;
  w.put(kMagic).put_u8(static_cast<std::uint8_t>(type)).put_u32(static_cast<std::uint32_t>(payload.size()));
  w.put(payload);
  return w.take();
}

Frame Frame::decode(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  ByteArray<4> magic = r.fixed<4>();
  if (magic != kMagic) throw Error(ErrorCode::kParseError, "bad frame magic");
  std::uint8_t type = r.u8();
  if (!known_type(type)) throw Error(ErrorCode::kParseError, "unknown message type");
  std::uint32_t len = r.u32();
  if (len > kMaxPayload) throw Error(ErrorCode::kParseError, "payload too large");
  ByteView payload = r.take(len);
  r.expect_end();
  return {static_cast<MsgType>(type), Bytes(payload.begin(), payload.end())};
}

ByteArray<5> Frame::associated_data() const {
  return {kMagic[0], kMagic[1], kMagic[2], kMagic[3], static_cast<std::uint8_t>(type)};
}

std::string_view to_string(WireError e) {
  switch (e) {
    case WireError::kDecryptFailure: return "DecryptFailure";
    case WireError::kReplayDetected: return "ReplayDetected";
    case WireError::kUnknownToken: return "UnknownToken";
    case WireError::kTokenAlreadyClaimed: return "TokenAlreadyClaimed";
    case WireError::kChannelAuthFailure: return "ChannelAuthFailure";
    case WireError::kNonceMismatch: return "NonceMismatch";
    case WireError::kProtocolViolation: return "ProtocolViolation";
    case WireError::kMalformedMessage: return "MalformedMessage";
    case WireError::kTimeout: return "Timeout";
    case WireError::kInternal: return "Internal";
    case WireError::kAttestBadSignature: return "BadSignature";
    case WireError::kAttestRevokedByKey: return "RevokedByKey";
    case WireError::kAttestRevokedBySignature: return "RevokedBySignature";
    case WireError::kAttestMeasurementMismatch: return "MeasurementMismatch";
    case WireError::kAttestReportDataMismatch: return "ReportDataMismatch";
  }
  return "Unknown";
}

bool is_attestation_rejection(WireError e) { return (static_cast<std::uint16_t>(e) & 0xff00) == 0x0100; }

WireError attestation_wire_error(attest::QuoteVerdict verdict) {
  switch (verdict) {
    case attest::QuoteVerdict::kBadSignature: return WireError::kAttestBadSignature;
    case attest::QuoteVerdict::kRevokedByKey: return WireError::kAttestRevokedByKey;
    case attest::QuoteVerdict::kRevokedBySignature: return WireError::kAttestRevokedBySignature;
    case attest::QuoteVerdict::kMeasurementMismatch: return WireError::kAttestMeasurementMismatch;
    case attest::QuoteVerdict::kReportDataMismatch: return WireError::kAttestReportDataMismatch;
    case attest::QuoteVerdict::kAccepted: break;
  }
  return WireError::kInternal;
}

ErrorCode client_error_for(WireError e) {
  if (is_attestation_rejection(e)) return ErrorCode::kAttestRejected;
  switch (e) {
    case WireError::kDecryptFailure: return ErrorCode::kDecryptFailure;
    case WireError::kReplayDetected: return ErrorCode::kReplayDetected;
    case WireError::kUnknownToken: return ErrorCode::kUnknownToken;
    case WireError::kTokenAlreadyClaimed: return ErrorCode::kTokenAlreadyClaimed;
    case WireError::kChannelAuthFailure: return ErrorCode::kChannelAuthFailure;
    case WireError::kNonceMismatch: return ErrorCode::kNonceMismatch;
    case WireError::kProtocolViolation:
    case WireError::kMalformedMessage: return ErrorCode::kProtocolViolation;
    case WireError::kTimeout: return ErrorCode::kTimeout;
    default: return ErrorCode::kServerError;
  }
}

Frame error_frame(WireError e) {
  ByteWriter w;
  w.put_u16(static_cast<std::uint16_t>(e));
  return {MsgType::kError, w.take()};
}

WireError parse_error_frame(const Frame& f) {
  if (f.type != MsgType::kError) throw Error(ErrorCode::kParseError, "not an error frame");
  ByteReader r(f.payload, ErrorCode::kParseError);
  auto code = static_cast<WireError>(r.u16());
  r.expect_end();
  return code;
}

crypto::AeadNonce counter_nonce(std::uint64_t counter) {
  crypto::AeadNonce n{};
  for (int i = 0; i < 8; ++i) n[11 - static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(counter >> (8 * i));
  return n;
}

Bytes ClientHello::encode() const {
  ByteWriter w;
  w.put(nonce_c).put(epk_c).put(token);
  return w.take();
}

ClientHello ClientHello::decode(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  ClientHello m;
  m.nonce_c = r.fixed<32>();
  m.epk_c = r.fixed<32>();
  m.token = r.fixed<16>();
  r.expect_end();
  return m;
}

Bytes ServerHello::encode() const {
  ByteWriter w;
  w.put(nonce_c).put(nonce_s).put_u16(attest_request.tee_version).put_prefixed16(attest_request.basename).put(epk_s);
  return w.take();
}

ServerHello ServerHello::decode(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  ServerHello m;
  m.nonce_c = r.fixed<32>();
  m.nonce_s = r.fixed<32>();
  m.attest_request.tee_version = r.u16();
  ByteView basename = r.prefixed16();
  m.attest_request.basename.assign(basename.begin(), basename.end());
  m.epk_s = r.fixed<32>();
  r.expect_end();
  return m;
}

Bytes ClientAttest::encode() const {
  ByteWriter w;
  Bytes sq = signed_quote.serialize();
  w.put_u32(static_cast<std::uint32_t>(sq.size())).put(sq).put(nonce_c).put(nonce_s);
  return w.take();
}

ClientAttest ClientAttest::decode(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  ClientAttest m;
  m.signed_quote = attest::SignedQuote::parse(r.take(r.u32()));
  m.nonce_c = r.fixed<32>();
  m.nonce_s = r.fixed<32>();
  r.expect_end();
  return m;
}

crypto::Digest transcript_hash(const Frame& m1, const Frame& m2) {
  return crypto::Hasher().update(m1.encode()).update(m2.encode()).finish();
}

crypto::AeadKey derive_session_key(ByteView dh_shared, const crypto::Digest& transcript) {
  return crypto::kdf32(dh_shared, concat({as_bytes(kSessionLabel), transcript}));
}

}  // namespace vsim::protocol
