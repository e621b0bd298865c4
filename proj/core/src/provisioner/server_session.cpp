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

#include "vsim/provisioner/server_session.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "vsim/common/file_io.hpp"
#include "vsim/crypto/pke.hpp"

namespace vsim::provisioner {

using protocol::Frame;
using protocol::MsgType;
using protocol::WireError;

namespace {

std::string_view verdict_name(attest::QuoteVerdict v) { return attest::to_string(v); }

std::optional<attest::QuoteVerdict> verdict_from_name(std::string_view s) {
  for (auto v : {attest::QuoteVerdict::kAccepted, attest::QuoteVerdict::kBadSignature,
                 attest::QuoteVerdict::kRevokedByKey, attest::QuoteVerdict::kRevokedBySignature,
                 attest::QuoteVerdict::kMeasurementMismatch, attest::QuoteVerdict::kReportDataMismatch}) {
    if (attest::to_string(v) == s) return v;
  }
  return std::nullopt;
}

}  // namespace

void SessionLog::append(const SessionRecord& record) {
  std::lock_guard guard(mu_);
  FileLock lock(path_);
  std::ofstream out(path_, std::ios::app);
  out << verdict_name(record.verdict) << '\t' << to_hex(record.basename) << '\t' << to_hex(record.pseudonym.bytes())
      << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "cannot append to " + path_.string());
}

std::vector<SessionRecord> SessionLog::read() const {
  std::vector<SessionRecord> out;
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return out;
  Bytes raw = read_file(path_);
  std::istringstream in(std::string(raw.begin(), raw.end()));
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = line.find('\t');
    std::size_t b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos) continue;
    auto verdict = verdict_from_name(std::string_view(line).substr(0, a));
    if (!verdict) continue;
    try {
      auto p = crypto::Point::from_bytes(array_from_hex<32>(std::string_view(line).substr(b + 1)));
      if (!p) continue;
      out.push_back({*verdict, from_hex(std::string_view(line).substr(a + 1, b - a - 1)), *p});
    } catch (const Error&) {
    }
  }
  return out;
}

std::string_view to_string(SessionState s) {
  switch (s) {
    case SessionState::kAwaitHello: return "AwaitHello";
    case SessionState::kAwaitAttest: return "AwaitAttest";
    case SessionState::kDone: return "Done";
    case SessionState::kFailed: return "Failed";
  }
  return "Unknown";
}

ServerSession::~ServerSession() { erase_secrets(); }

void ServerSession::erase_secrets() {
  if (ephemeral_) {
    ephemeral_->wipe();
    ephemeral_.reset();
  }
  if (session_key_) {
    secure_wipe(*session_key_);
    session_key_.reset();
  }
}

Frame ServerSession::fail(WireError code) {
  state_ = SessionState::kFailed;
  failure_ = code;
  erase_secrets();
  return protocol::error_frame(code);
}

Frame ServerSession::handle(const Frame& frame) {
  try {
    switch (state_) {
      case SessionState::kAwaitHello: return on_client_hello(frame);
      case SessionState::kAwaitAttest: return on_client_attest(frame);
      case SessionState::kDone:
      case SessionState::kFailed: break;
    }
    return fail(WireError::kProtocolViolation);
  } catch (const std::exception&) {
    return fail(WireError::kInternal);
  }
}

Frame ServerSession::on_client_hello(const Frame& m1) {
  if (m1.type != MsgType::kClientHello) return fail(WireError::kProtocolViolation);

  Bytes plain;
  try {
    plain = crypto::pk_decrypt(ctx_.static_secret, m1.payload);
  } catch (const Error&) {
    return fail(WireError::kDecryptFailure);
  }
  protocol::ClientHello hello;
  try {
    hello = protocol::ClientHello::decode(plain);
  } catch (const Error&) {
    return fail(WireError::kMalformedMessage);
  }
  secure_wipe(plain);

  if (!ctx_.replay_cache.check_and_insert(hello.nonce_c)) return fail(WireError::kReplayDetected);
  switch (ctx_.inventory.check(hello.token)) {
    case TokenStatus::kAvailable: break;
    case TokenStatus::kUnknown: return fail(WireError::kUnknownToken);
    case TokenStatus::kClaimed: return fail(WireError::kTokenAlreadyClaimed);
  }
  std::optional<crypto::Point> epk_c = crypto::Point::from_bytes(hello.epk_c);
  if (!epk_c) return fail(WireError::kMalformedMessage);

  nonce_c_ = hello.nonce_c;
  nonce_s_ = ctx_.rng.array<32>();
  token_ = hello.token;
  ephemeral_ = crypto::dh_keygen(ctx_.rng);

  protocol::ServerHello reply{nonce_c_, nonce_s_, ctx_.attest_request, ephemeral_->public_key.bytes()};
  Frame m2{MsgType::kServerHello, crypto::pk_encrypt(*epk_c, reply.encode(), ctx_.rng)};

  transcript_ = protocol::transcript_hash(m1, m2);
  ByteArray<32> shared = crypto::dh(ephemeral_->secret, *epk_c);
  session_key_ = protocol::derive_session_key(shared, transcript_);
  secure_wipe(shared);
  state_ = SessionState::kAwaitAttest;
  return m2;
}

Frame ServerSession::on_client_attest(const Frame& m3) {
  if (m3.type != MsgType::kClientAttest) return fail(WireError::kProtocolViolation);

  Bytes plain;
  try {
    plain = crypto::aead_open(*session_key_, protocol::counter_nonce(protocol::kClientAttestCounter),
                              m3.associated_data(), m3.payload);
  } catch (const Error&) {
    return fail(WireError::kChannelAuthFailure);
  }
  protocol::ClientAttest attest;
  try {
    attest = protocol::ClientAttest::decode(plain);
  } catch (const Error&) {
    return fail(WireError::kMalformedMessage);
  }
  if (!constant_time_equal(attest.nonce_c, nonce_c_) || !constant_time_equal(attest.nonce_s, nonce_s_)) {
    return fail(WireError::kNonceMismatch);
  }
  const attest::SignedQuote& sq = attest.signed_quote;
  if (sq.basename != ctx_.attest_request.basename || sq.quote.tee_version != ctx_.attest_request.tee_version) {
    return fail(WireError::kProtocolViolation);
  }

  const crypto::RevocationLists rl = ctx_.revocations.load();
  const attest::ReportData expected = attest::session_report_data(transcript_, nonce_c_, nonce_s_);
  verdict_ = attest::verify_signed_quote(ctx_.gpk, sq, ctx_.expected_measurement, expected, rl);
  if (*verdict_ == attest::QuoteVerdict::kBadSignature) return fail(WireError::kAttestBadSignature);
  const crypto::Point pseudonym = crypto::Point::parse(sq.signature.pseudonym);
  if (ctx_.session_log != nullptr) ctx_.session_log->append({*verdict_, sq.basename, pseudonym});
  if (*verdict_ != attest::QuoteVerdict::kAccepted) return fail(protocol::attestation_wire_error(*verdict_));

  sim::SubscriberProfile profile;
  try {
    profile = ctx_.inventory.claim(token_, pseudonym);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTokenAlreadyClaimed) return fail(WireError::kTokenAlreadyClaimed);
    if (e.code() == ErrorCode::kUnknownToken) return fail(WireError::kUnknownToken);
    throw;
  }
  Bytes body = profile.serialize();
  secure_wipe(profile.k);
  secure_wipe(profile.opc);
  Frame m4{MsgType::kProfileDelivery, {}};
  m4.payload = crypto::aead_seal(*session_key_, protocol::counter_nonce(protocol::kProfileDeliveryCounter),
                                 m4.associated_data(), body);
  secure_wipe(body);
  state_ = SessionState::kDone;
  erase_secrets();
  return m4;
}

}  // namespace vsim::provisioner
