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

#include <gtest/gtest.h>

#include <atomic>
#include <functional>
#include <thread>

#include "testkit.hpp"
#include "vsim/crypto/kdf.hpp"
#include "vsim/crypto/pke.hpp"
#include "vsim/sim/provisioning_client.hpp"

namespace vsim {
namespace {

using protocol::Frame;
using protocol::MsgType;
using protocol::WireError;
using provisioner::ServerSession;
using provisioner::SessionState;
using sim::ProvisioningClient;
using sim::ProvisioningState;

template <typename Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kServerError;
}

WireError wire_code(const Frame& f) { return protocol::parse_error_frame(f); }

struct ProtocolFixture : ::testing::Test {
  SeededRandom rng{111};
  ManualClock clock;
  testkit::Group group = testkit::Group::create(rng);
  testkit::Device device = testkit::Device::create(group, rng);
  tee::EnclaveContext enclave = device.enclave();
  testkit::ProvisionerWorld world{group.gpk};
  sim::SubscriberProfile profile = testkit::random_profile(rng, 11);
  provisioner::ActivationToken token = world.inventory.add_profile(profile, rng);

  std::unique_ptr<ProvisioningClient> client(const tee::EnclaveContext& e, provisioner::ActivationToken t) {
    return std::make_unique<ProvisioningClient>(e, world.static_pk, world.attest_request, t, rng, clock);
  }
  std::unique_ptr<ProvisioningClient> client() { return client(enclave, token); }

  bool claimed() { return world.inventory.check(token) == provisioner::TokenStatus::kClaimed; }

  /// Runs a full session; returns the server's reply to M3 (M4 or Error).
  Frame run_until_m4(ProvisioningClient& c, ServerSession& s) {
    Frame m2 = s.handle(c.start());
    if (m2.type == MsgType::kError) return m2;
    return s.handle(c.on_server_hello(m2));
  }
};

TEST_F(ProtocolFixture, HappyPathDeliversInventoryProfile) {
  auto c = client();
  ServerSession s(world.ctx);
  Frame m1 = c->start();
  EXPECT_EQ(c->state(), ProvisioningState::kHelloSent);
  Frame m2 = s.handle(m1);
  ASSERT_EQ(m2.type, MsgType::kServerHello);
  EXPECT_EQ(s.state(), SessionState::kAwaitAttest);
  Frame m3 = c->on_server_hello(m2);
  EXPECT_EQ(c->state(), ProvisioningState::kAttesting);
  Frame m4 = s.handle(m3);
  ASSERT_EQ(m4.type, MsgType::kProfileDelivery);
  EXPECT_EQ(s.state(), SessionState::kDone);
  EXPECT_EQ(s.verdict(), attest::QuoteVerdict::kAccepted);
  EXPECT_EQ(c->on_profile_delivery(m4), profile);
  EXPECT_EQ(c->state(), ProvisioningState::kProvisioned);
  EXPECT_TRUE(c->secrets_erased());
  EXPECT_TRUE(s.secrets_erased());

  auto rec = world.inventory.find(token);
  ASSERT_TRUE(rec.has_value());
  EXPECT_TRUE(rec->claimed);
  ASSERT_TRUE(rec->claimed_by_pseudonym.has_value());
  EXPECT_EQ(*rec->claimed_by_pseudonym,
            crypto::pseudonym_for(device.member.secret_scalar, world.attest_request.basename));
}

TEST_F(ProtocolFixture, WireSizesAndTypes) {
  auto c = client();
  Frame m1 = c->start();
  EXPECT_EQ(m1.type, MsgType::kClientHello);
  EXPECT_EQ(m1.payload.size(), protocol::ClientHello::kSize + crypto::kPkeOverhead);
  Bytes enc = m1.encode();
  EXPECT_EQ(std::string(enc.begin(), enc.begin() + 4), "VSP1");
  EXPECT_EQ(enc[4], 0x01);
  EXPECT_EQ(Frame::decode(enc), m1);
}

TEST_F(ProtocolFixture, ByteIdenticalM1Replayed) {
  auto c = client();
  ServerSession first(world.ctx);
  Frame m1 = c->start();
  ASSERT_EQ(first.handle(m1).type, MsgType::kServerHello);
  ServerSession second(world.ctx);
  Frame reply = second.handle(m1);
  EXPECT_EQ(wire_code(reply), WireError::kReplayDetected);
  EXPECT_EQ(second.state(), SessionState::kFailed);
  EXPECT_TRUE(second.secrets_erased());
}

TEST_F(ProtocolFixture, FreshHandshakeAfterReplayWindow) {
  auto c = client();
  ServerSession first(world.ctx);
  Frame m1 = c->start();
  first.handle(m1);
  world.clock.advance(601);
  auto fresh = client();
  ServerSession s(world.ctx);
  Frame m4 = run_until_m4(*fresh, s);
  EXPECT_EQ(m4.type, MsgType::kProfileDelivery);
}

TEST_F(ProtocolFixture, UnknownAndClaimedTokens) {
  provisioner::ActivationToken bogus = rng.array<16>();
  ServerSession s(world.ctx);
  EXPECT_EQ(wire_code(s.handle(client(enclave, bogus)->start())), WireError::kUnknownToken);
  EXPECT_TRUE(s.secrets_erased());

  auto c = client();
  ServerSession ok(world.ctx);
  ASSERT_EQ(run_until_m4(*c, ok).type, MsgType::kProfileDelivery);
  ServerSession again(world.ctx);
  EXPECT_EQ(wire_code(again.handle(client()->start())), WireError::kTokenAlreadyClaimed);
  EXPECT_TRUE(again.secrets_erased());
}

TEST_F(ProtocolFixture, M1ForAnotherProvisionerFailsDecrypt) {
  crypto::DhKeyPair other = crypto::dh_keygen(rng);
  ProvisioningClient c(enclave, other.public_key, world.attest_request, token, rng, clock);
  ServerSession s(world.ctx);
  EXPECT_EQ(wire_code(s.handle(c.start())), WireError::kDecryptFailure);
}

TEST_F(ProtocolFixture, ServerRejectsOutOfOrderFrames) {
  {
    ServerSession s(world.ctx);
    EXPECT_EQ(wire_code(s.handle(Frame{MsgType::kClientAttest, Bytes(100, 0)})), WireError::kProtocolViolation);
  }
  {
    auto c = client();
    ServerSession s(world.ctx);
    Frame m1 = c->start();
    s.handle(m1);
    EXPECT_EQ(wire_code(s.handle(m1)), WireError::kProtocolViolation);
    EXPECT_FALSE(claimed());
  }
  {
    auto c = client();
    ServerSession s(world.ctx);
    ASSERT_EQ(run_until_m4(*c, s).type, MsgType::kProfileDelivery);
    EXPECT_EQ(wire_code(s.handle(Frame{MsgType::kClientAttest, {}})), WireError::kProtocolViolation);
  }
}

TEST_F(ProtocolFixture, ClientRejectsOutOfOrderFrames) {
  {
    auto c = client();
    EXPECT_EQ(error_of([&] { c->on_server_hello(Frame{MsgType::kServerHello, {}}); }),
              ErrorCode::kProtocolViolation);
    EXPECT_EQ(c->state(), ProvisioningState::kFailed);
    EXPECT_EQ(error_of([&] { c->start(); }), ErrorCode::kProtocolViolation);
  }
  {
    auto c = client();
    c->start();
    EXPECT_EQ(error_of([&] { c->on_profile_delivery(Frame{MsgType::kProfileDelivery, {}}); }),
              ErrorCode::kProtocolViolation);
    EXPECT_TRUE(c->secrets_erased());
  }
  {
    auto c = client();
    ServerSession s(world.ctx);
    Frame m2 = s.handle(c->start());
    c->on_server_hello(m2);
    EXPECT_EQ(error_of([&] { c->on_server_hello(m2); }), ErrorCode::kProtocolViolation);
    EXPECT_EQ(c->state(), ProvisioningState::kFailed);
  }
}

TEST_F(ProtocolFixture, RawReplayedM2CannotBeOpened) {
  auto a = client();
  ServerSession sa(world.ctx);
  Frame m2_a = sa.handle(a->start());
  auto b = client();
  b->start();
  EXPECT_EQ(error_of([&] { b->on_server_hello(m2_a); }), ErrorCode::kChannelAuthFailure);
  EXPECT_EQ(b->state(), ProvisioningState::kFailed);
  EXPECT_TRUE(b->secrets_erased());
}

// A provisioner that re-wraps a recorded ServerHello body for the new client
// is caught by the nonce echo.
TEST_F(ProtocolFixture, RewrappedStaleServerHelloHitsNonceEcho) {
  auto a = client();
  Frame m1_a = a->start();
  protocol::ClientHello hello_a = protocol::ClientHello::decode(crypto::pk_decrypt(world.static_secret, m1_a.payload));

  auto b = client();
  Frame m1_b = b->start();
  protocol::ClientHello hello_b = protocol::ClientHello::decode(crypto::pk_decrypt(world.static_secret, m1_b.payload));
  crypto::DhKeyPair eph = crypto::dh_keygen(rng);
  protocol::ServerHello stale{hello_a.nonce_c, rng.array<32>(), world.attest_request, eph.public_key.bytes()};
  Frame forged{MsgType::kServerHello,
               crypto::pk_encrypt(crypto::Point::parse(hello_b.epk_c), stale.encode(), rng)};
  EXPECT_EQ(error_of([&] { b->on_server_hello(forged); }), ErrorCode::kServerNonceMismatch);
}

TEST_F(ProtocolFixture, UnexpectedAttestRequestRejected) {
  auto c = client();
  Frame m1 = c->start();
  protocol::ClientHello hello = protocol::ClientHello::decode(crypto::pk_decrypt(world.static_secret, m1.payload));
  crypto::DhKeyPair eph = crypto::dh_keygen(rng);
  protocol::ServerHello reply{hello.nonce_c, rng.array<32>(), {1, to_bytes("other-basename")},
                              eph.public_key.bytes()};
  Frame forged{MsgType::kServerHello, crypto::pk_encrypt(crypto::Point::parse(hello.epk_c), reply.encode(), rng)};
  EXPECT_EQ(error_of([&] { c->on_server_hello(forged); }), ErrorCode::kAttestRequestMismatch);
}

TEST_F(ProtocolFixture, M3SplicedAcrossSessions) {
  sim::SubscriberProfile p2 = testkit::random_profile(rng, 12);
  provisioner::ActivationToken t2 = world.inventory.add_profile(p2, rng);
  auto a = client();
  ServerSession sa(world.ctx);
  Frame m3_a = a->on_server_hello(sa.handle(a->start()));
  auto b = client(enclave, t2);
  ServerSession sb(world.ctx);
  b->on_server_hello(sb.handle(b->start()));
  EXPECT_EQ(wire_code(sb.handle(m3_a)), WireError::kChannelAuthFailure);
  EXPECT_EQ(sb.state(), SessionState::kFailed);
  EXPECT_FALSE(claimed());
  EXPECT_EQ(world.inventory.check(t2), provisioner::TokenStatus::kAvailable);
}

TEST_F(ProtocolFixture, TamperedM3AndM4) {
  {
    auto c = client();
    ServerSession s(world.ctx);
    Frame m3 = c->on_server_hello(s.handle(c->start()));
    m3.payload[10] ^= 1;
    EXPECT_EQ(wire_code(s.handle(m3)), WireError::kChannelAuthFailure);
    EXPECT_FALSE(claimed());
  }
  {
    auto c = client();
    ServerSession s(world.ctx);
    Frame m4 = run_until_m4(*c, s);
    ASSERT_EQ(m4.type, MsgType::kProfileDelivery);
    m4.payload[0] ^= 1;
    EXPECT_EQ(error_of([&] { c->on_profile_delivery(m4); }), ErrorCode::kChannelAuthFailure);
    EXPECT_TRUE(c->secrets_erased());
  }
}

TEST_F(ProtocolFixture, MeasurementMismatchLeavesRecordUnclaimed) {
  tee::EnclaveContext tampered = device.enclave(testkit::tampered_image());
  auto c = client(tampered, token);
  ServerSession s(world.ctx);
  Frame reply = run_until_m4(*c, s);
  EXPECT_EQ(wire_code(reply), WireError::kAttestMeasurementMismatch);
  EXPECT_FALSE(claimed());
  try {
    c->on_profile_delivery(reply);
    FAIL();
  } catch (const sim::ServerRejected& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAttestRejected);
    EXPECT_EQ(e.wire_error(), WireError::kAttestMeasurementMismatch);
  }
}

TEST_F(ProtocolFixture, RevokedMembersRejected) {
  world.revocations.revoke_key(device.member.secret_scalar);
  {
    auto c = client();
    ServerSession s(world.ctx);
    EXPECT_EQ(wire_code(run_until_m4(*c, s)), WireError::kAttestRevokedByKey);
    EXPECT_FALSE(claimed());
  }
  world.revocations.unrevoke_key(device.member.secret_scalar);
  world.revocations.revoke_signature(world.attest_request.basename,
                                     crypto::pseudonym_for(device.member.secret_scalar,
                                                           world.attest_request.basename));
  {
    auto c = client();
    ServerSession s(world.ctx);
    EXPECT_EQ(wire_code(run_until_m4(*c, s)), WireError::kAttestRevokedBySignature);
    EXPECT_FALSE(claimed());
  }
  // A different member of the same group is unaffected.
  testkit::Device other = testkit::Device::create(group, rng);
  tee::EnclaveContext other_enclave = other.enclave();
  auto c = client(other_enclave, token);
  ServerSession s(world.ctx);
  EXPECT_EQ(run_until_m4(*c, s).type, MsgType::kProfileDelivery);
}

TEST_F(ProtocolFixture, ForeignGroupMemberBadSignature) {
  testkit::Group rogue_group = testkit::Group::create(rng);
  testkit::Device rogue = testkit::Device::create(rogue_group, rng);
  tee::EnclaveContext rogue_enclave = rogue.enclave();
  auto c = client(rogue_enclave, token);
  ServerSession s(world.ctx);
  EXPECT_EQ(wire_code(run_until_m4(*c, s)), WireError::kAttestBadSignature);
  EXPECT_FALSE(claimed());
}

// Drives the client half by hand so individual M3 fields can be falsified.
struct RogueClient {
  ProtocolFixture& f;
  crypto::DhKeyPair eph;
  ByteArray<32> nonce_c;
  Frame m1;

  explicit RogueClient(ProtocolFixture& fx) : f(fx), eph(crypto::dh_keygen(fx.rng)), nonce_c(fx.rng.array<32>()) {
    protocol::ClientHello h{nonce_c, eph.public_key.bytes(), f.token};
    m1 = Frame{MsgType::kClientHello, crypto::pk_encrypt(f.world.static_pk, h.encode(), f.rng)};
  }

  template <typename Mutate>
  Frame attest(const Frame& m2, Mutate&& mutate) {
    protocol::ServerHello sh = protocol::ServerHello::decode(crypto::pk_decrypt(eph.secret, m2.payload));
    const crypto::Digest transcript = protocol::transcript_hash(m1, m2);
    crypto::AeadKey key = protocol::derive_session_key(crypto::dh(eph.secret, sh.epk_s), transcript);
    attest::ReportData rd = attest::session_report_data(transcript, nonce_c, sh.nonce_s);
    ByteArray<32> nc = nonce_c, ns = sh.nonce_s;
    Bytes basename = sh.attest_request.basename;
    std::uint16_t tee_version = sh.attest_request.tee_version;
    mutate(rd, nc, ns, basename, tee_version);
    attest::SignedQuote q = f.enclave.attest(rd, tee_version, basename, f.clock, f.rng);
    protocol::ClientAttest body{q, nc, ns};
    Frame m3{MsgType::kClientAttest, {}};
    m3.payload = crypto::aead_seal(key, protocol::counter_nonce(0), m3.associated_data(), body.encode());
    return m3;
  }
};

TEST_F(ProtocolFixture, RogueClientFieldFaults) {
  struct Case {
    const char* name;
    std::function<void(attest::ReportData&, ByteArray<32>&, ByteArray<32>&, Bytes&, std::uint16_t&)> mutate;
    WireError expected;
  };
  std::vector<Case> cases{
      {"report_data", [](auto& rd, auto&, auto&, auto&, auto&) { rd[0] ^= 1; },
       WireError::kAttestReportDataMismatch},
      {"nonce_c", [](auto&, auto& nc, auto&, auto&, auto&) { nc[0] ^= 1; }, WireError::kNonceMismatch},
      {"nonce_s", [](auto&, auto&, auto& ns, auto&, auto&) { ns[31] ^= 1; }, WireError::kNonceMismatch},
      {"basename", [](auto&, auto&, auto&, auto& b, auto&) { b = to_bytes("unlinkable"); },
       WireError::kProtocolViolation},
      {"tee_version", [](auto&, auto&, auto&, auto&, auto& v) { v = 7; }, WireError::kProtocolViolation},
  };
  for (auto& c : cases) {
    RogueClient rogue(*this);
    ServerSession s(world.ctx);
    Frame m2 = s.handle(rogue.m1);
    ASSERT_EQ(m2.type, MsgType::kServerHello) << c.name;
    EXPECT_EQ(wire_code(s.handle(rogue.attest(m2, c.mutate))), c.expected) << c.name;
    EXPECT_FALSE(claimed()) << c.name;
    EXPECT_TRUE(s.secrets_erased()) << c.name;
  }
  RogueClient honest(*this);
  ServerSession s(world.ctx);
  Frame m2 = s.handle(honest.m1);
  EXPECT_EQ(s.handle(honest.attest(m2, [](auto&...) {})).type, MsgType::kProfileDelivery);
}

TEST_F(ProtocolFixture, ErrorFramesCarryOnlyTheCode) {
  std::vector<Frame> errors;
  {
    ServerSession s(world.ctx);
    errors.push_back(s.handle(client(enclave, rng.array<16>())->start()));
  }
  {
    world.revocations.revoke_key(device.member.secret_scalar);
    auto c = client();
    ServerSession s(world.ctx);
    errors.push_back(run_until_m4(*c, s));
    world.revocations.unrevoke_key(device.member.secret_scalar);
  }
  {
    ServerSession s(world.ctx);
    errors.push_back(s.handle(Frame{MsgType::kClientHello, Bytes(10, 0)}));
  }
  for (const Frame& f : errors) {
    ASSERT_EQ(f.type, MsgType::kError);
    EXPECT_EQ(f.payload.size(), 2u);
    EXPECT_EQ(f.encode().size(), 11u);
  }
}

TEST_F(ProtocolFixture, ForwardSecrecyAgainstStaticKeyCompromise) {
  auto c = client();
  testkit::DirectTransport t(world.ctx);
  t.send(c->start());
  t.send(c->on_server_hello(t.receive()));
  Frame m4 = t.receive();
  ASSERT_EQ(m4.type, MsgType::kProfileDelivery);
  c->on_profile_delivery(m4);
  const Frame& m1 = t.client_frames()[0];
  const Frame& m2 = t.server_frames()[0];

  // The static key opens M1 but learns only public values from it.
  protocol::ClientHello h = protocol::ClientHello::decode(crypto::pk_decrypt(world.static_secret, m1.payload));
  EXPECT_EQ(error_of([&] { crypto::pk_decrypt(world.static_secret, m2.payload); }), ErrorCode::kDecryptFailure);

  const crypto::Digest transcript = protocol::transcript_hash(m1, m2);
  std::vector<crypto::AeadKey> guesses{
      protocol::derive_session_key(crypto::dh(world.static_secret, h.epk_c), transcript),
      protocol::derive_session_key(h.epk_c, transcript),
      protocol::derive_session_key(world.static_secret.bytes(), transcript),
      crypto::kdf32(crypto::dh(world.static_secret, h.epk_c), as_bytes("vsim-pke")),
  };
  for (const auto& key : guesses) {
    EXPECT_EQ(error_of([&] {
                crypto::aead_open(key, protocol::counter_nonce(1), m4.associated_data(), m4.payload);
              }),
              ErrorCode::kAuthFailure);
  }
}

TEST_F(ProtocolFixture, SingleClaimUnderConcurrency) {
  constexpr int kThreads = 16;
  std::atomic<int> delivered{0}, already_claimed{0}, other{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < kThreads; ++i) {
    threads.emplace_back([&, i] {
      SeededRandom local(1000 + i);
      ProvisioningClient c(enclave, world.static_pk, world.attest_request, token, local, clock);
      ServerSession s(world.ctx);
      Frame m2 = s.handle(c.start());
      Frame reply = m2.type == MsgType::kError ? m2 : s.handle(c.on_server_hello(m2));
      if (reply.type == MsgType::kProfileDelivery) {
        ++delivered;
      } else if (wire_code(reply) == WireError::kTokenAlreadyClaimed) {
        ++already_claimed;
      } else {
        ++other;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(delivered.load(), 1);
  EXPECT_EQ(already_claimed.load(), kThreads - 1);
  EXPECT_EQ(other.load(), 0);
}

TEST_F(ProtocolFixture, SessionLogRecordsPseudonyms) {
  auto c = client();
  ServerSession s(world.ctx);
  run_until_m4(*c, s);
  auto records = world.session_log.read();
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].verdict, attest::QuoteVerdict::kAccepted);
  EXPECT_EQ(records[0].basename, world.attest_request.basename);
  EXPECT_EQ(records[0].pseudonym, crypto::pseudonym_for(device.member.secret_scalar, world.attest_request.basename));
}

}  // namespace
}  // namespace vsim
