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
#include <fstream>
#include <functional>
#include <set>
#include <thread>

#include "testkit.hpp"
#include "vsim/provisioner/config.hpp"

namespace vsim::provisioner {
namespace {

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kServerError;
}

TEST(Inventory, AddListClaim) {
  testkit::TempDir dir;
  SeededRandom rng(3);
  InventoryStore store(dir / "inventory.tsv");
  EXPECT_TRUE(store.list().empty());
  auto p0 = testkit::random_profile(rng, 0);
  auto p1 = testkit::random_profile(rng, 1);
  ActivationToken t0 = store.add_profile(p0, rng);
  ActivationToken t1 = store.add_profile(p1, rng);
  EXPECT_NE(t0, t1);
  auto all = store.list();
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].profile, p0);
  EXPECT_EQ(store.check(t0), TokenStatus::kAvailable);
  EXPECT_EQ(store.check(rng.array<16>()), TokenStatus::kUnknown);

  crypto::Point nym = crypto::Point::base_mul(crypto::Scalar::random(rng));
  EXPECT_EQ(store.claim(t0, nym), p0);
  EXPECT_EQ(store.check(t0), TokenStatus::kClaimed);
  EXPECT_EQ(code_of([&] { store.claim(t0, nym); }), ErrorCode::kTokenAlreadyClaimed);
  EXPECT_EQ(code_of([&] { store.claim(rng.array<16>(), nym); }), ErrorCode::kUnknownToken);

  InventoryStore reopened(dir / "inventory.tsv");
  auto rec = reopened.find(t0);
  ASSERT_TRUE(rec && rec->claimed_by_pseudonym);
  EXPECT_EQ(*rec->claimed_by_pseudonym, nym);
  EXPECT_EQ(reopened.check(t1), TokenStatus::kAvailable);
}

TEST(Inventory, DuplicateSupiRejected) {
  testkit::TempDir dir;
  SeededRandom rng(4);
  InventoryStore store(dir / "inv");
  auto p = testkit::random_profile(rng, 5);
  store.add_profile(p, rng);
  auto again = testkit::random_profile(rng, 6);
  again.supi = p.supi;
  EXPECT_EQ(code_of([&] { store.add_profile(again, rng); }), ErrorCode::kDuplicateSupi);
  EXPECT_EQ(store.list().size(), 1u);
}

TEST(Inventory, InvalidProfileRejected) {
  testkit::TempDir dir;
  SeededRandom rng(5);
  InventoryStore store(dir / "inv");
  auto p = testkit::random_profile(rng, 1);
  p.supi = "12ab";
  EXPECT_EQ(code_of([&] { store.add_profile(p, rng); }), ErrorCode::kInvalidProfile);
}

TEST(Inventory, TenThousandUniqueTokens) {
  SeededRandom rng(6);
  std::vector<ProfileRecord> records;
  std::set<ActivationToken> tokens;
  for (std::uint64_t i = 0; i < 10'000; ++i) {
    ProfileRecord r;
    r.activation_token = rng.array<16>();
    r.profile = testkit::random_profile(rng, i);
    tokens.insert(r.activation_token);
    records.push_back(std::move(r));
  }
  EXPECT_EQ(tokens.size(), 10'000u);
  auto parsed = parse_inventory(serialize_inventory(records));
  ASSERT_EQ(parsed.size(), records.size());
  EXPECT_EQ(parsed[9'999].profile, records[9'999].profile);
  EXPECT_EQ(parsed[42].activation_token, records[42].activation_token);
}

TEST(Inventory, StoreIssuesUniqueTokens) {
  testkit::TempDir dir;
  SeededRandom rng(7);
  InventoryStore store(dir / "inv");
  std::set<ActivationToken> tokens;
  for (std::uint64_t i = 0; i < 200; ++i) tokens.insert(store.add_profile(testkit::random_profile(rng, i), rng));
  EXPECT_EQ(tokens.size(), 200u);
}

TEST(Inventory, ParseErrors) {
  EXPECT_TRUE(parse_inventory("# comment only\n\n").empty());
  EXPECT_EQ(code_of([] { parse_inventory("zz\tzz\n"); }), ErrorCode::kConfigError);
  SeededRandom rng(8);
  ProfileRecord r;
  r.activation_token = rng.array<16>();
  r.profile = testkit::random_profile(rng, 1);
  std::string line = serialize_inventory({r});
  std::string truncated = line.substr(0, line.rfind('\t'));
  EXPECT_EQ(code_of([&] { parse_inventory(truncated); }), ErrorCode::kConfigError);
  std::string bad_flag = line;
  bad_flag.replace(bad_flag.rfind("\t00"), 3, "\t07");
  EXPECT_EQ(code_of([&] { parse_inventory(bad_flag); }), ErrorCode::kConfigError);
  try {
    parse_inventory("# header\n" + line + "garbage\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(Inventory, ConcurrentClaimsAcrossStoreInstances) {
  testkit::TempDir dir;
  SeededRandom rng(9);
  ActivationToken t;
  {
    InventoryStore seed(dir / "inv");
    t = seed.add_profile(testkit::random_profile(rng, 1), rng);
  }
  std::atomic<int> ok{0}, refused{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      InventoryStore own(dir / "inv");
      try {
        own.claim(t, crypto::Point::base_mul(crypto::Scalar::from_u64(i + 1)));
        ++ok;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kTokenAlreadyClaimed) ++refused;
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(ok.load(), 1);
  EXPECT_EQ(refused.load(), 7);
}

TEST(Revocations, RoundTripAndUnrevoke) {
  testkit::TempDir dir;
  SeededRandom rng(10);
  RevocationStore store(dir / "rl.txt");
  EXPECT_TRUE(store.load().priv_rl.empty());
  crypto::Scalar s = crypto::Scalar::random(rng);
  crypto::Point nym = crypto::Point::base_mul(crypto::Scalar::random(rng));
  EXPECT_TRUE(store.revoke_key(s));
  EXPECT_FALSE(store.revoke_key(s));
  EXPECT_TRUE(store.revoke_signature(as_bytes("bn"), nym));
  EXPECT_FALSE(store.revoke_signature(as_bytes("bn"), nym));
  EXPECT_TRUE(store.revoke_signature(as_bytes("other"), nym));

  crypto::RevocationLists rl = RevocationStore(dir / "rl.txt").load();
  ASSERT_EQ(rl.priv_rl.size(), 1u);
  EXPECT_EQ(rl.priv_rl[0], s);
  ASSERT_EQ(rl.sig_rl.size(), 2u);
  EXPECT_EQ(parse_revocations(serialize_revocations(rl)), rl);

  EXPECT_TRUE(store.unrevoke_key(s));
  EXPECT_FALSE(store.unrevoke_key(s));
  EXPECT_TRUE(store.unrevoke_signature(as_bytes("bn"), nym));
  rl = store.load();
  EXPECT_TRUE(rl.priv_rl.empty());
  ASSERT_EQ(rl.sig_rl.size(), 1u);
  EXPECT_EQ(rl.sig_rl[0].basename, to_bytes("other"));
}

TEST(Revocations, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_revocations("[priv]\nnothex\n"); }), ErrorCode::kConfigError);
  EXPECT_EQ(code_of([] { parse_revocations("abcd\n"); }), ErrorCode::kConfigError);
  EXPECT_EQ(code_of([] { parse_revocations("[sig]\n00\n"); }), ErrorCode::kConfigError);
}

TEST(ReplayCacheTest, WindowAndCapacity) {
  ManualClock clock;
  ReplayCache cache(10, 4, clock);
  SeededRandom rng(11);
  auto a = rng.array<32>();
  EXPECT_TRUE(cache.check_and_insert(a));
  EXPECT_FALSE(cache.check_and_insert(a));
  clock.advance(10);
  EXPECT_FALSE(cache.check_and_insert(a));
  clock.advance(1);
  EXPECT_TRUE(cache.check_and_insert(a));
  for (int i = 0; i < 20; ++i) cache.check_and_insert(rng.array<32>());
  EXPECT_LE(cache.size(), 4u);
  EXPECT_FALSE(cache.contains(a));
}

struct ConfigFixture : ::testing::Test {
  testkit::TempDir dir;
  SeededRandom rng{12};
  crypto::Scalar secret = crypto::Scalar::random(rng);
  testkit::Group group = testkit::Group::create(rng);

  std::string base_config() {
    write_text(dir / "static.key", to_hex(secret.bytes()) + "\n");
    return "listen_port = 4100\n"
           "static_key_file = static.key\n"
           "group_public_key = " + to_hex(group.gpk.serialize()) + "\n"
           "revocation_file = revocations.txt\n"
           "expected_measurement = " + to_hex(testkit::reference_measurement().digest) + "\n"
           "inventory = inventory.tsv\n"
           "basename = carrier-a\n";
  }

  ErrorCode load_error(const std::string& text) {
    write_text(dir / "provisioner.conf", text);
    return code_of([&] { ProvisionerConfig::load(dir / "provisioner.conf"); });
  }
};

TEST_F(ConfigFixture, LoadsAndResolvesRelativePaths) {
  write_text(dir / "provisioner.conf", base_config() + "session_log = sessions.log\nrng_seed = " +
                                           std::string(64, '1') + "\n");
  ProvisionerConfig c = ProvisionerConfig::load(dir / "provisioner.conf");
  EXPECT_EQ(c.listen_host, "127.0.0.1");
  EXPECT_EQ(c.listen_port, 4100);
  EXPECT_EQ(c.static_secret, secret);
  EXPECT_EQ(c.group_public_key, group.gpk);
  EXPECT_EQ(c.inventory, dir / "inventory.tsv");
  EXPECT_EQ(c.revocation_file, dir / "revocations.txt");
  ASSERT_TRUE(c.session_log);
  EXPECT_EQ(*c.session_log, dir / "sessions.log");
  EXPECT_EQ(c.basename, "carrier-a");
  EXPECT_EQ(c.session_timeout, 30u);
  EXPECT_EQ(c.replay_window, 600u);
  EXPECT_TRUE(c.rng_seed.has_value());
}

TEST_F(ConfigFixture, RejectsBadInput) {
  const std::string good = base_config();
  std::string no_key = good;
  no_key.replace(no_key.find("static.key"), 10, "missing.key");
  EXPECT_EQ(load_error(no_key), ErrorCode::kConfigError);
  std::string cfg = good;
  write_text(dir / "static.key", "not-hex\n");
  EXPECT_EQ(load_error(cfg), ErrorCode::kConfigError);
  write_text(dir / "static.key", std::string(64, '0') + "\n");
  EXPECT_EQ(load_error(cfg), ErrorCode::kConfigError);

  std::string no_base = base_config();
  no_base.replace(no_base.find("basename = carrier-a"), 20, "tee_version = 1");
  EXPECT_EQ(load_error(no_base), ErrorCode::kConfigError);
  std::string bad_gpk = base_config();
  bad_gpk.replace(bad_gpk.find("group_public_key = ") + 19, 4, "zzzz");
  EXPECT_EQ(load_error(bad_gpk), ErrorCode::kConfigError);
  std::string bad_dir = base_config();
  bad_dir.replace(bad_dir.find("inventory.tsv"), 13, "nope/inventory.tsv");
  EXPECT_EQ(load_error(bad_dir), ErrorCode::kConfigError);
  EXPECT_EQ(load_error(base_config() + "listen_port = 70000\n"), ErrorCode::kConfigError);
  EXPECT_EQ(code_of([&] { ProvisionerConfig::load(dir / "absent.conf"); }), ErrorCode::kConfigError);
}

TEST(SessionLogTest, AppendAndRead) {
  testkit::TempDir dir;
  SeededRandom rng(13);
  SessionLog log(dir / "sessions.log");
  EXPECT_TRUE(log.read().empty());
  crypto::Point p = crypto::Point::base_mul(crypto::Scalar::random(rng));
  log.append({attest::QuoteVerdict::kAccepted, to_bytes("bn"), p});
  log.append({attest::QuoteVerdict::kRevokedByKey, to_bytes("bn"), p});
  auto recs = log.read();
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[1].verdict, attest::QuoteVerdict::kRevokedByKey);
  EXPECT_EQ(recs[0].pseudonym, p);
}

}  // namespace
}  // namespace vsim::provisioner
