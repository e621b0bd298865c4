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

#include <set>

#include "testkit.hpp"
#include "vsim/network/attach.hpp"
#include "vsim/network/data_path.hpp"
#include "vsim/sim/aka_functions.hpp"
#include "vsim/sim/vsim.hpp"

namespace vsim::network {
namespace {

struct ProvisionedDevice {
  SeededRandom rng{21};
  ManualClock clock;
  testkit::Group group = testkit::Group::create(rng);
  testkit::Device device = testkit::Device::create(group, rng);
  testkit::ProvisionerWorld world{group.gpk};
  testkit::TempDir dir;
  sim::SubscriberProfile profile = testkit::random_profile(rng, 1);
  sim::VSim vsim{device.enclave(), dir / "profile.sealed", rng, clock};

  ProvisionedDevice() {
    auto token = world.inventory.add_profile(profile, rng);
    testkit::DirectTransport t(world.ctx);
    vsim.provision(t, world.static_pk, world.attest_request, token);
  }
};

TEST(AuthVectors, FreshRandAndIncreasingSqn) {
  SeededRandom rng(1);
  NetworkSubscriberEntry e = NetworkSubscriberEntry::from_profile(testkit::random_profile(rng, 1));
  const std::uint64_t start = e.sqn_he;
  std::set<sim::Rand> rands;
  std::uint64_t last = start;
  for (int i = 0; i < 50; ++i) {
    AuthVector v = generate_auth_vector(e, rng);
    EXPECT_GT(e.sqn_he, last);
    last = e.sqn_he;
    rands.insert(v.rand);
    crypto::Digest h = crypto::hash(concat({v.rand, v.xres_star}));
    EXPECT_TRUE(std::equal(v.hxres_star.begin(), v.hxres_star.end(), h.begin()));
  }
  EXPECT_EQ(rands.size(), 50u);
  EXPECT_EQ(last, start + 50);
}

TEST(AuthVectors, DeviceAgreesOnKeys) {
  SeededRandom rng(2);
  auto profile = testkit::random_profile(rng, 2);
  NetworkSubscriberEntry e = NetworkSubscriberEntry::from_profile(profile);
  AuthVector v = generate_auth_vector(e, rng);
  sim::ChallengeOutcome out = sim::respond_to_challenge(profile, {v.rand, v.autn}, e.serving_network_name);
  auto* ok = std::get_if<sim::AuthSuccess>(&out.result);
  ASSERT_NE(ok, nullptr);
  EXPECT_EQ(ok->res_star, v.xres_star);
  EXPECT_EQ(ok->k_ausf, v.k_ausf);
  EXPECT_EQ(out.profile.sqn, e.sqn_he);
}

TEST(AuthVectors, EntryFileRoundTrip) {
  testkit::TempDir dir;
  SeededRandom rng(3);
  NetworkSubscriberEntry e = NetworkSubscriberEntry::from_profile(testkit::random_profile(rng, 3));
  e.save(dir / "entry.conf");
  NetworkSubscriberEntry back = NetworkSubscriberEntry::load(dir / "entry.conf");
  EXPECT_EQ(back.supi, e.supi);
  EXPECT_EQ(back.k, e.k);
  EXPECT_EQ(back.opc, e.opc);
  EXPECT_EQ(back.sqn_he, e.sqn_he);
  EXPECT_EQ(back.serving_network_name, e.serving_network_name);
}

TEST(Resync, RecoversSqnAndRejectsFlippedAuts) {
  SeededRandom rng(4);
  auto profile = testkit::random_profile(rng, 4);
  profile.sqn = 500'000;
  NetworkSubscriberEntry e = NetworkSubscriberEntry::from_profile(profile);
  e.sqn_he = 10;
  sim::Rand rand = rng.array<16>();
  sim::Auts auts = sim::make_auts(profile, rand);
  for (std::size_t bit = 0; bit < auts.size() * 8; ++bit) {
    NetworkSubscriberEntry copy = e;
    sim::Auts bad = auts;
    bad[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    try {
      process_resync(copy, rand, bad);
      ADD_FAILURE() << "bit " << bit;
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::kResyncMacFailure);
    }
    EXPECT_EQ(copy.sqn_he, 10u);
  }
  process_resync(e, rand, auts);
  EXPECT_EQ(e.sqn_he, 500'000u);
}

TEST(Attach, VSimAttachesInOneRoundTrip) {
  ProvisionedDevice d;
  ServingNetwork net(NetworkSubscriberEntry::from_profile(d.profile), d.rng);
  VSimModule module(d.vsim);
  MobileEquipment ue(module);
  AttachReport r = attach(ue, net);
  EXPECT_EQ(r.outcome, AttachOutcome::kAttached);
  EXPECT_EQ(r.reason, RejectReason::kNone);
  EXPECT_EQ(r.auth_round_trips, 1u);
  EXPECT_EQ(r.vsim_invocations, 1u);
  ASSERT_TRUE(ue.k_ausf() && net.k_ausf());
  EXPECT_EQ(*ue.k_ausf(), *net.k_ausf());
  EXPECT_EQ(r.format(), "attach outcome=Attached reason=None vsim_invocations=1 auth_round_trips=1");
  EXPECT_EQ(d.vsim.status().sqn, net.entry().sqn_he);
}

TEST(Attach, WrongKeyIsMacFailure) {
  ProvisionedDevice d;
  NetworkSubscriberEntry e = NetworkSubscriberEntry::from_profile(d.profile);
  e.k[0] ^= 1;
  ServingNetwork net(e, d.rng);
  VSimModule module(d.vsim);
  MobileEquipment ue(module);
  AttachReport r = attach(ue, net);
  EXPECT_EQ(r.outcome, AttachOutcome::kRejected);
  EXPECT_EQ(r.reason, RejectReason::kMacFailure);
  EXPECT_FALSE(ue.attached());
  EXPECT_FALSE(net.attached());
}

TEST(Attach, DesyncedNetworkResynchronises) {
  ProvisionedDevice d;
  NetworkSubscriberEntry e = NetworkSubscriberEntry::from_profile(d.profile);
  e.sqn_he = 0;
  ServingNetwork net(e, d.rng);
  VSimModule module(d.vsim);
  MobileEquipment ue(module);
  AttachReport r = attach(ue, net);
  EXPECT_EQ(r.outcome, AttachOutcome::kResyncedThenAttached);
  EXPECT_EQ(r.auth_round_trips, 2u);
  EXPECT_EQ(r.vsim_invocations, 2u);
  EXPECT_TRUE(r.attached());
  EXPECT_EQ(*ue.k_ausf(), *net.k_ausf());
}

TEST(Attach, UnprovisionedDevice) {
  SeededRandom rng(5);
  ManualClock clock;
  testkit::Group group = testkit::Group::create(rng);
  testkit::Device device = testkit::Device::create(group, rng);
  testkit::TempDir dir;
  sim::VSim vsim(device.enclave(), dir / "profile.sealed", rng, clock);
  ServingNetwork net(NetworkSubscriberEntry::from_profile(testkit::random_profile(rng, 1)), rng);
  VSimModule module(vsim);
  MobileEquipment ue(module);
  AttachReport r = attach(ue, net);
  EXPECT_EQ(r.outcome, AttachOutcome::kRejected);
  EXPECT_EQ(r.reason, RejectReason::kNotProvisioned);
}

TEST(Attach, ResyncWithoutPendingChallenge) {
  SeededRandom rng(6);
  ServingNetwork net(NetworkSubscriberEntry::from_profile(testkit::random_profile(rng, 1)), rng);
  try {
    net.resync(sim::Auts{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProtocolViolation);
  }
}

TEST(Attach, ThousandProfilesAgreeOnKausf) {
  SeededRandom rng(7);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto profile = testkit::random_profile(rng, i);
    ServingNetwork net(NetworkSubscriberEntry::from_profile(profile), rng);
    DirectKeyModule module(profile);
    MobileEquipment ue(module);
    AttachReport r = attach(ue, net);
    ASSERT_EQ(r.outcome, AttachOutcome::kAttached) << i;
    ASSERT_EQ(*ue.k_ausf(), *net.k_ausf()) << i;
  }
}

TEST(DataPath, RequiresAttach) {
  SeededRandom rng(8);
  auto profile = testkit::random_profile(rng, 1);
  ServingNetwork net(NetworkSubscriberEntry::from_profile(profile), rng);
  DirectKeyModule module(profile);
  MobileEquipment ue(module);
  try {
    run_data_path(ue, net, 1024);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAttached);
  }
}

TEST(DataPath, NoVSimInvocationsDuringTransfer) {
  ProvisionedDevice d;
  ServingNetwork net(NetworkSubscriberEntry::from_profile(d.profile), d.rng);
  VSimModule module(d.vsim);
  MobileEquipment ue(module);
  ASSERT_TRUE(attach(ue, net).attached());
  const std::uint64_t before = d.vsim.invocations();
  for (std::uint64_t size : {std::uint64_t{1024}, std::uint64_t{1} << 20, std::uint64_t{3'000'001}}) {
    DataPathReport r = run_data_path(ue, net, size, 64 * 1024);
    EXPECT_EQ(r.bytes_moved, size);
    EXPECT_EQ(r.vsim_invocations_during_transfer, 0u);
    EXPECT_EQ(r.module, "vsim");
  }
  EXPECT_EQ(d.vsim.invocations(), before);
}

TEST(DataPath, MismatchedUserPlaneKeysFail) {
  SeededRandom rng(9);
  auto a = testkit::random_profile(rng, 1);
  auto b = testkit::random_profile(rng, 2);
  ServingNetwork net_a(NetworkSubscriberEntry::from_profile(a), rng);
  ServingNetwork net_b(NetworkSubscriberEntry::from_profile(b), rng);
  DirectKeyModule mod_a(a), mod_b(b);
  MobileEquipment ue_a(mod_a), ue_b(mod_b);
  ASSERT_TRUE(attach(ue_a, net_a).attached());
  ASSERT_TRUE(attach(ue_b, net_b).attached());
  EXPECT_THROW(run_data_path(ue_a, net_b, 4096), Error);
}

TEST(DataPath, ParityReportShape) {
  SeededRandom rng(10);
  auto profile = testkit::random_profile(rng, 1);
  ServingNetwork net(NetworkSubscriberEntry::from_profile(profile), rng);
  DirectKeyModule module(profile);
  MobileEquipment ue(module);
  ASSERT_TRUE(attach(ue, net).attached());
  auto run = [&] { return run_data_path(ue, net, 1 << 18, 1 << 16); };
  ParityReport p = compare_throughput(run, run, 3);
  EXPECT_EQ(p.subject_runs.size(), 3u);
  EXPECT_EQ(p.control_runs.size(), 3u);
  EXPECT_GT(p.control_median_mb_per_s, 0);
  EXPECT_GE(p.relative_difference(), 0);
  EXPECT_NE(p.format().find("parity subject_median_MBps="), std::string::npos);
}

}  // namespace
}  // namespace vsim::network
