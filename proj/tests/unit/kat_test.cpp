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

// Vectors in tests/data/kat_vectors.json come from tests/oracle/gen_kat.py,
// which uses Python's hashlib/hmac and the `cryptography` AES primitive.
#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>

#include "testkit.hpp"
#include "vsim/crypto/cbc.hpp"
#include "vsim/crypto/hash.hpp"
#include "vsim/crypto/kdf.hpp"
#include "vsim/network/subscriber_entry.hpp"
#include "vsim/sim/aka_functions.hpp"
#include "vsim/sim/aka_responder.hpp"
#include "vsim/sim/key_derivation.hpp"

namespace vsim {
namespace {

using nlohmann::json;

const json& vectors() {
  static const json j = [] {
    std::ifstream in(testkit::test_data_dir() / "kat_vectors.json");
    return json::parse(in);
  }();
  return j;
}

template <std::size_t N>
ByteArray<N> arr(const json& v) {
  return array_from_hex<N>(v.get<std::string>());
}

Bytes hex(const json& v) { return from_hex(v.get<std::string>()); }

TEST(Kat, Sha256Empty) { EXPECT_EQ(to_hex(crypto::hash({})), vectors()["sha256_empty"].get<std::string>()); }

TEST(Kat, Kdf) {
  ASSERT_FALSE(vectors()["kdf"].empty());
  for (const auto& v : vectors()["kdf"]) {
    EXPECT_EQ(to_hex(crypto::kdf(hex(v["ikm"]), hex(v["label"]), v["out_len"].get<std::size_t>())),
              v["okm"].get<std::string>());
  }
}

TEST(Kat, CbcMac256) {
  for (const auto& v : vectors()["cbc_mac_256"]) {
    EXPECT_EQ(to_hex(crypto::cbc_mac_256(hex(v["key"]), hex(v["msg"]))), v["mac"].get<std::string>());
  }
}

TEST(Kat, CbcEncrypt256) {
  for (const auto& v : vectors()["cbc_encrypt_256"]) {
    Bytes ct = crypto::cbc_encrypt_256(hex(v["key"]), arr<16>(v["iv"]), hex(v["pt"]));
    EXPECT_EQ(to_hex(ct), v["ct"].get<std::string>());
    EXPECT_EQ(crypto::cbc_decrypt_256(hex(v["key"]), arr<16>(v["iv"]), ct), hex(v["pt"]));
  }
}

TEST(Kat, AkaFunctions) {
  ASSERT_GE(vectors()["aka"].size(), 5u);
  for (const auto& v : vectors()["aka"]) {
    const auto k = arr<32>(v["k"]);
    const auto opc = arr<16>(v["opc"]);
    const auto rand = arr<16>(v["rand"]);
    const auto amf = arr<2>(v["amf"]);
    const sim::Sqn sqn = sim::sqn_bytes(v["sqn"].get<std::uint64_t>());
    EXPECT_EQ(to_hex(sim::f1(k, opc, rand, sqn, amf)), v["f1"].get<std::string>());
    EXPECT_EQ(to_hex(sim::f1_star(k, opc, rand, sqn, amf)), v["f1_star"].get<std::string>());
    EXPECT_EQ(to_hex(sim::f2(k, opc, rand)), v["f2"].get<std::string>());
    EXPECT_EQ(to_hex(sim::f3(k, opc, rand)), v["f3"].get<std::string>());
    EXPECT_EQ(to_hex(sim::f4(k, opc, rand)), v["f4"].get<std::string>());
    EXPECT_EQ(to_hex(sim::f5(k, opc, rand)), v["f5"].get<std::string>());
    EXPECT_EQ(to_hex(sim::f5_star(k, opc, rand)), v["f5_star"].get<std::string>());

    const std::string snn = v["snn"].get<std::string>();
    const auto ck = sim::f3(k, opc, rand);
    const auto ik = sim::f4(k, opc, rand);
    const auto res_star = sim::derive_res_star(ck, ik, snn, rand, sim::f2(k, opc, rand));
    EXPECT_EQ(to_hex(res_star), v["res_star"].get<std::string>());
    EXPECT_EQ(to_hex(sim::derive_hxres_star(rand, res_star)), v["hxres_star"].get<std::string>());
  }
}

TEST(Kat, NetworkVectorAndUeResponseMatchOracle) {
  for (const auto& v : vectors()["aka"]) {
    sim::SubscriberProfile p;
    p.supi = "001010000000001";
    p.k = arr<32>(v["k"]);
    p.opc = arr<16>(v["opc"]);
    p.amf = arr<2>(v["amf"]);
    p.serving_network_name = v["snn"].get<std::string>();
    const std::uint64_t sqn = v["sqn"].get<std::uint64_t>();
    // The UE only accepts SQNs above its stored value.
    if (sqn == 0) continue;
    p.sqn = sqn - 1;
    sim::AuthChallenge ch{arr<16>(v["rand"]), arr<16>(v["autn"])};
    auto out = sim::respond_to_challenge(p, ch, p.serving_network_name);
    const auto* ok = std::get_if<sim::AuthSuccess>(&out.result);
    ASSERT_NE(ok, nullptr) << sim::describe(out.result);
    EXPECT_EQ(to_hex(ok->res_star), v["res_star"].get<std::string>());
    EXPECT_EQ(to_hex(ok->k_ausf), v["k_ausf"].get<std::string>());
    EXPECT_EQ(out.profile.sqn, sqn);
  }
}

class FixedRandom final : public RandomSource {
 public:
  explicit FixedRandom(Bytes data) : data_(std::move(data)) {}
  void fill(std::span<std::uint8_t> out) override {
    ASSERT_LE(out.size(), data_.size());
    std::copy_n(data_.begin(), out.size(), out.begin());
  }

 private:
  Bytes data_;
};

TEST(Kat, GeneratedAuthVectorMatchesOracle) {
  for (const auto& v : vectors()["aka"]) {
    const std::uint64_t sqn = v["sqn"].get<std::uint64_t>();
    if (sqn == 0) continue;
    network::NetworkSubscriberEntry e{"001010000000001", arr<32>(v["k"]), arr<16>(v["opc"]), arr<2>(v["amf"]),
                                      sqn - 1, v["snn"].get<std::string>()};
    FixedRandom rng(hex(v["rand"]));
    network::AuthVector av = network::generate_auth_vector(e, rng);
    EXPECT_EQ(e.sqn_he, sqn);
    EXPECT_EQ(to_hex(av.autn), v["autn"].get<std::string>());
    EXPECT_EQ(to_hex(av.xres_star), v["res_star"].get<std::string>());
    EXPECT_EQ(to_hex(av.hxres_star), v["hxres_star"].get<std::string>());
    EXPECT_EQ(to_hex(av.k_ausf), v["k_ausf"].get<std::string>());
  }
}

TEST(Kat, Kdf3gpp) {
  for (const auto& v : vectors()["kdf_3gpp"]) {
    const auto ck = arr<16>(v["ck"]);
    const auto ik = arr<16>(v["ik"]);
    const std::string snn = v["snn"].get<std::string>();
    EXPECT_EQ(to_hex(sim::derive_res_star(ck, ik, snn, arr<16>(v["rand"]), arr<8>(v["res"]))),
              v["res_star"].get<std::string>());
    EXPECT_EQ(to_hex(sim::derive_k_ausf(ck, ik, snn, arr<6>(v["sqn_xor_ak"]))), v["k_ausf"].get<std::string>());
  }
}

TEST(Kat, ZeroVectorAutnMatchesOracle) {
  const auto& v = vectors()["aka"][0];
  ASSERT_EQ(v["sqn"].get<std::uint64_t>(), 0u);
  const auto k = arr<32>(v["k"]);
  const auto opc = arr<16>(v["opc"]);
  const auto rand = arr<16>(v["rand"]);
  const auto conc = sim::xor_bytes(sim::sqn_bytes(0), sim::f5(k, opc, rand));
  const auto mac = sim::f1(k, opc, rand, sim::sqn_bytes(0), arr<2>(v["amf"]));
  EXPECT_EQ(to_hex(conc) + v["amf"].get<std::string>() + to_hex(mac), v["autn"].get<std::string>());
  const auto ck = sim::f3(k, opc, rand);
  const auto ik = sim::f4(k, opc, rand);
  EXPECT_EQ(to_hex(sim::derive_k_ausf(ck, ik, v["snn"].get<std::string>(), conc)), v["k_ausf"].get<std::string>());
}

}  // namespace
}  // namespace vsim
