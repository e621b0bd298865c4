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

#include "vsim/network/subscriber_entry.hpp"

#include "vsim/common/key_value.hpp"
#include "vsim/sim/aka_responder.hpp"
#include "vsim/sim/key_derivation.hpp"

namespace vsim::network {

NetworkSubscriberEntry NetworkSubscriberEntry::from_profile(const sim::SubscriberProfile& p) {
  return {p.supi, p.k, p.opc, p.amf, p.sqn, p.serving_network_name};
}

NetworkSubscriberEntry NetworkSubscriberEntry::load(const std::filesystem::path& path) {
  KeyValueFile kv = KeyValueFile::load(path);
  NetworkSubscriberEntry e;
  e.supi = kv.get("supi");
  e.k = kv.get_hex_array<32>("k");
  e.opc = kv.get_hex_array<16>("opc");
  e.amf = kv.get_hex_array<2>("amf");
  e.sqn_he = kv.get_u64("sqn_he");
  if (e.sqn_he >= sim::kSqnLimit) throw Error(ErrorCode::kConfigError, "sqn_he: out of range");
  e.serving_network_name = kv.get("serving_network_name");
  return e;
}

void NetworkSubscriberEntry::save(const std::filesystem::path& path) const {
  KeyValueFile kv;
  kv.set("supi", supi);
  kv.set_hex("k", k);
  kv.set_hex("opc", opc);
  kv.set_hex("amf", amf);
  kv.set("sqn_he", std::to_string(sqn_he));
  kv.set("serving_network_name", serving_network_name);
  kv.save(path);
}

AuthVector generate_auth_vector(NetworkSubscriberEntry& entry, RandomSource& rng) {
  entry.sqn_he = (entry.sqn_he + 1) % sim::kSqnLimit;
  AuthVector v;
  v.rand = rng.array<16>();
  const sim::Sqn sqn = sim::sqn_bytes(entry.sqn_he);
  const sim::Sqn conc = sim::xor_bytes(sqn, sim::f5(entry.k, entry.opc, v.rand));
  const sim::Mac mac = sim::f1(entry.k, entry.opc, v.rand, sqn, entry.amf);
  std::copy(conc.begin(), conc.end(), v.autn.begin());
  std::copy(entry.amf.begin(), entry.amf.end(), v.autn.begin() + 6);
  std::copy(mac.begin(), mac.end(), v.autn.begin() + 8);

  sim::CipherKey ck = sim::f3(entry.k, entry.opc, v.rand);
  sim::IntegrityKey ik = sim::f4(entry.k, entry.opc, v.rand);
  const sim::Res xres = sim::f2(entry.k, entry.opc, v.rand);
  v.xres_star = sim::derive_res_star(ck, ik, entry.serving_network_name, v.rand, xres);
  v.k_ausf = sim::derive_k_ausf(ck, ik, entry.serving_network_name, conc);
  v.hxres_star = sim::derive_hxres_star(v.rand, v.xres_star);
  secure_wipe(ck);
  secure_wipe(ik);
  return v;
}

void process_resync(NetworkSubscriberEntry& entry, const sim::Rand& rand, const ByteArray<14>& auts) {
  sim::Sqn concealed;
  sim::Mac mac_s;
  std::copy(auts.begin(), auts.begin() + 6, concealed.begin());
  std::copy(auts.begin() + 6, auts.end(), mac_s.begin());
  const sim::Sqn sqn_ms = sim::xor_bytes(concealed, sim::f5_star(entry.k, entry.opc, rand));
  const sim::Mac expected = sim::f1_star(entry.k, entry.opc, rand, sqn_ms, sim::kResyncAmf);
  if (!constant_time_equal(expected, mac_s)) throw Error(ErrorCode::kResyncMacFailure);
  entry.sqn_he = sim::sqn_value(sqn_ms);
}

}  // namespace vsim::network
