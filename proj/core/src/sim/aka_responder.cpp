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

#include "vsim/sim/aka_responder.hpp"

#include "vsim/sim/key_derivation.hpp"

namespace vsim::sim {

std::string_view describe(const AuthResult& r) {
  if (std::holds_alternative<AuthSuccess>(r)) return "Success";
  if (std::holds_alternative<SyncFailure>(r)) return "SyncFailure";
  return "MacFailure";
}

Auts make_auts(const SubscriberProfile& profile, const Rand& rand) {
  const Sqn sqn_ms = sqn_bytes(profile.sqn);
  const AnonymityKey ak_s = f5_star(profile.k, profile.opc, rand);
  const Sqn concealed = xor_bytes(sqn_ms, ak_s);
  const Mac mac_s = f1_star(profile.k, profile.opc, rand, sqn_ms, kResyncAmf);
  Auts auts;
  std::copy(concealed.begin(), concealed.end(), auts.begin());
  std::copy(mac_s.begin(), mac_s.end(), auts.begin() + 6);
  return auts;
}

ChallengeOutcome respond_to_challenge(const SubscriberProfile& profile, const AuthChallenge& challenge,
                                      std::string_view serving_network_name) {
  const Rand& rand = challenge.rand;
  Sqn conc;
  Amf amf;
  Mac mac;
  std::copy(challenge.autn.begin(), challenge.autn.begin() + 6, conc.begin());
  std::copy(challenge.autn.begin() + 6, challenge.autn.begin() + 8, amf.begin());
  std::copy(challenge.autn.begin() + 8, challenge.autn.end(), mac.begin());

  const AnonymityKey ak = f5(profile.k, profile.opc, rand);
  const Sqn sqn_net = xor_bytes(conc, ak);
  const Mac expected = f1(profile.k, profile.opc, rand, sqn_net, amf);
  if (!constant_time_equal(expected, mac)) return {MacFailure{}, profile};

  const std::uint64_t net = sqn_value(sqn_net);
  if (net <= profile.sqn || net - profile.sqn > kSqnWindow) {
    return {SyncFailure{make_auts(profile, rand)}, profile};
  }

  const Res res = f2(profile.k, profile.opc, rand);
  CipherKey ck = f3(profile.k, profile.opc, rand);
  IntegrityKey ik = f4(profile.k, profile.opc, rand);
  AuthSuccess ok{derive_res_star(ck, ik, serving_network_name, rand, res),
                 derive_k_ausf(ck, ik, serving_network_name, conc)};
  secure_wipe(ck);
  secure_wipe(ik);

  SubscriberProfile updated = profile;
  updated.sqn = net;
  return {ok, std::move(updated)};
}

}  // namespace vsim::sim
