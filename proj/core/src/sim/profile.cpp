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

#include "vsim/sim/profile.hpp"

#include <algorithm>
#include <cstdio>

namespace vsim::sim {

void SubscriberProfile::validate() const {
  if (supi.size() != 15 || !std::all_of(supi.begin(), supi.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::kInvalidProfile, "supi must be 15 decimal digits");
  }
  if (sqn >= kSqnLimit) throw Error(ErrorCode::kInvalidProfile, "sqn must fit in 48 bits");
}

Bytes SubscriberProfile::serialize() const {
  validate();
  ByteWriter w;
  w.put_prefixed16(as_bytes(supi))
      .put(k)
      .put(opc)
      .put(amf)
      .put_u48(sqn)
      .put_prefixed16(as_bytes(carrier_name))
      .put_prefixed16(as_bytes(serving_network_name));
  return w.take();
}

SubscriberProfile SubscriberProfile::parse(ByteView data) {
  ByteReader r(data, ErrorCode::kProfileParseError);
  SubscriberProfile p;
  auto text = [](ByteView v) { return std::string(v.begin(), v.end()); };
  p.supi = text(r.prefixed16());
  p.k = r.fixed<32>();
  p.opc = r.fixed<16>();
  p.amf = r.fixed<2>();
  p.sqn = r.u48();
  p.carrier_name = text(r.prefixed16());
  p.serving_network_name = text(r.prefixed16());
  r.expect_end();
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kProfileParseError, e.what());
  }
  return p;
}

std::string make_serving_network_name(std::uint16_t mcc, std::uint16_t mnc) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "5G:mnc%03u.mcc%03u.3gppnetwork.org", static_cast<unsigned>(mnc),
                static_cast<unsigned>(mcc));
  return buf;
}

}  // namespace vsim::sim
