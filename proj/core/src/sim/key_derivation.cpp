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

#include "vsim/sim/key_derivation.hpp"

#include "vsim/crypto/hash.hpp"

namespace vsim::sim {

ByteArray<32> kdf_3gpp(ByteView key, std::uint8_t fc, std::initializer_list<ByteView> params) {
  ByteWriter w;
  w.put_u8(fc);
  for (ByteView p : params) {
    w.put(p);
    w.put_u16(static_cast<std::uint16_t>(p.size()));
  }
  return crypto::hmac_sha256(key, w.bytes());
}

ByteArray<16> derive_res_star(const CipherKey& ck, const IntegrityKey& ik, std::string_view serving_network_name,
                              const Rand& rand, ByteView res) {
  Bytes key = concat({ck, ik});
  ByteArray<32> out = kdf_3gpp(key, kFcResStar, {as_bytes(serving_network_name), rand, res});
  secure_wipe(key);
  ByteArray<16> res_star;
  std::copy(out.begin() + 16, out.end(), res_star.begin());
  return res_star;
}

ByteArray<32> derive_k_ausf(const CipherKey& ck, const IntegrityKey& ik, std::string_view serving_network_name,
                            const Sqn& sqn_xor_ak) {
  Bytes key = concat({ck, ik});
  ByteArray<32> out = kdf_3gpp(key, kFcKAusf, {as_bytes(serving_network_name), sqn_xor_ak});
  secure_wipe(key);
  return out;
}

ByteArray<16> derive_hxres_star(const Rand& rand, const ByteArray<16>& xres_star) {
  crypto::Digest d = crypto::hash(concat({rand, xres_star}));
  ByteArray<16> out;
  std::copy(d.begin(), d.begin() + 16, out.begin());
  return out;
}

}  // namespace vsim::sim
