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

#include "vsim/crypto/pke.hpp"

#include "vsim/crypto/aead.hpp"
#include "vsim/crypto/dh.hpp"
#include "vsim/crypto/kdf.hpp"

namespace vsim::crypto {
namespace {

constexpr std::string_view kPkeLabel = "vsim-pke";

AeadKey pke_key(ByteView shared, const ByteArray<32>& epk, const ByteArray<32>& recipient) {
  return kdf32(shared, concat({as_bytes(kPkeLabel), epk, recipient}));
}

}  // namespace

Bytes pk_encrypt(const Point& recipient, ByteView plaintext, RandomSource& rng) {
  DhKeyPair eph = dh_keygen(rng);
  ByteArray<32> shared = dh(eph.secret, recipient);
  AeadKey key = pke_key(shared, eph.public_key.bytes(), recipient.bytes());
  const AeadNonce nonce{};
  Bytes ct = aead_seal(key, nonce, eph.public_key.bytes(), plaintext);
  secure_wipe(shared);
  secure_wipe(key);
  eph.wipe();
  return concat({eph.public_key.bytes(), ct});
}

Bytes pk_decrypt(const Scalar& recipient_secret, ByteView sealed) {
  if (sealed.size() < kPkeOverhead) throw Error(ErrorCode::kDecryptFailure, "sealed message too short");
  auto epk = Point::from_bytes(sealed.first(32));
  if (!epk) throw Error(ErrorCode::kDecryptFailure, "bad ephemeral key");
  try {
    Point self = Point::base_mul(recipient_secret);
    ByteArray<32> shared = dh(recipient_secret, *epk);
    AeadKey key = pke_key(shared, epk->bytes(), self.bytes());
    secure_wipe(shared);
    const AeadNonce nonce{};
    Bytes pt = aead_open(key, nonce, epk->bytes(), sealed.subspan(32));
    secure_wipe(key);
    return pt;
  } catch (const Error&) {
    throw Error(ErrorCode::kDecryptFailure);
  }
}

}  // namespace vsim::crypto
