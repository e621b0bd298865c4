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

#include "vsim/crypto/hash.hpp"

#include <new>

#include "internal/sodium.hpp"

namespace vsim::crypto {

static_assert(sizeof(crypto_hash_sha256_state) <= 128);

Digest hash(ByteView data) {
  detail::ensure_sodium();
  Digest out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

Hasher::Hasher() {
  detail::ensure_sodium();
  crypto_hash_sha256_init(new (state_) crypto_hash_sha256_state);
}

Hasher& Hasher::update(ByteView data) {
  crypto_hash_sha256_update(std::launder(reinterpret_cast<crypto_hash_sha256_state*>(state_)), data.data(),
                            data.size());
  return *this;
}

Digest Hasher::finish() {
  Digest out;
  crypto_hash_sha256_final(std::launder(reinterpret_cast<crypto_hash_sha256_state*>(state_)), out.data());
  return out;
}

Digest hmac_sha256(ByteView key, ByteView data) {
  detail::ensure_sodium();
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key.data(), key.size());
  crypto_auth_hmacsha256_update(&st, data.data(), data.size());
  Digest out;
  crypto_auth_hmacsha256_final(&st, out.data());
  sodium_memzero(&st, sizeof st);
  return out;
}

ByteArray<64> hash512(ByteView data) {
  detail::ensure_sodium();
  ByteArray<64> out;
  crypto_hash_sha512(out.data(), data.data(), data.size());
  return out;
}

}  // namespace vsim::crypto
