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

#include "vsim/crypto/aead.hpp"

#include "internal/sodium.hpp"

namespace vsim::crypto {

static_assert(crypto_aead_chacha20poly1305_IETF_KEYBYTES == kAeadKeySize);
static_assert(crypto_aead_chacha20poly1305_IETF_NPUBBYTES == kAeadNonceSize);
static_assert(crypto_aead_chacha20poly1305_IETF_ABYTES == kAeadTagSize);

void aead_seal(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView plaintext,
               Bytes& out) {
  detail::ensure_sodium();
  out.resize(plaintext.size() + kAeadTagSize);
  unsigned long long out_len = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt(out.data(), &out_len, plaintext.data(), plaintext.size(),
                                            associated_data.data(), associated_data.size(), nullptr,
                                            nonce.data(), key.data());
  out.resize(static_cast<std::size_t>(out_len));
}

void aead_open(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView ciphertext,
               Bytes& out) {
  detail::ensure_sodium();
  if (ciphertext.size() < kAeadTagSize) throw Error(ErrorCode::kAuthFailure, "ciphertext shorter than tag");
  out.resize(ciphertext.size() - kAeadTagSize);
  unsigned long long out_len = 0;
  if (crypto_aead_chacha20poly1305_ietf_decrypt(out.data(), &out_len, nullptr, ciphertext.data(),
                                                ciphertext.size(), associated_data.data(),
                                                associated_data.size(), nonce.data(), key.data()) != 0) {
    secure_wipe(out);
    out.clear();
    throw Error(ErrorCode::kAuthFailure);
  }
  out.resize(static_cast<std::size_t>(out_len));
}

Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView plaintext) {
  Bytes out;
  aead_seal(key, nonce, associated_data, plaintext, out);
  return out;
}

Bytes aead_open(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView ciphertext) {
  Bytes out;
  aead_open(key, nonce, associated_data, ciphertext, out);
  return out;
}

}  // namespace vsim::crypto
