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

#pragma once

#include "vsim/common/bytes.hpp"

namespace vsim::crypto {

inline constexpr std::size_t kAeadKeySize = 32;
inline constexpr std::size_t kAeadNonceSize = 12;
inline constexpr std::size_t kAeadTagSize = 16;

using AeadKey = ByteArray<kAeadKeySize>;
using AeadNonce = ByteArray<kAeadNonceSize>;

/// ChaCha20-Poly1305 (IETF). Output is ciphertext || 16-byte tag.
Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView plaintext);

/// Throws kAuthFailure on any modification of ciphertext, tag or AD.
Bytes aead_open(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView ciphertext);

/// Buffer-reusing forms: `out` is resized and overwritten.
void aead_seal(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView plaintext, Bytes& out);
void aead_open(const AeadKey& key, const AeadNonce& nonce, ByteView associated_data, ByteView ciphertext, Bytes& out);

}  // namespace vsim::crypto
