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

inline constexpr std::size_t kAesBlock = 16;
using CbcIv = ByteArray<16>;
using CbcMac = ByteArray<16>;

/// AES-256-CBC. Padding appends n bytes of value n, n in 1..16.
/// Throws kKeyLengthError unless key is exactly 32 bytes.
Bytes cbc_encrypt_256(ByteView key, const CbcIv& iv, ByteView plaintext);

/// Throws kDecryptFailure on bad length or padding.
Bytes cbc_decrypt_256(ByteView key, const CbcIv& iv, ByteView ciphertext);

/// Last block of AES-256-CBC under a zero IV over
/// u64be(len(message)) || message, zero-padded to a block multiple.
CbcMac cbc_mac_256(ByteView key, ByteView message);

}  // namespace vsim::crypto
