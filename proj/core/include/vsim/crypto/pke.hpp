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

#include "vsim/crypto/group.hpp"

namespace vsim::crypto {

/// Ephemeral-static public-key encryption:
///   sealed = epk(32) || aead_seal(kdf(dh(esk, R), "vsim-pke" || epk || R), 0, epk, m)
/// where R is the recipient key and (esk, epk) a one-shot keypair.
Bytes pk_encrypt(const Point& recipient, ByteView plaintext, RandomSource& rng = system_random());

/// Throws kDecryptFailure on tamper, truncation or wrong key.
Bytes pk_decrypt(const Scalar& recipient_secret, ByteView sealed);

inline constexpr std::size_t kPkeOverhead = 32 + 16;

}  // namespace vsim::crypto
