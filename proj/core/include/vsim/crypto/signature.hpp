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

inline constexpr std::size_t kSignatureSize = 64;
using Signature = ByteArray<kSignatureSize>;

/// Deterministic Schnorr signatures over ristretto255, used for the boot
/// chain and for member credentials. Signature = R(32) || z(32) with
/// r = H512("vsim-sig-nonce" || sk || m), c = H512("vsim-sig" || R || pk || m),
/// z = r + c*sk.
struct SigningKey {
  Scalar secret;
  Point public_key;

  static SigningKey from_secret(const Scalar& secret);
};

SigningKey sig_keygen(RandomSource& rng = system_random());
Signature sig_sign(const SigningKey& key, ByteView message);

/// Never throws; malformed keys or signatures verify as false.
bool sig_verify(ByteView public_key, ByteView message, ByteView signature);
bool sig_verify(const Point& public_key, ByteView message, ByteView signature);

}  // namespace vsim::crypto
