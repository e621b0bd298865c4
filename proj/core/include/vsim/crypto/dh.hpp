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

struct DhKeyPair {
  Scalar secret;
  Point public_key;

  void wipe() { secret.wipe(); }
};

DhKeyPair dh_keygen(RandomSource& rng = system_random());

/// Encoded shared element secret * peer. Throws kInvalidPoint on a
/// malformed or identity peer key.
ByteArray<32> dh(const Scalar& secret, ByteView peer_public);
ByteArray<32> dh(const Scalar& secret, const Point& peer_public);

}  // namespace vsim::crypto
