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

#include "vsim/crypto/dh.hpp"

namespace vsim::crypto {

DhKeyPair dh_keygen(RandomSource& rng) {
  Scalar sk = Scalar::random(rng);
  return {sk, Point::base_mul(sk)};
}

ByteArray<32> dh(const Scalar& secret, ByteView peer_public) {
  auto peer = Point::from_bytes(peer_public);
  if (!peer) throw Error(ErrorCode::kInvalidPoint, "peer key is malformed or the identity");
  return dh(secret, *peer);
}

ByteArray<32> dh(const Scalar& secret, const Point& peer_public) { return (peer_public * secret).bytes(); }

}  // namespace vsim::crypto
