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

using Digest = ByteArray<32>;

/// SHA-256.
Digest hash(ByteView data);

/// Streaming SHA-256 for transcripts built from several pieces.
class Hasher {
 public:
  Hasher();
  Hasher& update(ByteView data);
  Digest finish();

 private:
  alignas(16) unsigned char state_[128];
};

Digest hmac_sha256(ByteView key, ByteView data);

/// SHA-512, used internally for scalar and group-element derivation.
ByteArray<64> hash512(ByteView data);

}  // namespace vsim::crypto
