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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vsim/crypto/signature.hpp"

namespace vsim::attest {

/// One stage of the simulated secure boot. The layer's signature is made by
/// the previous layer's embedded key (the hardware root key for layer 0)
/// over `image || next_layer_pk`, since the next-layer key is part of the
/// image content.
struct BootLayer {
  Bytes image;
  Bytes image_signature;
  ByteArray<32> next_layer_pk{};
};

class BootVerdict {
 public:
  static BootVerdict trusted() { return BootVerdict(std::nullopt); }
  static BootVerdict broken_at(std::size_t index) { return BootVerdict(index); }

  bool is_trusted() const { return !broken_; }
  /// Index of the first layer that failed; only meaningful when untrusted.
  std::size_t broken_index() const { return broken_.value_or(0); }
  friend bool operator==(const BootVerdict&, const BootVerdict&) = default;

 private:
  explicit BootVerdict(std::optional<std::size_t> b) : broken_(b) {}
  std::optional<std::size_t> broken_;
};

Bytes signed_layer_content(const BootLayer& layer);

/// Layer i must verify under layer i-1's next_layer_pk (layer 0 under
/// root_pk). An empty chain is reported as broken at 0.
BootVerdict verify_boot_chain(ByteView root_pk, std::span<const BootLayer> chain);

/// Manifest file: records of
///   image_len(4,BE) || image || sig_len(2,BE) || sig || next_layer_pk(32)
Bytes serialize_manifest(std::span<const BootLayer> chain);
/// Throws kManifestParseError.
std::vector<BootLayer> parse_manifest(ByteView data);

/// Builds a correctly signed chain over `images`. Returns the chain; the
/// per-layer signing keys are derived from `rng` and discarded except for
/// the last layer's, which is returned so a caller can extend the chain.
struct BuiltChain {
  std::vector<BootLayer> layers;
  crypto::SigningKey last_layer_key;
};
BuiltChain build_boot_chain(const crypto::SigningKey& root, std::span<const Bytes> images,
                            RandomSource& rng = system_random());

}  // namespace vsim::attest
