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

#include "vsim/attestation/boot_chain.hpp"

namespace vsim::attest {

Bytes signed_layer_content(const BootLayer& layer) { return concat({layer.image, layer.next_layer_pk}); }

BootVerdict verify_boot_chain(ByteView root_pk, std::span<const BootLayer> chain) {
  if (chain.empty()) return BootVerdict::broken_at(0);
  ByteArray<32> verifier{};
  if (root_pk.size() != verifier.size()) return BootVerdict::broken_at(0);
  std::copy(root_pk.begin(), root_pk.end(), verifier.begin());

  for (std::size_t i = 0; i < chain.size(); ++i) {
    const BootLayer& layer = chain[i];
    if (!crypto::sig_verify(verifier, signed_layer_content(layer), layer.image_signature)) {
      return BootVerdict::broken_at(i);
    }
    verifier = layer.next_layer_pk;
  }
  return BootVerdict::trusted();
}

Bytes serialize_manifest(std::span<const BootLayer> chain) {
  ByteWriter w;
  for (const auto& layer : chain) {
    w.put_u32(static_cast<std::uint32_t>(layer.image.size()));
    w.put(layer.image);
    w.put_prefixed16(layer.image_signature);
    w.put(layer.next_layer_pk);
  }
  return w.take();
}

std::vector<BootLayer> parse_manifest(ByteView data) {
  ByteReader r(data, ErrorCode::kManifestParseError);
  std::vector<BootLayer> chain;
  while (r.remaining() > 0) {
    BootLayer layer;
    ByteView image = r.take(r.u32());
    layer.image.assign(image.begin(), image.end());
    ByteView sig = r.prefixed16();
    layer.image_signature.assign(sig.begin(), sig.end());
    layer.next_layer_pk = r.fixed<32>();
    chain.push_back(std::move(layer));
  }
  if (chain.empty()) throw Error(ErrorCode::kManifestParseError, "empty manifest");
  return chain;
}

BuiltChain build_boot_chain(const crypto::SigningKey& root, std::span<const Bytes> images, RandomSource& rng) {
  BuiltChain out{{}, root};
  crypto::SigningKey signer = root;
  for (const Bytes& image : images) {
    crypto::SigningKey next = crypto::sig_keygen(rng);
    BootLayer layer{image, {}, next.public_key.bytes()};
    crypto::Signature sig = crypto::sig_sign(signer, signed_layer_content(layer));
    layer.image_signature.assign(sig.begin(), sig.end());
    out.layers.push_back(std::move(layer));
    signer.secret.wipe();
    signer = next;
  }
  out.last_layer_key = signer;
  return out;
}

}  // namespace vsim::attest
