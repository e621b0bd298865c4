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

#include "vsim/crypto/kdf.hpp"

#include "vsim/crypto/hash.hpp"

namespace vsim::crypto {

Bytes kdf(ByteView input_key_material, ByteView context_label, std::size_t out_len) {
  if (out_len > kKdfMaxOutput) {
    throw Error(ErrorCode::kLengthError, "kdf output limited to " + std::to_string(kKdfMaxOutput) + " bytes");
  }
  const ByteArray<32> salt{};
  Digest prk = hmac_sha256(salt, input_key_material);

  Bytes okm;
  okm.reserve(out_len);
  Bytes block;
  for (std::uint8_t counter = 1; okm.size() < out_len; ++counter) {
    block.insert(block.end(), context_label.begin(), context_label.end());
    block.push_back(counter);
    Digest t = hmac_sha256(prk, block);
    std::size_t take = std::min<std::size_t>(t.size(), out_len - okm.size());
    okm.insert(okm.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(take));
    block.assign(t.begin(), t.end());
  }
  secure_wipe(prk);
  secure_wipe(block);
  return okm;
}

ByteArray<32> kdf32(ByteView input_key_material, ByteView context_label) {
  Bytes okm = kdf(input_key_material, context_label, 32);
  ByteArray<32> out;
  std::copy(okm.begin(), okm.end(), out.begin());
  secure_wipe(okm);
  return out;
}

}  // namespace vsim::crypto
