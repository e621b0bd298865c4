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

#include <filesystem>

#include "vsim/crypto/cbc.hpp"

namespace vsim::tee {

/// Encrypted-at-rest container written to untrusted storage:
///   magic "VSIM"(4) || version(1) || iv(16) || ciphertext(16n, n >= 1) || mac(16)
/// ciphertext is AES-256-CBC of the plaintext; mac is CBC-MAC over
/// magic || version || iv || ciphertext (encrypt-then-MAC).
struct SealedBlob {
  static constexpr ByteArray<4> kMagic{'V', 'S', 'I', 'M'};
  static constexpr std::uint8_t kVersion = 0x01;
  static constexpr std::size_t kHeaderSize = 4 + 1 + 16;
  static constexpr std::size_t kMinSize = kHeaderSize + 16 + 16;

  std::uint8_t version = kVersion;
  crypto::CbcIv iv{};
  Bytes ciphertext;
  crypto::CbcMac mac{};

  /// The bytes covered by the mac.
  Bytes authenticated_bytes() const;
  Bytes serialize() const;
  /// Throws kBadHeader on bad magic, short or misaligned input, and
  /// kVersionUnsupported on an unknown version byte.
  static SealedBlob parse(ByteView data);
  friend bool operator==(const SealedBlob&, const SealedBlob&) = default;
};

/// Atomic: writes a temp file then renames over `path`. Throws kIoError.
void store_blob(const std::filesystem::path& path, const SealedBlob& blob);
/// Throws kIoError if unreadable, kBadHeader/kVersionUnsupported on parse.
SealedBlob load_blob(const std::filesystem::path& path);

}  // namespace vsim::tee
