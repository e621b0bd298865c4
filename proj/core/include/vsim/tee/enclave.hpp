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

#include <span>

#include "vsim/attestation/boot_chain.hpp"
#include "vsim/attestation/quote.hpp"
#include "vsim/crypto/group_signature.hpp"
#include "vsim/tee/sealed_blob.hpp"

namespace vsim::tee {

class BootChainError : public Error {
 public:
  explicit BootChainError(std::size_t index)
      : Error(ErrorCode::kBootChainBroken, "layer " + std::to_string(index)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// kdf(device_root_secret, "seal" || measurement, 32).
ByteArray<32> derive_sealing_key(const ByteArray<32>& device_root_secret, const attest::Measurement& measurement);

/// A loaded enclave. Everything outside this class sees only sealed blobs,
/// the measurement and signed quotes; the member key and sealing key have
/// no accessor or serialization path. Immutable after load; safe to share
/// across threads.
class EnclaveContext {
 public:
  /// Verifies the boot chain, measures the image and derives the sealing
  /// key. Throws BootChainError, kEmptyImage, or kConfigError when the
  /// member credential does not verify under `gpk`.
  static EnclaveContext load(ByteView image, const ByteArray<32>& device_root_secret,
                             const crypto::MemberPrivateKey& member_key, const crypto::GroupPublicKey& gpk,
                             ByteView root_pk, std::span<const attest::BootLayer> boot_manifest);

  EnclaveContext(const EnclaveContext&) = default;
  EnclaveContext(EnclaveContext&&) = default;
  ~EnclaveContext();

  const attest::Measurement& measurement() const { return measurement_; }
  const crypto::GroupPublicKey& group_public_key() const { return gpk_; }

  SealedBlob seal(ByteView plaintext, RandomSource& rng = system_random()) const;
  /// Throws kSealTamper on MAC mismatch (including a blob sealed by another
  /// device or image) or bad padding, kVersionUnsupported on version.
  Bytes unseal(const SealedBlob& blob) const;
  /// Unseals a stored file image. The MAC is checked before the header is
  /// interpreted, so any altered byte reports kSealTamper; kBadHeader is
  /// left for sizes no sealed blob can have.
  Bytes unseal_bytes(ByteView stored) const;

  attest::SignedQuote attest(const attest::ReportData& report_data, std::uint16_t tee_version, ByteView basename,
                             const Clock& clock = system_clock(), RandomSource& rng = system_random()) const;

 private:
  friend struct EnclaveTestPeer;
  EnclaveContext() = default;

  attest::Measurement measurement_;
  crypto::MemberPrivateKey member_key_;
  crypto::GroupPublicKey gpk_{crypto::Point::generator(), {}};
  ByteArray<32> sealing_key_{};
  ByteArray<32> enc_key_{};
  ByteArray<32> mac_key_{};
};

}  // namespace vsim::tee
