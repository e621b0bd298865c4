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

#include "vsim/tee/enclave.hpp"

#include "vsim/crypto/kdf.hpp"

namespace vsim::tee {
namespace {

constexpr std::string_view kSealLabel = "seal";
constexpr std::string_view kEncLabel = "seal-enc";
constexpr std::string_view kMacLabel = "seal-mac";

}  // namespace

ByteArray<32> derive_sealing_key(const ByteArray<32>& device_root_secret, const attest::Measurement& measurement) {
  return crypto::kdf32(device_root_secret, concat({as_bytes(kSealLabel), measurement.digest}));
}

EnclaveContext EnclaveContext::load(ByteView image, const ByteArray<32>& device_root_secret,
                                    const crypto::MemberPrivateKey& member_key, const crypto::GroupPublicKey& gpk,
                                    ByteView root_pk, std::span<const attest::BootLayer> boot_manifest) {
  attest::BootVerdict verdict = attest::verify_boot_chain(root_pk, boot_manifest);
  if (!verdict.is_trusted()) throw BootChainError(verdict.broken_index());
  if (!crypto::verify_credential(gpk, member_key)) {
    throw Error(ErrorCode::kConfigError, "member credential does not verify under the group key");
  }

  EnclaveContext ctx;
  ctx.measurement_ = attest::measure_binary(image);
  ctx.member_key_ = member_key;
  ctx.gpk_ = gpk;
  ctx.sealing_key_ = derive_sealing_key(device_root_secret, ctx.measurement_);
  ctx.enc_key_ = crypto::kdf32(ctx.sealing_key_, as_bytes(kEncLabel));
  ctx.mac_key_ = crypto::kdf32(ctx.sealing_key_, as_bytes(kMacLabel));
  return ctx;
}

EnclaveContext::~EnclaveContext() {
  member_key_.secret_scalar.wipe();
  secure_wipe(sealing_key_);
  secure_wipe(enc_key_);
  secure_wipe(mac_key_);
}

SealedBlob EnclaveContext::seal(ByteView plaintext, RandomSource& rng) const {
  SealedBlob blob;
  blob.iv = rng.array<16>();
  blob.ciphertext = crypto::cbc_encrypt_256(enc_key_, blob.iv, plaintext);
  blob.mac = crypto::cbc_mac_256(mac_key_, blob.authenticated_bytes());
  return blob;
}

Bytes EnclaveContext::unseal(const SealedBlob& blob) const {
  if (blob.version != SealedBlob::kVersion) throw Error(ErrorCode::kVersionUnsupported);
  crypto::CbcMac expected = crypto::cbc_mac_256(mac_key_, blob.authenticated_bytes());
  if (!constant_time_equal(expected, blob.mac)) throw Error(ErrorCode::kSealTamper, "mac mismatch");
  try {
    return crypto::cbc_decrypt_256(enc_key_, blob.iv, blob.ciphertext);
  } catch (const Error&) {
    throw Error(ErrorCode::kSealTamper, "bad padding");
  }
}

Bytes EnclaveContext::unseal_bytes(ByteView stored) const {
  if (stored.size() < SealedBlob::kMinSize || (stored.size() - SealedBlob::kHeaderSize - 16) % crypto::kAesBlock != 0) {
    throw Error(ErrorCode::kBadHeader, "not a sealed blob size");
  }
  const ByteView body = stored.first(stored.size() - 16);
  const crypto::CbcMac expected = crypto::cbc_mac_256(mac_key_, body);
  if (!constant_time_equal(expected, stored.last(16))) throw Error(ErrorCode::kSealTamper, "mac mismatch");
  return unseal(SealedBlob::parse(stored));
}

attest::SignedQuote EnclaveContext::attest(const attest::ReportData& report_data, std::uint16_t tee_version,
                                           ByteView basename, const Clock& clock, RandomSource& rng) const {
  attest::Quote quote = attest::make_quote(measurement_, report_data, tee_version, clock);
  return attest::sign_quote(member_key_, gpk_, quote, basename, rng);
}

}  // namespace vsim::tee
