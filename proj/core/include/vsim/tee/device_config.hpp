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
#include <optional>
#include <string>

#include "vsim/crypto/group_signature.hpp"
#include "vsim/tee/enclave.hpp"

namespace vsim::tee {

/// Device config file (key = value, hex for binary). Keys:
///   device_root_secret   32 bytes
///   member_secret        32 bytes  (member scalar)
///   member_credential    64 bytes
///   group_public_key     48 bytes  (group_id || element)
///   root_pk              32 bytes  (hardware root-of-trust key)
///   enclave_image        path
///   boot_manifest        path
///   storage              path of the sealed profile
///   provisioner_host     host name or address
///   provisioner_port     decimal
///   provisioner_pk       32 bytes
///   provisioner_basename string (expected basename in the attestation request)
///   tee_version          decimal (optional, default 1)
///   activation_token     16 bytes (optional; needed for provision)
///   rng_seed             32 bytes (optional; deterministic randomness)
/// Relative paths resolve against the config file's directory.
struct DeviceConfig {
  ByteArray<32> device_root_secret{};
  crypto::MemberPrivateKey member_key;
  crypto::GroupPublicKey group_public_key{crypto::Point::generator(), {}};
  ByteArray<32> root_pk{};
  std::filesystem::path enclave_image;
  std::filesystem::path boot_manifest;
  std::filesystem::path storage;
  std::string provisioner_host = "127.0.0.1";
  std::uint16_t provisioner_port = 0;
  std::optional<crypto::Point> provisioner_pk;
  std::string provisioner_basename;
  std::uint16_t tee_version = 1;
  std::optional<ByteArray<16>> activation_token;
  std::optional<ByteArray<32>> rng_seed;

  /// Throws kConfigError.
  static DeviceConfig load(const std::filesystem::path& path);
};

/// Reads image and manifest from disk and calls EnclaveContext::load.
EnclaveContext load_enclave(const DeviceConfig& config);

}  // namespace vsim::tee
