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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "vsim/attestation/measurement.hpp"
#include "vsim/crypto/group.hpp"
#include "vsim/crypto/group_signature.hpp"

namespace vsim::provisioner {

/// Key-value provisioner configuration. Keys:
///   listen_host, listen_port, static_key_file, group_public_key (hex),
///   revocation_file, expected_measurement (hex), inventory, basename,
///   tee_version, session_timeout, replay_window, replay_capacity,
///   session_log (optional), rng_seed (optional)
/// `static_key_file` holds the hex static secret on its first line.
/// Relative paths resolve against the config file's directory.
struct ProvisionerConfig {
  std::string listen_host = "127.0.0.1";
  std::uint16_t listen_port = 0;
  std::filesystem::path static_key_file;
  crypto::Scalar static_secret;
  crypto::GroupPublicKey group_public_key{crypto::Point::generator(), {}};
  std::filesystem::path revocation_file;
  attest::Measurement expected_measurement;
  std::filesystem::path inventory;
  std::string basename;
  std::uint16_t tee_version = 1;
  std::uint64_t session_timeout = 30;
  std::uint64_t replay_window = 600;
  std::size_t replay_capacity = 1 << 16;
  std::optional<std::filesystem::path> session_log;
  std::optional<ByteArray<32>> rng_seed;

  /// Throws kConfigError on missing or invalid fields, including missing
  /// referenced files (the inventory and revocation file may be absent).
  static ProvisionerConfig load(const std::filesystem::path& path);
};

}  // namespace vsim::provisioner
