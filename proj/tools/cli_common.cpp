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

#include "cli_common.hpp"

#include <cstdlib>
#include <iostream>

#include "vsim/common/key_value.hpp"
#include "vsim/crypto/hash.hpp"
#include "vsim/sim/provisioning_client.hpp"
#include "vsim/tee/enclave.hpp"

namespace vsim::cli {

int device_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigError: return 10;
    case ErrorCode::kBootChainBroken: return 11;
    case ErrorCode::kEmptyImage: return 12;
    case ErrorCode::kManifestParseError: return 13;
    case ErrorCode::kSealTamper: return 14;
    case ErrorCode::kBadHeader: return 15;
    case ErrorCode::kVersionUnsupported: return 16;
    case ErrorCode::kIoError: return 17;
    case ErrorCode::kNotProvisioned: return 20;
    case ErrorCode::kAlreadyProvisioned: return 21;
    case ErrorCode::kInvalidProfile: return 22;
    case ErrorCode::kServerNonceMismatch: return 30;
    case ErrorCode::kAttestRequestMismatch: return 31;
    case ErrorCode::kAttestRejected: return 32;
    case ErrorCode::kChannelAuthFailure: return 33;
    case ErrorCode::kProfileParseError: return 34;
    case ErrorCode::kProtocolViolation: return 35;
    case ErrorCode::kReplayDetected: return 36;
    case ErrorCode::kUnknownToken: return 37;
    case ErrorCode::kTokenAlreadyClaimed: return 38;
    case ErrorCode::kNonceMismatch: return 39;
    case ErrorCode::kDecryptFailure: return 40;
    case ErrorCode::kResyncMacFailure: return 52;
    case ErrorCode::kNotAttached: return 55;
    case ErrorCode::kTransportError: return 60;
    case ErrorCode::kTimeout: return 61;
    default: return kExitRuntime;
  }
}

int report_error(const std::exception& e, bool device) {
  if (const auto* rejected = dynamic_cast<const sim::ServerRejected*>(&e)) {
    std::cerr << "error=" << to_string(rejected->code()) << " server_error=" << to_string(rejected->wire_error())
              << "\n";
    return device ? device_exit_code(rejected->code()) : kExitRuntime;
  }
  if (const auto* boot = dynamic_cast<const tee::BootChainError*>(&e)) {
    std::cerr << "error=BootChainBroken layer=" << boot->index() << "\n";
    return device ? device_exit_code(ErrorCode::kBootChainBroken) : kExitRuntime;
  }
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    std::cerr << "error=" << to_string(err->code()) << " detail=\"" << err->what() << "\"\n";
    return device ? device_exit_code(err->code()) : kExitRuntime;
  }
  std::cerr << "error=Internal detail=\"" << e.what() << "\"\n";
  return kExitRuntime;
}

std::filesystem::path config_path(const std::string& flag_value, const char* fallback) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("VSIM_CONFIG"); env && *env) return env;
  return fallback;
}

std::unique_ptr<RandomSource> make_rng(const std::optional<ByteArray<32>>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

std::optional<ByteArray<32>> seed_from_text(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return crypto::hash(as_bytes(text));
}

std::uint64_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError("size", "not a number: " + text);
  }
  const std::string suffix = text.substr(pos);
  std::uint64_t mult = 1;
  if (suffix.empty()) {
  } else if (suffix == "K" || suffix == "k") {
    mult = 1000;
  } else if (suffix == "M") {
    mult = 1000 * 1000;
  } else if (suffix == "G") {
    mult = 1000 * 1000 * 1000;
  } else if (suffix == "Ki") {
    mult = 1 << 10;
  } else if (suffix == "Mi") {
    mult = 1 << 20;
  } else if (suffix == "Gi") {
    mult = 1 << 30;
  } else {
    throw CLI::ValidationError("size", "unknown suffix: " + suffix);
  }
  return value * mult;
}

sim::SubscriberProfile load_profile_file(const std::filesystem::path& path) {
  KeyValueFile kv = KeyValueFile::load(path);
  sim::SubscriberProfile p;
  p.supi = kv.get("supi");
  p.k = kv.get_hex_array<32>("k");
  p.opc = kv.get_hex_array<16>("opc");
  p.amf = kv.get_hex_array<2>("amf");
  p.sqn = kv.get_u64("sqn");
  p.carrier_name = kv.get("carrier_name");
  p.serving_network_name = kv.get("serving_network_name");
  p.validate();
  return p;
}

void save_profile_file(const sim::SubscriberProfile& p, const std::filesystem::path& path) {
  KeyValueFile kv;
  kv.set("supi", p.supi);
  kv.set_hex("k", p.k);
  kv.set_hex("opc", p.opc);
  kv.set_hex("amf", p.amf);
  kv.set("sqn", std::to_string(p.sqn));
  kv.set("carrier_name", p.carrier_name);
  kv.set("serving_network_name", p.serving_network_name);
  kv.save(path);
}

}  // namespace vsim::cli
