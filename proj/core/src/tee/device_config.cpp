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

#include "vsim/tee/device_config.hpp"


#include "vsim/common/file_io.hpp"
#include "vsim/common/key_value.hpp"

namespace vsim::tee {
namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

std::uint16_t parse_u16(const KeyValueFile& kv, const std::string& key) {
  std::uint64_t v = kv.get_u64(key);
  if (v > 0xffff) throw Error(ErrorCode::kConfigError, key + ": out of range");
  return static_cast<std::uint16_t>(v);
}

}  // namespace

DeviceConfig DeviceConfig::load(const std::filesystem::path& path) {
  KeyValueFile kv = KeyValueFile::load(path);
  const std::filesystem::path base = path.parent_path();

  DeviceConfig c;
  c.device_root_secret = kv.get_hex_array<32>("device_root_secret");
  auto scalar = crypto::Scalar::from_bytes(kv.get_hex_array<32>("member_secret"));
  if (!scalar || scalar->is_zero()) throw Error(ErrorCode::kConfigError, "member_secret: not a valid scalar");
  c.member_key.secret_scalar = *scalar;
  c.member_key.membership_credential = kv.get_hex_array<64>("member_credential");
  try {
    c.group_public_key = crypto::GroupPublicKey::parse(kv.get_hex("group_public_key"));
  } catch (const Error&) {
    throw Error(ErrorCode::kConfigError, "group_public_key: invalid");
  }
  c.member_key.group_id = c.group_public_key.group_id;
  c.root_pk = kv.get_hex_array<32>("root_pk");
  c.enclave_image = resolve(base, kv.get("enclave_image"));
  c.boot_manifest = resolve(base, kv.get("boot_manifest"));
  c.storage = resolve(base, kv.get("storage"));
  if (auto host = kv.find("provisioner_host")) c.provisioner_host = *host;
  if (kv.has("provisioner_port")) c.provisioner_port = parse_u16(kv, "provisioner_port");
  if (kv.has("provisioner_pk")) {
    auto pk = crypto::Point::from_bytes(kv.get_hex_array<32>("provisioner_pk"));
    if (!pk) throw Error(ErrorCode::kConfigError, "provisioner_pk: invalid point");
    c.provisioner_pk = *pk;
  }
  if (auto b = kv.find("provisioner_basename")) c.provisioner_basename = *b;
  if (kv.has("tee_version")) c.tee_version = parse_u16(kv, "tee_version");
  if (kv.has("activation_token")) c.activation_token = kv.get_hex_array<16>("activation_token");
  if (kv.has("rng_seed")) c.rng_seed = kv.get_hex_array<32>("rng_seed");
  return c;
}

EnclaveContext load_enclave(const DeviceConfig& config) {
  Bytes image = read_file(config.enclave_image);
  std::vector<attest::BootLayer> chain = attest::parse_manifest(read_file(config.boot_manifest));
  return EnclaveContext::load(image, config.device_root_secret, config.member_key, config.group_public_key,
                              config.root_pk, chain);
}

}  // namespace vsim::tee
