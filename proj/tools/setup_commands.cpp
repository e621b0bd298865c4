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

#include <fstream>
#include <iostream>

#include "cli_common.hpp"
#include "vsim/attestation/boot_chain.hpp"
#include "vsim/attestation/measurement.hpp"
#include "vsim/common/file_io.hpp"
#include "vsim/common/key_value.hpp"
#include "vsim/crypto/group_signature.hpp"
#include "vsim/network/subscriber_entry.hpp"

namespace vsim::cli {
namespace {

namespace fs = std::filesystem;

struct GroupFiles {
  fs::path out_dir = ".";
  std::string seed;
};

struct ProvisionerSetup {
  fs::path group_file;
  fs::path image;
  fs::path out_dir = ".";
  std::string basename = "vsim-provisioner";
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;
  std::string seed;
};

struct DeviceSetup {
  fs::path issuer_file;
  fs::path group_file;
  fs::path image;
  fs::path out_dir = ".";
  std::string provisioner_pk;
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;
  std::string basename = "vsim-provisioner";
  std::size_t layers = 3;
  std::string seed;
};

struct ProfileSetup {
  std::string supi = "001010000000001";
  fs::path out = "profile.txt";
  fs::path network_entry;
  std::uint64_t sqn = 32;
  std::string carrier = "DemoCarrier";
  std::uint16_t mcc = 1;
  std::uint16_t mnc = 1;
  std::string seed;
};

void write_line(const fs::path& path, const std::string& line) {
  const std::string text = line + "\n";
  write_file_atomic(path, as_bytes(text));
}

std::string first_line(const fs::path& path) {
  Bytes raw = read_file(path);
  std::string text(raw.begin(), raw.end());
  return text.substr(0, text.find_first_of("\r\n"));
}

crypto::GroupPublicKey read_group(const fs::path& path) {
  try {
    return crypto::GroupPublicKey::parse(from_hex(first_line(path)));
  } catch (const Error&) {
    throw Error(ErrorCode::kConfigError, "group public key file invalid: " + path.string());
  }
}

crypto::IssuerSecret read_issuer(const fs::path& path) {
  KeyValueFile kv = KeyValueFile::load(path);
  auto s = crypto::Scalar::from_bytes(kv.get_hex_array<32>("issuer_secret"));
  if (!s || s->is_zero()) throw Error(ErrorCode::kConfigError, "issuer_secret: not a valid scalar");
  return {crypto::SigningKey::from_secret(*s), kv.get_hex_array<16>("group_id")};
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw Error(ErrorCode::kIoError, "cannot create " + dir.string());
}

int run_group(const GroupFiles& o) {
  ensure_dir(o.out_dir);
  auto rng = make_rng(seed_from_text(o.seed));
  auto [gpk, issuer] = crypto::group_setup(*rng);
  write_line(o.out_dir / "group.pub", to_hex(gpk.serialize()));
  KeyValueFile kv;
  kv.set_hex("issuer_secret", issuer.signing_key.secret.bytes());
  kv.set_hex("group_id", issuer.group_id);
  kv.save(o.out_dir / "issuer.key");
  std::cout << "group_public_key=" << to_hex(gpk.serialize()) << "\n";
  std::cout << "issuer_key=" << (o.out_dir / "issuer.key").string() << "\n";
  return kExitOk;
}

int run_provisioner(const ProvisionerSetup& o) {
  ensure_dir(o.out_dir);
  auto rng = make_rng(seed_from_text(o.seed));
  const crypto::GroupPublicKey gpk = read_group(o.group_file);
  const attest::Measurement m = attest::measure_binary(read_file(o.image));
  crypto::Scalar secret = crypto::Scalar::random(*rng);
  write_line(o.out_dir / "static.key", to_hex(secret.bytes()));
  fs::permissions(o.out_dir / "static.key", fs::perms::owner_read | fs::perms::owner_write);

  KeyValueFile kv;
  kv.set("listen_host", o.host);
  kv.set("listen_port", std::to_string(o.port));
  kv.set("static_key_file", "static.key");
  kv.set_hex("group_public_key", gpk.serialize());
  kv.set("revocation_file", "revocations.txt");
  kv.set_hex("expected_measurement", m.digest);
  kv.set("inventory", "inventory.tsv");
  kv.set("basename", o.basename);
  kv.set("session_log", "sessions.log");
  if (auto seed = seed_from_text(o.seed)) kv.set_hex("rng_seed", crypto::hash(concat({*seed, as_bytes("serve")})));
  kv.save(o.out_dir / "provisioner.conf");

  std::cout << "provisioner_pk=" << to_hex(crypto::Point::base_mul(secret).bytes()) << "\n";
  std::cout << "expected_measurement=" << to_hex(m.digest) << "\n";
  std::cout << "config=" << (o.out_dir / "provisioner.conf").string() << "\n";
  secret.wipe();
  return kExitOk;
}

int run_device(const DeviceSetup& o) {
  ensure_dir(o.out_dir);
  auto rng = make_rng(seed_from_text(o.seed));
  const crypto::IssuerSecret issuer = read_issuer(o.issuer_file);
  const crypto::GroupPublicKey gpk = read_group(o.group_file);
  if (!fs::is_regular_file(o.image)) throw Error(ErrorCode::kConfigError, "image not found: " + o.image.string());
  auto pk = crypto::Point::from_bytes(from_hex(o.provisioner_pk));
  if (!pk) throw Error(ErrorCode::kConfigError, "provisioner_pk: invalid");

  crypto::MemberPrivateKey member = crypto::group_join(issuer, *rng);
  crypto::SigningKey boot_root = crypto::sig_keygen(*rng);
  std::vector<Bytes> images;
  for (std::size_t i = 0; i < o.layers; ++i) {
    images.push_back(concat({as_bytes("boot-layer-" + std::to_string(i) + ":"), rng->bytes(256)}));
  }
  attest::BuiltChain chain = attest::build_boot_chain(boot_root, images, *rng);
  write_file_atomic(o.out_dir / "boot.manifest", attest::serialize_manifest(chain.layers));

  KeyValueFile kv;
  kv.set_hex("device_root_secret", rng->array<32>());
  kv.set_hex("member_secret", member.secret_scalar.bytes());
  kv.set_hex("member_credential", member.membership_credential);
  kv.set_hex("group_public_key", gpk.serialize());
  kv.set_hex("root_pk", boot_root.public_key.bytes());
  kv.set("enclave_image", fs::absolute(o.image).lexically_normal().string());
  kv.set("boot_manifest", "boot.manifest");
  kv.set("storage", "profile.sealed");
  kv.set("provisioner_host", o.host);
  kv.set("provisioner_port", std::to_string(o.port));
  kv.set_hex("provisioner_pk", pk->bytes());
  kv.set("provisioner_basename", o.basename);
  if (auto seed = seed_from_text(o.seed)) kv.set_hex("rng_seed", crypto::hash(concat({*seed, as_bytes("device")})));
  kv.save(o.out_dir / "device.conf");
  fs::permissions(o.out_dir / "device.conf", fs::perms::owner_read | fs::perms::owner_write);
  member.secret_scalar.wipe();

  std::cout << "device_config=" << (o.out_dir / "device.conf").string() << "\n";
  std::cout << "boot_manifest=" << (o.out_dir / "boot.manifest").string() << " layers=" << o.layers << "\n";
  return kExitOk;
}

int run_profile(const ProfileSetup& o) {
  auto rng = make_rng(seed_from_text(o.seed));
  sim::SubscriberProfile p;
  p.supi = o.supi;
  p.k = rng->array<32>();
  p.opc = rng->array<16>();
  p.amf = {0x80, 0x00};
  p.sqn = o.sqn;
  p.carrier_name = o.carrier;
  p.serving_network_name = sim::make_serving_network_name(o.mcc, o.mnc);
  p.validate();
  save_profile_file(p, o.out);
  std::cout << "profile=" << o.out.string() << " supi=" << p.supi << "\n";
  if (!o.network_entry.empty()) {
    network::NetworkSubscriberEntry::from_profile(p).save(o.network_entry);
    std::cout << "network_entry=" << o.network_entry.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

void add_setup_commands(CLI::App& app, int& exit_code) {
  CLI::App* setup = app.add_subcommand("setup", "Generate keys, configs and boot manifests");
  setup->require_subcommand(1);

  auto group = std::make_shared<GroupFiles>();
  CLI::App* g = setup->add_subcommand("group", "Create a group public key and issuer key");
  g->add_option("--out-dir", group->out_dir, "Output directory");
  g->add_option("--seed", group->seed, "Deterministic seed text");
  g->callback([group, &exit_code] { guarded(exit_code, false, [&] { return run_group(*group); }); });

  auto prov = std::make_shared<ProvisionerSetup>();
  CLI::App* p = setup->add_subcommand("provisioner", "Create a provisioner static key and config");
  p->add_option("--group", prov->group_file, "group.pub from `setup group`")->required();
  p->add_option("--image", prov->image, "Enclave image the provisioner trusts")->required()->check(CLI::ExistingFile);
  p->add_option("--out-dir", prov->out_dir, "Output directory");
  p->add_option("--basename", prov->basename, "Attestation basename");
  p->add_option("--host", prov->host, "Listen address");
  p->add_option("--port", prov->port, "Listen port (0 picks a free one)");
  p->add_option("--seed", prov->seed, "Deterministic seed text");
  p->callback([prov, &exit_code] { guarded(exit_code, false, [&] { return run_provisioner(*prov); }); });

  auto dev = std::make_shared<DeviceSetup>();
  CLI::App* d = setup->add_subcommand("device", "Join the group and write a device config");
  d->add_option("--issuer", dev->issuer_file, "issuer.key from `setup group`")->required();
  d->add_option("--group", dev->group_file, "group.pub from `setup group`")->required();
  d->add_option("--image", dev->image, "Enclave image to load")->required();
  d->add_option("--provisioner-pk", dev->provisioner_pk, "Provisioner static public key (hex)")->required();
  d->add_option("--out-dir", dev->out_dir, "Output directory");
  d->add_option("--host", dev->host, "Provisioner host");
  d->add_option("--port", dev->port, "Provisioner port");
  d->add_option("--basename", dev->basename, "Basename the provisioner will request");
  d->add_option("--layers", dev->layers, "Boot chain length")->check(CLI::Range(1, 16));
  d->add_option("--seed", dev->seed, "Deterministic seed text");
  d->callback([dev, &exit_code] { guarded(exit_code, false, [&] { return run_device(*dev); }); });

  auto prof = std::make_shared<ProfileSetup>();
  CLI::App* f = setup->add_subcommand("profile", "Create a subscriber profile file");
  f->add_option("--supi", prof->supi, "15-digit SUPI");
  f->add_option("--out", prof->out, "Output profile file");
  f->add_option("--network-entry", prof->network_entry, "Also write the matching network subscriber entry");
  f->add_option("--sqn", prof->sqn, "Initial sequence number");
  f->add_option("--carrier", prof->carrier, "Carrier name");
  f->add_option("--mcc", prof->mcc, "Serving network MCC");
  f->add_option("--mnc", prof->mnc, "Serving network MNC");
  f->add_option("--seed", prof->seed, "Deterministic seed text");
  f->callback([prof, &exit_code] { guarded(exit_code, false, [&] { return run_profile(*prof); }); });

  auto image = std::make_shared<fs::path>();
  CLI::App* m = setup->add_subcommand("measure", "Print the measurement of an enclave image");
  m->add_option("--image", *image, "Enclave image")->required();
  m->callback([image, &exit_code] {
    guarded(exit_code, false, [&] {
      std::cout << "measurement=" << to_hex(attest::measure_binary(read_file(*image)).digest) << "\n";
      return kExitOk;
    });
  });
}

}  // namespace vsim::cli
