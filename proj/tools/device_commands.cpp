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

#include <iostream>

#include "cli_common.hpp"
#include "vsim/crypto/hash.hpp"
#include "vsim/network/attach.hpp"
#include "vsim/network/data_path.hpp"
#include "vsim/protocol/transport.hpp"
#include "vsim/sim/vsim.hpp"
#include "vsim/tee/device_config.hpp"

namespace vsim::cli {
namespace {

namespace fs = std::filesystem;

int attach_exit_code(network::RejectReason r) {
  switch (r) {
    case network::RejectReason::kNone: return kExitOk;
    case network::RejectReason::kMacFailure: return 50;
    case network::RejectReason::kResStarMismatch: return 51;
    case network::RejectReason::kResyncMacFailure: return 52;
    case network::RejectReason::kSyncFailure: return 53;
    case network::RejectReason::kNotProvisioned: return device_exit_code(ErrorCode::kNotProvisioned);
  }
  return kExitRuntime;
}

struct Device {
  tee::DeviceConfig config;
  std::unique_ptr<RandomSource> rng;
  std::optional<sim::VSim> vsim;

  /// A configured rng_seed is mixed with `label` so separate commands do
  /// not replay each other's nonces.
  Device(const std::string& flag, ByteView label) {
    config = tee::DeviceConfig::load(config_path(flag, "device.conf"));
    std::optional<ByteArray<32>> seed;
    if (config.rng_seed) seed = crypto::hash(concat({*config.rng_seed, label}));
    rng = make_rng(seed);
    // The boot chain is verified here, before any other work.
    vsim.emplace(tee::load_enclave(config), config.storage, *rng);
  }
};

void print_status(const sim::VSimStatus& st) {
  std::cout << "status state=" << to_string(st.kind);
  if (st.kind == sim::VSimStatus::Kind::kProvisioned) {
    std::cout << " supi=" << st.supi << " carrier=" << st.carrier_name << " sqn=" << st.sqn;
  }
  std::cout << " attach_capable=" << (st.kind == sim::VSimStatus::Kind::kProvisioned ? "yes" : "no") << "\n";
}

struct ProvisionOptions {
  std::string token;
  std::optional<std::string> host;
  std::optional<std::uint16_t> port;
};

int run_provision(const std::string& config, const ProvisionOptions& o) {
  std::optional<ByteArray<16>> token;
  if (!o.token.empty()) token = hex_arg<16>("--token", o.token);
  Device d(config, concat({as_bytes("provision"), token ? ByteView(*token) : ByteView{}}));
  const tee::DeviceConfig& c = d.config;
  if (!token) token = c.activation_token;
  if (!token) throw Error(ErrorCode::kConfigError, "no activation token (config or --token)");
  if (!c.provisioner_pk) throw Error(ErrorCode::kConfigError, "provisioner_pk is not configured");
  if (c.provisioner_basename.empty()) throw Error(ErrorCode::kConfigError, "provisioner_basename is not configured");
  if (fs::exists(c.storage)) throw Error(ErrorCode::kAlreadyProvisioned);

  auto transport = protocol::TcpTransport::connect(o.host.value_or(c.provisioner_host),
                                                   o.port.value_or(c.provisioner_port));
  sim::VSimStatus st = d.vsim->provision(transport, *c.provisioner_pk,
                                         protocol::AttestRequest{c.tee_version, to_bytes(c.provisioner_basename)},
                                         *token);
  print_status(st);
  return kExitOk;
}

int run_status(const std::string& config) {
  Device d(config, as_bytes("status"));
  print_status(d.vsim->status());
  return kExitOk;
}

int run_attach(const std::string& config, const fs::path& entry_path) {
  Device d(config, as_bytes("attach"));
  network::ServingNetwork net(network::NetworkSubscriberEntry::load(entry_path), *d.rng);
  network::VSimModule module(*d.vsim);
  network::MobileEquipment ue(module);
  network::AttachReport r = network::attach(ue, net);
  net.entry().save(entry_path);
  std::cout << r.format() << "\n";
  if (!r.attached()) std::cerr << "error=" << to_string(r.reason) << "\n";
  return attach_exit_code(r.reason);
}

struct BenchOptions {
  fs::path entry;
  std::string bytes = "200M";
  std::string chunk = "1Mi";
  int pairs = 5;
};

int run_bench(const std::string& config, const BenchOptions& o) {
  const std::uint64_t total = parse_size(o.bytes);
  const std::uint64_t chunk = parse_size(o.chunk);
  if (total == 0 || chunk == 0) throw CLI::ValidationError("--bytes/--chunk", "must be positive");
  Device d(config, as_bytes("bench"));

  network::ServingNetwork vsim_net(network::NetworkSubscriberEntry::load(o.entry), *d.rng);
  network::VSimModule vsim_module(*d.vsim);
  network::MobileEquipment vsim_ue(vsim_module);
  network::AttachReport r = network::attach(vsim_ue, vsim_net);
  vsim_net.entry().save(o.entry);
  std::cout << r.format() << "\n";
  if (!r.attached()) {
    std::cerr << "error=" << to_string(r.reason) << "\n";
    return attach_exit_code(r.reason);
  }

  // Control: the same subscriber key injected directly into the ME.
  const network::NetworkSubscriberEntry& e = vsim_net.entry();
  sim::SubscriberProfile injected;
  injected.supi = e.supi;
  injected.k = e.k;
  injected.opc = e.opc;
  injected.amf = e.amf;
  injected.sqn = e.sqn_he;
  injected.serving_network_name = e.serving_network_name;
  network::ServingNetwork control_net(e, *d.rng);
  network::DirectKeyModule control_module(injected);
  network::MobileEquipment control_ue(control_module);
  network::AttachReport cr = network::attach(control_ue, control_net);
  std::cout << cr.format() << "\n";
  if (!cr.attached()) throw Error(ErrorCode::kNotAttached, "control attach failed");

  network::ParityReport p = network::compare_throughput(
      [&] { return network::run_data_path(vsim_ue, vsim_net, total, chunk); },
      [&] { return network::run_data_path(control_ue, control_net, total, chunk); }, o.pairs);
  std::cout << p.format() << "\n";
  return kExitOk;
}

}  // namespace

void add_device_commands(CLI::App& app, int& exit_code) {
  CLI::App* dev = app.add_subcommand("device", "vSIM device operations");
  dev->require_subcommand(1);
  auto config = std::make_shared<std::string>();
  dev->add_option("--config", *config, "Device config (default $VSIM_CONFIG or device.conf)");

  auto prov = std::make_shared<ProvisionOptions>();
  CLI::App* p = dev->add_subcommand("provision", "Obtain a profile from the provisioner and seal it");
  p->add_option("--token", prov->token, "Activation token (hex); overrides the config");
  p->add_option("--host", prov->host, "Override provisioner_host");
  p->add_option("--port", prov->port, "Override provisioner_port");
  p->callback([=, &exit_code] { guarded(exit_code, true, [&] { return run_provision(*config, *prov); }); });

  dev->add_subcommand("status", "Show the stored profile state")->callback([=, &exit_code] {
    guarded(exit_code, true, [&] { return run_status(*config); });
  });

  auto entry = std::make_shared<fs::path>();
  CLI::App* a = dev->add_subcommand("attach", "Run 5G AKA against a simulated serving network");
  a->add_option("--network", *entry, "Network subscriber entry file (updated in place)")->required();
  a->callback([=, &exit_code] { guarded(exit_code, true, [&] { return run_attach(*config, *entry); }); });

  auto bench = std::make_shared<BenchOptions>();
  CLI::App* b = dev->add_subcommand("bench", "Attach, then compare data-path throughput with a direct-key control");
  b->add_option("--network", bench->entry, "Network subscriber entry file")->required();
  b->add_option("--bytes", bench->bytes, "Bytes per run (e.g. 200M, 64Mi)");
  b->add_option("--chunk", bench->chunk, "Chunk size");
  b->add_option("--pairs", bench->pairs, "Paired runs")->check(CLI::Range(1, 101));
  b->callback([=, &exit_code] { guarded(exit_code, true, [&] { return run_bench(*config, *bench); }); });
}

}  // namespace vsim::cli
