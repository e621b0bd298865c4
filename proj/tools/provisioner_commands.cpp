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

#include <csignal>
#include <iostream>
#include <thread>

#include "cli_common.hpp"
#include "vsim/provisioner/config.hpp"
#include "vsim/provisioner/service.hpp"

namespace vsim::cli {
namespace {

namespace fs = std::filesystem;
using namespace std::chrono_literals;

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

struct Common {
  std::string config;
  provisioner::ProvisionerConfig load() const {
    return provisioner::ProvisionerConfig::load(config_path(config, "provisioner.conf"));
  }
};

struct ServeOptions {
  std::optional<std::string> host;
  std::optional<std::uint16_t> port;
  std::uint64_t max_sessions = 0;
};

std::string printable(ByteView b) {
  for (std::uint8_t c : b) {
    if (c < 0x20 || c > 0x7e || c == ' ') return "hex:" + to_hex(b);
  }
  return std::string(b.begin(), b.end());
}

Bytes basename_arg(const std::string& arg, const provisioner::ProvisionerConfig& c) {
  if (arg.empty()) return to_bytes(c.basename);
  if (arg.rfind("hex:", 0) == 0) return from_hex(arg.substr(4));
  return to_bytes(arg);
}

crypto::Scalar scalar_arg(const std::string& hex) {
  auto s = crypto::Scalar::from_bytes(hex_arg<32>("--secret", hex));
  if (!s || s->is_zero()) throw CLI::ValidationError("--secret", "not a valid scalar");
  return *s;
}

crypto::Point point_arg(const std::string& hex) {
  auto p = crypto::Point::from_bytes(hex_arg<32>("--pseudonym", hex));
  if (!p) throw CLI::ValidationError("--pseudonym", "not a valid group element");
  return *p;
}

int run_serve(const Common& common, const ServeOptions& o) {
  provisioner::ProvisionerConfig c = common.load();
  if (o.host) c.listen_host = *o.host;
  if (o.port) c.listen_port = *o.port;
  auto rng = make_rng(c.rng_seed);
  provisioner::ProvisionerService service(c, *rng);
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  service.start();
  std::cout << "listening host=" << c.listen_host << " port=" << service.port() << std::endl;
  while (!g_stop.load()) {
    if (o.max_sessions > 0 && service.sessions_completed() >= o.max_sessions) break;
    std::this_thread::sleep_for(50ms);
  }
  service.stop();
  std::cout << "stopped sessions=" << service.sessions_completed() << " delivered=" << service.profiles_delivered()
            << std::endl;
  return kExitOk;
}

int run_add_profile(const Common& common, const fs::path& profile_path) {
  provisioner::ProvisionerConfig c = common.load();
  sim::SubscriberProfile profile = load_profile_file(profile_path);
  provisioner::InventoryStore inventory(c.inventory);
  auto rng = make_rng(c.rng_seed ? std::optional(crypto::hash(concat({*c.rng_seed, as_bytes(profile.supi)})))
                                 : std::nullopt);
  provisioner::ActivationToken token = inventory.add_profile(profile, *rng);
  std::cout << "token=" << to_hex(token) << " supi=" << profile.supi << "\n";
  return kExitOk;
}

int run_list_profiles(const Common& common) {
  provisioner::ProvisionerConfig c = common.load();
  for (const auto& r : provisioner::InventoryStore(c.inventory).list()) {
    std::cout << "profile supi=" << r.profile.supi << " carrier=" << printable(as_bytes(r.profile.carrier_name))
              << " token=" << to_hex(r.activation_token) << " claimed=" << (r.claimed ? "yes" : "no");
    if (r.claimed_by_pseudonym) std::cout << " pseudonym=" << to_hex(r.claimed_by_pseudonym->bytes());
    std::cout << "\n";
  }
  return kExitOk;
}

int run_list_sessions(const Common& common) {
  provisioner::ProvisionerConfig c = common.load();
  if (!c.session_log) throw Error(ErrorCode::kConfigError, "session_log is not configured");
  for (const auto& s : provisioner::SessionLog(*c.session_log).read()) {
    std::cout << "session verdict=" << to_string(s.verdict) << " basename=" << printable(s.basename)
              << " pseudonym=" << to_hex(s.pseudonym.bytes()) << "\n";
  }
  return kExitOk;
}

struct RevokeOptions {
  std::string secret;
  std::string pseudonym;
  std::string basename;
};

int run_revoke(const Common& common, const RevokeOptions& o, bool revoke) {
  provisioner::ProvisionerConfig c = common.load();
  provisioner::RevocationStore store(c.revocation_file);
  if (!o.secret.empty()) {
    crypto::Scalar s = scalar_arg(o.secret);
    const bool changed = revoke ? store.revoke_key(s) : store.unrevoke_key(s);
    std::cout << (revoke ? "revoked" : "unrevoked") << " list=priv commitment=" << to_hex(crypto::Point::base_mul(s).bytes())
              << " changed=" << (changed ? "yes" : "no") << "\n";
    s.wipe();
  }
  if (!o.pseudonym.empty()) {
    const Bytes basename = basename_arg(o.basename, c);
    const crypto::Point p = point_arg(o.pseudonym);
    const bool changed = revoke ? store.revoke_signature(basename, p) : store.unrevoke_signature(basename, p);
    std::cout << (revoke ? "revoked" : "unrevoked") << " list=sig basename=" << printable(basename)
              << " pseudonym=" << to_hex(p.bytes()) << " changed=" << (changed ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

void add_provisioner_commands(CLI::App& app, int& exit_code) {
  CLI::App* prov = app.add_subcommand("provisioner", "Provisioner service and administration");
  prov->require_subcommand(1);
  auto common = std::make_shared<Common>();
  prov->add_option("--config", common->config, "Provisioner config (default $VSIM_CONFIG or provisioner.conf)");

  auto serve = std::make_shared<ServeOptions>();
  CLI::App* s = prov->add_subcommand("serve", "Accept provisioning sessions until SIGINT/SIGTERM");
  s->add_option("--host", serve->host, "Override listen_host");
  s->add_option("--port", serve->port, "Override listen_port");
  s->add_option("--max-sessions", serve->max_sessions, "Exit after this many sessions (0 = unlimited)");
  s->callback([=, &exit_code] { guarded(exit_code, false, [&] { return run_serve(*common, *serve); }); });

  auto profile_path = std::make_shared<fs::path>();
  CLI::App* a = prov->add_subcommand("add-profile", "Add a profile to the inventory and print its token");
  a->add_option("--profile", *profile_path, "Profile file")->required();
  a->callback([=, &exit_code] { guarded(exit_code, false, [&] { return run_add_profile(*common, *profile_path); }); });

  prov->add_subcommand("list-profiles", "List inventory records")->callback([=, &exit_code] {
    guarded(exit_code, false, [&] { return run_list_profiles(*common); });
  });
  prov->add_subcommand("list-sessions", "List attestation outcomes from the session log")->callback([=, &exit_code] {
    guarded(exit_code, false, [&] { return run_list_sessions(*common); });
  });

  auto rk = std::make_shared<RevokeOptions>();
  CLI::App* k = prov->add_subcommand("revoke-key", "Add a leaked member secret to the private-key list");
  k->add_option("--secret", rk->secret, "Member secret scalar (hex)")->required();
  k->callback([=, &exit_code] { guarded(exit_code, false, [&] { return run_revoke(*common, *rk, true); }); });

  auto rs = std::make_shared<RevokeOptions>();
  CLI::App* g = prov->add_subcommand("revoke-sig", "Block a pseudonym under a basename");
  g->add_option("--pseudonym", rs->pseudonym, "Pseudonym (hex) as printed by list-sessions")->required();
  g->add_option("--basename", rs->basename, "Basename (default: the configured one; hex:.. for raw bytes)");
  g->callback([=, &exit_code] { guarded(exit_code, false, [&] { return run_revoke(*common, *rs, true); }); });

  auto un = std::make_shared<RevokeOptions>();
  CLI::App* u = prov->add_subcommand("unrevoke", "Remove a private-key or signature revocation");
  auto* secret_opt = u->add_option("--secret", un->secret, "Member secret scalar (hex)");
  auto* nym_opt = u->add_option("--pseudonym", un->pseudonym, "Pseudonym (hex)");
  u->add_option("--basename", un->basename, "Basename for --pseudonym");
  secret_opt->excludes(nym_opt);
  u->callback([=, &exit_code] {
    if (un->secret.empty() && un->pseudonym.empty()) {
      throw CLI::RequiredError("one of --secret or --pseudonym");
    }
    guarded(exit_code, false, [&] { return run_revoke(*common, *un, false); });
  });
}

}  // namespace vsim::cli
