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

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "vsim/common/error.hpp"
#include "vsim/common/random.hpp"
#include "vsim/sim/profile.hpp"

namespace vsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Device-side exit code for a library error. Codes are stable and listed
/// in the README.
int device_exit_code(ErrorCode code);

/// Writes `error=<Name>` plus any detail to stderr and returns the exit code
/// for `e` (device codes when `device` is set, otherwise kExitRuntime).
int report_error(const std::exception& e, bool device);

/// Config path: the --config flag if given, else $VSIM_CONFIG, else
/// `fallback` in the working directory.
std::filesystem::path config_path(const std::string& flag_value, const char* fallback);

/// Seeded when `seed` is set, otherwise OS entropy.
std::unique_ptr<RandomSource> make_rng(const std::optional<ByteArray<32>>& seed);
/// Seed derived from free text (SHA-256), for setup commands.
std::optional<ByteArray<32>> seed_from_text(const std::string& text);

/// Accepts plain digits or a K/M/G suffix (decimal) or Ki/Mi/Gi (binary).
std::uint64_t parse_size(const std::string& text);

/// Profile files use the shared key-value format with keys supi, k,
/// opc, amf, sqn, carrier_name, serving_network_name.
sim::SubscriberProfile load_profile_file(const std::filesystem::path& path);
void save_profile_file(const sim::SubscriberProfile& profile, const std::filesystem::path& path);

/// Hex argument of exactly N bytes; anything else is a usage error.
template <std::size_t N>
ByteArray<N> hex_arg(const std::string& name, const std::string& value) {
  try {
    return array_from_hex<N>(value);
  } catch (const Error&) {
    throw CLI::ValidationError(name, "expected " + std::to_string(N) + " hex bytes");
  }
}

/// Runs a command body, turning library errors into an exit code.
template <typename Fn>
void guarded(int& exit_code, bool device, Fn&& body) {
  try {
    exit_code = body();
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    exit_code = report_error(e, device);
  }
}

void add_setup_commands(CLI::App& app, int& exit_code);
void add_provisioner_commands(CLI::App& app, int& exit_code);
void add_device_commands(CLI::App& app, int& exit_code);

}  // namespace vsim::cli
