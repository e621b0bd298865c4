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

int main(int argc, char** argv) {
  CLI::App app{"vsim: software SIM, provisioner and simulated network"};
  app.require_subcommand(1);
  int exit_code = vsim::cli::kExitOk;
  vsim::cli::add_setup_commands(app, exit_code);
  vsim::cli::add_provisioner_commands(app, exit_code);
  vsim::cli::add_device_commands(app, exit_code);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vsim::cli::kExitUsage;
  }
  return exit_code;
}
