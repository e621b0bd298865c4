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

#include <functional>
#include <string>
#include <vector>

#include "vsim/network/mobile_equipment.hpp"
#include "vsim/network/serving_network.hpp"

namespace vsim::network {

struct DataPathReport {
  std::string module;
  std::uint64_t bytes_moved = 0;
  double elapsed_seconds = 0;
  std::uint64_t vsim_invocations_during_transfer = 0;

  double throughput_mb_per_s() const;
  /// `datapath module=<m> bytes=<n> elapsed_s=<t> throughput_MBps=<x> vsim_invocations=<n>`
  std::string format() const;
};

/// Pumps `total_bytes` from the UE to the network in `chunk_size` pieces,
/// sealing under a user-plane key derived from each side's K_AUSF.
/// Throws kNotAttached unless both sides are attached.
DataPathReport run_data_path(MobileEquipment& ue, ServingNetwork& network, std::uint64_t total_bytes,
                             std::size_t chunk_size = 1 << 20);

struct ParityReport {
  std::vector<DataPathReport> subject_runs;
  std::vector<DataPathReport> control_runs;
  double subject_median_mb_per_s = 0;
  double control_median_mb_per_s = 0;
  std::uint64_t subject_invocations_during_transfer = 0;

  /// |subject - control| / control, on the medians.
  double relative_difference() const;
  /// One `datapath` line per run, then
  /// `parity subject_median_MBps=<x> control_median_MBps=<y> relative_diff=<d> vsim_invocations=<n>`
  std::string format() const;
};

/// Runs one discarded warm-up of each side, then `pairs` pairs with the
/// leading side swapped on every other pair.
ParityReport compare_throughput(const std::function<DataPathReport()>& subject,
                                const std::function<DataPathReport()>& control, int pairs = 5);

}  // namespace vsim::network
