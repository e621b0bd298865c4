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

#include "vsim/network/data_path.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "vsim/crypto/aead.hpp"
#include "vsim/crypto/kdf.hpp"
#include "vsim/protocol/wire.hpp"

namespace vsim::network {
namespace {

crypto::AeadKey user_plane_key(const ByteArray<32>& k_ausf) {
  return crypto::kdf32(k_ausf, as_bytes("vsim-user-plane"));
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

double DataPathReport::throughput_mb_per_s() const {
  return elapsed_seconds > 0 ? static_cast<double>(bytes_moved) / 1e6 / elapsed_seconds : 0;
}

std::string DataPathReport::format() const {
  std::ostringstream out;
  out << "datapath module=" << module << " bytes=" << bytes_moved << " elapsed_s=" << fixed(elapsed_seconds, 4)
      << " throughput_MBps=" << fixed(throughput_mb_per_s(), 2)
      << " vsim_invocations=" << vsim_invocations_during_transfer;
  return out.str();
}

DataPathReport run_data_path(MobileEquipment& ue, ServingNetwork& network, std::uint64_t total_bytes,
                             std::size_t chunk_size) {
  if (!ue.attached() || !network.attached()) throw Error(ErrorCode::kNotAttached);
  if (chunk_size == 0) throw Error(ErrorCode::kLengthError, "chunk_size must be positive");

  crypto::AeadKey ue_key = user_plane_key(*ue.k_ausf());
  crypto::AeadKey net_key = user_plane_key(*network.k_ausf());
  const std::uint64_t invocations_before = ue.module().invocations();

  Bytes chunk(std::min<std::uint64_t>(chunk_size, std::max<std::uint64_t>(total_bytes, 1)));
  for (std::size_t i = 0; i < chunk.size(); ++i) chunk[i] = static_cast<std::uint8_t>(i * 131 + 7);
  const ByteArray<5> ad{'V', 'U', 'P', '1', 0};

  DataPathReport report;
  report.module = std::string(ue.module().kind());
  const auto start = std::chrono::steady_clock::now();
  Bytes sealed, opened;
  std::uint64_t counter = 0;
  std::uint64_t remaining = total_bytes;
  while (remaining > 0) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, chunk.size()));
    const crypto::AeadNonce nonce = protocol::counter_nonce(counter++);
    crypto::aead_seal(ue_key, nonce, ad, ByteView(chunk.data(), n), sealed);
    crypto::aead_open(net_key, nonce, ad, sealed, opened);
    report.bytes_moved += opened.size();
    remaining -= n;
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.vsim_invocations_during_transfer = ue.module().invocations() - invocations_before;
  secure_wipe(ue_key);
  secure_wipe(net_key);
  return report;
}

double ParityReport::relative_difference() const {
  if (control_median_mb_per_s <= 0) return INFINITY;
  return std::fabs(subject_median_mb_per_s - control_median_mb_per_s) / control_median_mb_per_s;
}

std::string ParityReport::format() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < subject_runs.size() || i < control_runs.size(); ++i) {
    if (i < subject_runs.size()) out << subject_runs[i].format() << '\n';
    if (i < control_runs.size()) out << control_runs[i].format() << '\n';
  }
  out << "parity subject_median_MBps=" << fixed(subject_median_mb_per_s, 2)
      << " control_median_MBps=" << fixed(control_median_mb_per_s, 2)
      << " relative_diff=" << fixed(relative_difference(), 4)
      << " vsim_invocations=" << subject_invocations_during_transfer;
  return out.str();
}

ParityReport compare_throughput(const std::function<DataPathReport()>& subject,
                                const std::function<DataPathReport()>& control, int pairs) {
  ParityReport report;
  std::vector<double> s, c;
  // Untimed warm-up, then swap the leading side on every other pair.
  (void)subject();
  (void)control();
  for (int i = 0; i < pairs; ++i) {
    if (i % 2 == 0) {
      report.subject_runs.push_back(subject());
      report.control_runs.push_back(control());
    } else {
      report.control_runs.push_back(control());
      report.subject_runs.push_back(subject());
    }
    s.push_back(report.subject_runs.back().throughput_mb_per_s());
    c.push_back(report.control_runs.back().throughput_mb_per_s());
    report.subject_invocations_during_transfer += report.subject_runs.back().vsim_invocations_during_transfer;
  }
  report.subject_median_mb_per_s = median(s);
  report.control_median_mb_per_s = median(c);
  return report;
}

}  // namespace vsim::network
