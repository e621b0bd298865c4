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
#include <string>

#include "vsim/common/bytes.hpp"

namespace vsim::sim {

inline constexpr std::uint64_t kSqnLimit = std::uint64_t{1} << 48;

/// The provisioned identity. Canonical serialization (the ProfileDelivery
/// plaintext and the sealed-storage plaintext):
///   supi_len(2) || supi || k(32) || opc(16) || amf(2) || sqn(6)
///   || carrier_len(2) || carrier_name || snn_len(2) || serving_network_name
struct SubscriberProfile {
  std::string supi;
  ByteArray<32> k{};
  ByteArray<16> opc{};
  ByteArray<2> amf{};
  std::uint64_t sqn = 0;
  std::string carrier_name;
  std::string serving_network_name;

  /// Throws kInvalidProfile: SUPI must be 15 decimal digits, sqn < 2^48.
  void validate() const;
  Bytes serialize() const;
  /// Throws kProfileParseError on malformed bytes or invalid fields.
  static SubscriberProfile parse(ByteView data);

  friend bool operator==(const SubscriberProfile&, const SubscriberProfile&) = default;
};

/// "5G:mncXXX.mccYYY.3gppnetwork.org".
std::string make_serving_network_name(std::uint16_t mcc, std::uint16_t mnc);

}  // namespace vsim::sim
