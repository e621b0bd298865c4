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

#include <initializer_list>
#include <string_view>

#include "vsim/sim/aka_functions.hpp"

namespace vsim::sim {

inline constexpr std::uint8_t kFcResStar = 0x6B;
inline constexpr std::uint8_t kFcKAusf = 0x6A;

/// HMAC-SHA-256(key, FC || P0 || L0 || P1 || L1 ...), each L a 2-byte
/// big-endian length of the preceding parameter.
ByteArray<32> kdf_3gpp(ByteView key, std::uint8_t fc, std::initializer_list<ByteView> params);

/// Low-order 16 bytes of KDF(CK||IK, 0x6B, SNN, RAND, RES).
ByteArray<16> derive_res_star(const CipherKey& ck, const IntegrityKey& ik, std::string_view serving_network_name,
                              const Rand& rand, ByteView res);

/// KDF(CK||IK, 0x6A, SNN, SQN xor AK).
ByteArray<32> derive_k_ausf(const CipherKey& ck, const IntegrityKey& ik, std::string_view serving_network_name,
                            const Sqn& sqn_xor_ak);

/// First 16 bytes of SHA-256(RAND || XRES*).
ByteArray<16> derive_hxres_star(const Rand& rand, const ByteArray<16>& xres_star);

}  // namespace vsim::sim
