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

// Authentication function family built on AES-256 CBC-MAC.
//
//   f_i(k, opc, x) = cbc_mac_256(k, opc || fn_byte || x), truncated:
//
//   fn  byte  input              output
//   f1  0x01  rand||sqn||amf     mac[0..8)
//   f2  0x02  rand               mac[8..16)
//   f3  0x03  rand               mac[0..16)   CK
//   f4  0x04  rand               mac[0..16)   IK
//   f5  0x05  rand               mac[0..6)    AK
//   f1* 0x06  rand||sqn||amf     mac[0..8)
//   f5* 0x07  rand               mac[6..12)   AK for resync

#include "vsim/common/bytes.hpp"

namespace vsim::sim {

using Key = ByteArray<32>;
using Opc = ByteArray<16>;
using Rand = ByteArray<16>;
using Sqn = ByteArray<6>;
using Amf = ByteArray<2>;
using Mac = ByteArray<8>;
using Res = ByteArray<8>;
using CipherKey = ByteArray<16>;
using IntegrityKey = ByteArray<16>;
using AnonymityKey = ByteArray<6>;

Mac f1(const Key& k, const Opc& opc, const Rand& rand, const Sqn& sqn, const Amf& amf);
Mac f1_star(const Key& k, const Opc& opc, const Rand& rand, const Sqn& sqn, const Amf& amf);
Res f2(const Key& k, const Opc& opc, const Rand& rand);
CipherKey f3(const Key& k, const Opc& opc, const Rand& rand);
IntegrityKey f4(const Key& k, const Opc& opc, const Rand& rand);
AnonymityKey f5(const Key& k, const Opc& opc, const Rand& rand);
AnonymityKey f5_star(const Key& k, const Opc& opc, const Rand& rand);

Sqn sqn_bytes(std::uint64_t sqn);
std::uint64_t sqn_value(const Sqn& sqn);

template <std::size_t N>
ByteArray<N> xor_bytes(const ByteArray<N>& a, const ByteArray<N>& b) {
  ByteArray<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = a[i] ^ b[i];
  return out;
}

}  // namespace vsim::sim
