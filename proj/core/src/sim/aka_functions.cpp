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

#include "vsim/sim/aka_functions.hpp"

#include "vsim/crypto/cbc.hpp"

namespace vsim::sim {
namespace {

enum FunctionByte : std::uint8_t {
  kF1 = 0x01,
  kF2 = 0x02,
  kF3 = 0x03,
  kF4 = 0x04,
  kF5 = 0x05,
  kF1Star = 0x06,
  kF5Star = 0x07,
};

crypto::CbcMac function_mac(const Key& k, const Opc& opc, std::uint8_t fn, std::initializer_list<ByteView> inputs) {
  Bytes msg(opc.begin(), opc.end());
  msg.push_back(fn);
  for (auto part : inputs) msg.insert(msg.end(), part.begin(), part.end());
  return crypto::cbc_mac_256(k, msg);
}

template <std::size_t Offset, std::size_t Len>
ByteArray<Len> slice(const crypto::CbcMac& mac) {
  static_assert(Offset + Len <= 16);
  ByteArray<Len> out;
  std::copy(mac.begin() + Offset, mac.begin() + Offset + Len, out.begin());
  return out;
}

}  // namespace

Mac f1(const Key& k, const Opc& opc, const Rand& rand, const Sqn& sqn, const Amf& amf) {
  return slice<0, 8>(function_mac(k, opc, kF1, {rand, sqn, amf}));
}

Mac f1_star(const Key& k, const Opc& opc, const Rand& rand, const Sqn& sqn, const Amf& amf) {
  return slice<0, 8>(function_mac(k, opc, kF1Star, {rand, sqn, amf}));
}

Res f2(const Key& k, const Opc& opc, const Rand& rand) { return slice<8, 8>(function_mac(k, opc, kF2, {rand})); }

CipherKey f3(const Key& k, const Opc& opc, const Rand& rand) { return function_mac(k, opc, kF3, {rand}); }

IntegrityKey f4(const Key& k, const Opc& opc, const Rand& rand) { return function_mac(k, opc, kF4, {rand}); }

AnonymityKey f5(const Key& k, const Opc& opc, const Rand& rand) {
  return slice<0, 6>(function_mac(k, opc, kF5, {rand}));
}

AnonymityKey f5_star(const Key& k, const Opc& opc, const Rand& rand) {
  return slice<6, 6>(function_mac(k, opc, kF5Star, {rand}));
}

Sqn sqn_bytes(std::uint64_t sqn) {
  Sqn out;
  store_be48(out, sqn);
  return out;
}

std::uint64_t sqn_value(const Sqn& sqn) { return load_be48(sqn); }

}  // namespace vsim::sim
