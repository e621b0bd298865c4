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

#include <algorithm>
#include <array>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vsim/common/error.hpp"

namespace vsim {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
template <std::size_t N>
using ByteArray = std::array<std::uint8_t, N>;

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

template <std::size_t N>
ByteArray<N> array_from_hex(std::string_view hex) {
  Bytes raw = from_hex(hex);
  if (raw.size() != N) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(N) + " hex bytes, got " +
                    std::to_string(raw.size()));
  }
  ByteArray<N> out;
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

template <std::size_t N>
ByteArray<N> to_array(ByteView data, ErrorCode on_mismatch) {
  if (data.size() != N) throw Error(on_mismatch);
  ByteArray<N> out;
  std::copy(data.begin(), data.end(), out.begin());
  return out;
}

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
  auto v = as_bytes(s);
  return Bytes(v.begin(), v.end());
}

Bytes concat(std::initializer_list<ByteView> parts);

/// Constant-time equality; false on length mismatch.
bool constant_time_equal(ByteView a, ByteView b);

/// Zeroes memory in a way the optimizer may not elide.
void secure_wipe(std::span<std::uint8_t> data);

template <std::size_t N>
void secure_wipe(ByteArray<N>& a) {
  secure_wipe(std::span<std::uint8_t>(a));
}

/// Appends fixed-width big-endian fields to a growing buffer.
class ByteWriter {
 public:
  ByteWriter& put(ByteView data);
  ByteWriter& put_u8(std::uint8_t v);
  ByteWriter& put_u16(std::uint16_t v);
  ByteWriter& put_u32(std::uint32_t v);
  ByteWriter& put_u48(std::uint64_t v);
  ByteWriter& put_u64(std::uint64_t v);
  /// u16 length prefix followed by the data.
  ByteWriter& put_prefixed16(ByteView data);

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

/// Cursor over a byte view; every short read throws Error(code) with the
/// code supplied at construction so each format reports its own error.
class ByteReader {
 public:
  ByteReader(ByteView data, ErrorCode on_error) : data_(data), code_(on_error) {}

  ByteView take(std::size_t n);
  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u48();
  std::uint64_t u64();
  ByteView prefixed16();

  template <std::size_t N>
  ByteArray<N> fixed() {
    ByteView v = take(N);
    ByteArray<N> out;
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  void expect_end() const;

 private:
  ByteView data_;
  std::size_t pos_ = 0;
  ErrorCode code_;
};

void store_be48(std::span<std::uint8_t, 6> out, std::uint64_t v);
std::uint64_t load_be48(std::span<const std::uint8_t, 6> in);

}  // namespace vsim
