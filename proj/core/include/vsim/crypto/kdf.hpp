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

#include <cstddef>

#include "vsim/common/bytes.hpp"

namespace vsim::crypto {

inline constexpr std::size_t kKdfMaxOutput = 255 * 32;

/// HKDF-SHA256 (RFC 5869) with an all-zero 32-byte salt and
/// `context_label` as the info string. Throws kLengthError when
/// `out_len` exceeds kKdfMaxOutput.
Bytes kdf(ByteView input_key_material, ByteView context_label, std::size_t out_len);

/// Convenience for the common 32-byte case.
ByteArray<32> kdf32(ByteView input_key_material, ByteView context_label);

}  // namespace vsim::crypto
