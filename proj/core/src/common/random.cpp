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

#include "vsim/common/random.hpp"

#include <chrono>

#include "internal/sodium.hpp"

namespace vsim {

using detail::ensure_sodium;

void SystemRandom::fill(std::span<std::uint8_t> out) {
  ensure_sodium();
  if (!out.empty()) randombytes_buf(out.data(), out.size());
}

SeededRandom::SeededRandom(std::uint64_t seed) : seed_{} {
  for (int i = 0; i < 8; ++i) seed_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seed >> (8 * i));
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  ensure_sodium();
  if (out.empty()) return;
  std::uint64_t block;
  {
    std::lock_guard lock(mu_);
    block = counter_++;
  }
  ByteArray<40> material{};
  std::copy(seed_.begin(), seed_.end(), material.begin());
  for (int i = 0; i < 8; ++i) material[32 + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(block >> (8 * i));
  ByteArray<randombytes_SEEDBYTES> key;
  crypto_hash_sha256(key.data(), material.data(), material.size());
  randombytes_buf_deterministic(out.data(), out.size(), key.data());
}

RandomSource& system_random() {
  static SystemRandom instance;
  return instance;
}

std::uint64_t SystemClock::now_seconds() const {
  using namespace std::chrono;
  return static_cast<std::uint64_t>(duration_cast<seconds>(system_clock::now().time_since_epoch()).count());
}

const Clock& system_clock() {
  static SystemClock instance;
  return instance;
}

}  // namespace vsim
