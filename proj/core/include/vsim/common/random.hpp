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

#include <atomic>
#include <cstdint>
#include <mutex>
#include <span>

#include "vsim/common/bytes.hpp"

namespace vsim {

/// Source of randomness for every key, nonce and token the library draws.
/// Scenario tests inject a SeededRandom to make full runs reproducible.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  template <std::size_t N>
  ByteArray<N> array() {
    ByteArray<N> out;
    fill(out);
    return out;
  }

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
  }
};

/// OS entropy via libsodium's randombytes.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic stream: block i is randombytes_buf_deterministic keyed by
/// SHA-256(seed || i). Thread-safe.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(const ByteArray<32>& seed) : seed_(seed) {}
  explicit SeededRandom(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out) override;

 private:
  std::mutex mu_;
  ByteArray<32> seed_;
  std::uint64_t counter_ = 0;
};

RandomSource& system_random();

class Clock {
 public:
  virtual ~Clock() = default;
  /// Seconds since the Unix epoch.
  virtual std::uint64_t now_seconds() const = 0;
};

class SystemClock final : public Clock {
 public:
  std::uint64_t now_seconds() const override;
};

/// Test clock that only moves when told to.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(std::uint64_t start = 1'700'000'000) : now_(start) {}
  std::uint64_t now_seconds() const override { return now_.load(); }
  void advance(std::uint64_t seconds) { now_ += seconds; }
  void set(std::uint64_t t) { now_ = t; }

 private:
  std::atomic<std::uint64_t> now_;
};

const Clock& system_clock();

}  // namespace vsim
