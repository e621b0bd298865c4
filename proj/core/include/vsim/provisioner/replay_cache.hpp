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
#include <deque>
#include <mutex>
#include <set>

#include "vsim/common/bytes.hpp"
#include "vsim/common/random.hpp"

namespace vsim::provisioner {

/// Set of recently seen client nonces. Entries leave only when older than
/// `max_age_seconds` or when the cache exceeds `max_size` (oldest first).
class ReplayCache {
 public:
  ReplayCache(std::uint64_t max_age_seconds, std::size_t max_size, const Clock& clock = system_clock());

  /// True if `nonce` was not present (it is now recorded); false on replay.
  bool check_and_insert(const ByteArray<32>& nonce);
  bool contains(const ByteArray<32>& nonce) const;
  std::size_t size() const;

 private:
  void evict_locked(std::uint64_t now);

  struct Entry {
    ByteArray<32> nonce;
    std::uint64_t inserted_at;
  };

  std::uint64_t max_age_;
  std::size_t max_size_;
  const Clock& clock_;
  mutable std::mutex mu_;
  std::deque<Entry> order_;
  std::set<ByteArray<32>> seen_;
};

}  // namespace vsim::provisioner
