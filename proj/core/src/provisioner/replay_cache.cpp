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

#include "vsim/provisioner/replay_cache.hpp"

namespace vsim::provisioner {

ReplayCache::ReplayCache(std::uint64_t max_age_seconds, std::size_t max_size, const Clock& clock)
    : max_age_(max_age_seconds), max_size_(max_size == 0 ? 1 : max_size), clock_(clock) {}

void ReplayCache::evict_locked(std::uint64_t now) {
  while (!order_.empty() && now - order_.front().inserted_at > max_age_) {
    seen_.erase(order_.front().nonce);
    order_.pop_front();
  }
  while (order_.size() >= max_size_) {
    seen_.erase(order_.front().nonce);
    order_.pop_front();
  }
}

bool ReplayCache::check_and_insert(const ByteArray<32>& nonce) {
  std::lock_guard lock(mu_);
  const std::uint64_t now = clock_.now_seconds();
  evict_locked(now);
  if (seen_.count(nonce) != 0) return false;
  seen_.insert(nonce);
  order_.push_back({nonce, now});
  return true;
}

bool ReplayCache::contains(const ByteArray<32>& nonce) const {
  std::lock_guard lock(mu_);
  return seen_.count(nonce) != 0;
}

std::size_t ReplayCache::size() const {
  std::lock_guard lock(mu_);
  return order_.size();
}

}  // namespace vsim::provisioner
