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
#include <memory>
#include <thread>
#include <vector>

#include "vsim/protocol/transport.hpp"
#include "vsim/provisioner/config.hpp"
#include "vsim/provisioner/server_session.hpp"

namespace vsim::provisioner {

/// TCP front end: one thread and one ServerSession per connection.
class ProvisionerService {
 public:
  /// Binds immediately. Throws kBindError.
  explicit ProvisionerService(const ProvisionerConfig& config, RandomSource& rng = system_random(),
                              const Clock& clock = system_clock());
  ~ProvisionerService();
  ProvisionerService(const ProvisionerService&) = delete;
  ProvisionerService& operator=(const ProvisionerService&) = delete;

  /// Runs the accept loop on a background thread.
  void start();
  /// Stops accepting and waits for in-flight sessions.
  void stop();
  /// Accept loop on the calling thread; returns after request_stop() once
  /// in-flight sessions finish.
  void run();
  /// Async-signal-safe.
  void request_stop() { stopping_.store(true); }

  std::uint16_t port() const { return listener_.port(); }
  std::uint64_t sessions_completed() const { return completed_.load(); }
  std::uint64_t profiles_delivered() const { return delivered_.load(); }

 private:
  void serve_connection(int fd);
  void reap_finished();

  ProvisionerConfig config_;
  RandomSource& rng_;
  InventoryStore inventory_;
  RevocationStore revocations_;
  ReplayCache replay_cache_;
  std::optional<SessionLog> session_log_;
  ProvisionerContext ctx_;
  protocol::TcpListener listener_;

  std::atomic<bool> stopping_{false};
  std::atomic<std::uint64_t> completed_{0};
  std::atomic<std::uint64_t> delivered_{0};
  std::thread accept_thread_;
  struct Worker {
    std::thread thread;
    std::shared_ptr<std::atomic<bool>> done;
  };
  std::vector<Worker> workers_;
};

}  // namespace vsim::provisioner
