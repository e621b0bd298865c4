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

#include "vsim/provisioner/service.hpp"

namespace vsim::provisioner {

using protocol::WireError;

namespace {
constexpr std::chrono::milliseconds kAcceptPoll{100};
}

ProvisionerService::ProvisionerService(const ProvisionerConfig& config, RandomSource& rng, const Clock& clock)
    : config_(config),
      rng_(rng),
      inventory_(config.inventory),
      revocations_(config.revocation_file),
      replay_cache_(config.replay_window, config.replay_capacity, clock),
      session_log_(config.session_log ? std::optional<SessionLog>(std::in_place, *config.session_log)
                                      : std::nullopt),
      ctx_{config.static_secret,
           config.group_public_key,
           config.expected_measurement,
           protocol::AttestRequest{config.tee_version, to_bytes(config.basename)},
           inventory_,
           revocations_,
           replay_cache_,
           rng_,
           session_log_ ? &*session_log_ : nullptr},
      listener_(protocol::TcpListener::bind(config.listen_host, config.listen_port)) {}

ProvisionerService::~ProvisionerService() { stop(); }

void ProvisionerService::start() {
  stopping_.store(false);
  accept_thread_ = std::thread([this] { run(); });
}

void ProvisionerService::stop() {
  request_stop();
  if (accept_thread_.joinable()) accept_thread_.join();
}

void ProvisionerService::reap_finished() {
  for (auto it = workers_.begin(); it != workers_.end();) {
    if (it->done->load()) {
      it->thread.join();
      it = workers_.erase(it);
    } else {
      ++it;
    }
  }
}

void ProvisionerService::run() {
  while (!stopping_.load()) {
    int fd = listener_.accept(kAcceptPoll);
    reap_finished();
    if (fd < 0) continue;
    auto done = std::make_shared<std::atomic<bool>>(false);
    workers_.push_back({std::thread([this, fd, done] {
                          serve_connection(fd);
                          done->store(true);
                        }),
                        done});
  }
  for (Worker& w : workers_) w.thread.join();
  workers_.clear();
  listener_.close();
}

void ProvisionerService::serve_connection(int fd) {
  protocol::TcpTransport transport(fd, std::chrono::seconds(config_.session_timeout));
  ServerSession session(ctx_);
  try {
    while (session.state() == SessionState::kAwaitHello || session.state() == SessionState::kAwaitAttest) {
      protocol::Frame request;
      try {
        request = transport.receive();
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kTimeout) transport.send(protocol::error_frame(WireError::kTimeout));
        if (e.code() == ErrorCode::kParseError) transport.send(protocol::error_frame(WireError::kMalformedMessage));
        break;
      }
      transport.send(session.handle(request));
    }
  } catch (const Error&) {
  }
  if (session.state() == SessionState::kDone) ++delivered_;
  ++completed_;
}

}  // namespace vsim::provisioner
