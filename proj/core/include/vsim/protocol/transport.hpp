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

#include <chrono>
#include <cstdint>
#include <string>

#include "vsim/protocol/wire.hpp"

namespace vsim::protocol {

/// Blocking, message-oriented channel carrying whole frames.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual void send(const Frame& frame) = 0;
  /// Throws kTransportError on EOF or I/O failure, kTimeout on inactivity.
  virtual Frame receive() = 0;
};

/// Owns a connected stream socket.
class TcpTransport final : public Transport {
 public:
  static constexpr std::chrono::milliseconds kDefaultTimeout{30'000};

  /// Throws kTransportError if the connection cannot be made.
  static TcpTransport connect(const std::string& host, std::uint16_t port,
                              std::chrono::milliseconds timeout = kDefaultTimeout);
  TcpTransport(int fd, std::chrono::milliseconds timeout);
  TcpTransport(TcpTransport&& other) noexcept;
  TcpTransport& operator=(TcpTransport&& other) noexcept;
  TcpTransport(const TcpTransport&) = delete;
  TcpTransport& operator=(const TcpTransport&) = delete;
  ~TcpTransport() override;

  void send(const Frame& frame) override;
  Frame receive() override;
  /// Sends raw bytes without framing; used by fault-injection tests.
  void send_raw(ByteView data);
  void close();

 private:
  void read_exact(std::uint8_t* out, std::size_t n);

  int fd_ = -1;
  std::chrono::milliseconds timeout_;
};

/// Listening socket. Throws kBindError from bind().
class TcpListener {
 public:
  static TcpListener bind(const std::string& host, std::uint16_t port);
  TcpListener(TcpListener&& other) noexcept;
  TcpListener& operator=(TcpListener&& other) noexcept;
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;
  ~TcpListener();

  std::uint16_t port() const { return port_; }
  /// Waits up to `timeout`; returns -1 if nothing arrived.
  int accept(std::chrono::milliseconds timeout);
  void close();

 private:
  TcpListener(int fd, std::uint16_t port) : fd_(fd), port_(port) {}
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

}  // namespace vsim::protocol
