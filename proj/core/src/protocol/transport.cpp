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

#include "vsim/protocol/transport.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace vsim::protocol {
namespace {

std::string sys_error(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

}  // namespace

TcpTransport TcpTransport::connect(const std::string& host, std::uint16_t port, std::chrono::milliseconds timeout) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const std::string service = std::to_string(port);
  if (int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &res); rc != 0) {
    throw Error(ErrorCode::kTransportError, std::string("resolve ") + host + ": " + gai_strerror(rc));
  }
  int fd = -1;
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_CLOEXEC, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) throw Error(ErrorCode::kTransportError, "connect " + host + ":" + service + " failed");
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  return TcpTransport(fd, timeout);
}

TcpTransport::TcpTransport(int fd, std::chrono::milliseconds timeout) : fd_(fd), timeout_(timeout) {}

TcpTransport::TcpTransport(TcpTransport&& other) noexcept : fd_(other.fd_), timeout_(other.timeout_) {
  other.fd_ = -1;
}

TcpTransport& TcpTransport::operator=(TcpTransport&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = other.fd_;
    timeout_ = other.timeout_;
    other.fd_ = -1;
  }
  return *this;
}

TcpTransport::~TcpTransport() { close(); }

void TcpTransport::close() {
  if (fd_ >= 0) {
    ::shutdown(fd_, SHUT_RDWR);
    ::close(fd_);
    fd_ = -1;
  }
}

void TcpTransport::send(const Frame& frame) { send_raw(frame.encode()); }

void TcpTransport::send_raw(ByteView data) {
  if (fd_ < 0) throw Error(ErrorCode::kTransportError, "socket closed");
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kTransportError, sys_error("send"));
    }
    sent += static_cast<std::size_t>(n);
  }
}

void TcpTransport::read_exact(std::uint8_t* out, std::size_t n) {
  if (fd_ < 0) throw Error(ErrorCode::kTransportError, "socket closed");
  std::size_t got = 0;
  while (got < n) {
    pollfd pfd{fd_, POLLIN, 0};
    int ready = ::poll(&pfd, 1, static_cast<int>(timeout_.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kTransportError, sys_error("poll"));
    }
    if (ready == 0) throw Error(ErrorCode::kTimeout, "no data within session timeout");
    ssize_t r = ::recv(fd_, out + got, n - got, 0);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kTransportError, sys_error("recv"));
    }
    if (r == 0) throw Error(ErrorCode::kTransportError, "peer closed connection");
    got += static_cast<std::size_t>(r);
  }
}

Frame TcpTransport::receive() {
  ByteArray<kFrameHeaderSize> header;
  read_exact(header.data(), header.size());
  ByteReader r(header, ErrorCode::kParseError);
  r.take(5);
  const std::uint32_t len = r.u32();
  if (len > kMaxPayload) throw Error(ErrorCode::kParseError, "payload too large");
  Bytes raw(header.begin(), header.end());
  raw.resize(kFrameHeaderSize + len);
  if (len > 0) read_exact(raw.data() + kFrameHeaderSize, len);
  return Frame::decode(raw);
}

TcpListener TcpListener::bind(const std::string& host, std::uint16_t port) {
  int fd = ::socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd < 0) throw Error(ErrorCode::kBindError, sys_error("socket"));
  int one = 1;
  ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
    ::close(fd);
    throw Error(ErrorCode::kBindError, "listen address must be a dotted IPv4 address: " + host);
  }
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd, 64) != 0) {
    std::string msg = sys_error("bind");
    ::close(fd);
    throw Error(ErrorCode::kBindError, host + ":" + std::to_string(port) + ": " + msg);
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  return TcpListener(fd, ntohs(addr.sin_port));
}

TcpListener::TcpListener(TcpListener&& other) noexcept : fd_(other.fd_), port_(other.port_) { other.fd_ = -1; }

TcpListener& TcpListener::operator=(TcpListener&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = other.fd_;
    port_ = other.port_;
    other.fd_ = -1;
  }
  return *this;
}

TcpListener::~TcpListener() { close(); }

void TcpListener::close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

int TcpListener::accept(std::chrono::milliseconds timeout) {
  if (fd_ < 0) return -1;
  pollfd pfd{fd_, POLLIN, 0};
  int ready = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
  if (ready <= 0) return -1;
  int client = ::accept4(fd_, nullptr, nullptr, SOCK_CLOEXEC);
  if (client >= 0) {
    int one = 1;
    ::setsockopt(client, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  }
  return client;
}

}  // namespace vsim::protocol
