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

#include <optional>
#include <string_view>

#include "vsim/sim/aka_responder.hpp"
#include "vsim/sim/vsim.hpp"

namespace vsim::network {

/// Whatever answers AKA challenges on the UE side.
class SubscriberModule {
 public:
  virtual ~SubscriberModule() = default;
  virtual sim::AuthResult authenticate(const sim::Rand& rand, const sim::Autn& autn, std::string_view snn) = 0;
  virtual std::uint64_t invocations() const = 0;
  virtual std::string_view kind() const = 0;
};

class VSimModule final : public SubscriberModule {
 public:
  explicit VSimModule(sim::VSim& vsim) : vsim_(vsim) {}
  sim::AuthResult authenticate(const sim::Rand& rand, const sim::Autn& autn, std::string_view snn) override;
  std::uint64_t invocations() const override { return vsim_.invocations(); }
  std::string_view kind() const override { return "vsim"; }

 private:
  sim::VSim& vsim_;
};

/// Control module: the profile is injected in memory, no TEE involved.
class DirectKeyModule final : public SubscriberModule {
 public:
  explicit DirectKeyModule(sim::SubscriberProfile profile) : profile_(std::move(profile)) {}
  sim::AuthResult authenticate(const sim::Rand& rand, const sim::Autn& autn, std::string_view snn) override;
  std::uint64_t invocations() const override { return invocations_; }
  std::string_view kind() const override { return "direct"; }
  const sim::SubscriberProfile& profile() const { return profile_; }

 private:
  sim::SubscriberProfile profile_;
  std::uint64_t invocations_ = 0;
};

/// Forwards challenges to its module and keeps the resulting K_AUSF.
class MobileEquipment {
 public:
  explicit MobileEquipment(SubscriberModule& module) : module_(module) {}

  /// A success leaves K_AUSF pending until complete_attach().
  sim::AuthResult forward_challenge(const sim::AuthChallenge& challenge, std::string_view snn);
  /// Called once the network has accepted RES*. Returns false if nothing is pending.
  bool complete_attach();

  bool attached() const { return k_ausf_.has_value(); }
  const std::optional<ByteArray<32>>& k_ausf() const { return k_ausf_; }
  void detach() {
    k_ausf_.reset();
    pending_k_ausf_.reset();
  }

  SubscriberModule& module() { return module_; }
  const SubscriberModule& module() const { return module_; }

 private:
  SubscriberModule& module_;
  std::optional<ByteArray<32>> pending_k_ausf_;
  std::optional<ByteArray<32>> k_ausf_;
};

}  // namespace vsim::network
