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

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsim {

/// Every failure the library can raise. Enumerated verification outcomes
/// (signature verdicts, boot-chain verdicts, AKA results) are returned as
/// values and are not listed here.
enum class ErrorCode {
  // crypto
  kLengthError,
  kInvalidPoint,
  kInvalidScalar,
  kDecryptFailure,
  kAuthFailure,
  kKeyLengthError,
  kParseError,
  // attestation
  kEmptyImage,
  kBadReportDataLength,
  kManifestParseError,
  // tee
  kBootChainBroken,
  kSealTamper,
  kBadHeader,
  kVersionUnsupported,
  kIoError,
  kConfigError,
  // sim
  kInvalidProfile,
  kNotProvisioned,
  kAlreadyProvisioned,
  kServerNonceMismatch,
  kAttestRequestMismatch,
  kAttestRejected,
  kChannelAuthFailure,
  kProfileParseError,
  kProtocolViolation,
  // provisioner
  kReplayDetected,
  kUnknownToken,
  kTokenAlreadyClaimed,
  kNonceMismatch,
  kDuplicateSupi,
  kBindError,
  kTimeout,
  kTransportError,
  kServerError,
  // network
  kResyncMacFailure,
  kNotAttached,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  explicit Error(ErrorCode code);
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vsim
