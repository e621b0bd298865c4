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

#include "vsim/common/error.hpp"

namespace vsim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthError: return "LengthError";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kInvalidScalar: return "InvalidScalar";
    case ErrorCode::kDecryptFailure: return "DecryptFailure";
    case ErrorCode::kAuthFailure: return "AuthFailure";
    case ErrorCode::kKeyLengthError: return "KeyLengthError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyImage: return "EmptyImage";
    case ErrorCode::kBadReportDataLength: return "BadReportDataLength";
    case ErrorCode::kManifestParseError: return "ManifestParseError";
    case ErrorCode::kBootChainBroken: return "BootChainBroken";
    case ErrorCode::kSealTamper: return "SealTamper";
    case ErrorCode::kBadHeader: return "BadHeader";
    case ErrorCode::kVersionUnsupported: return "VersionUnsupported";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kNotProvisioned: return "NotProvisioned";
    case ErrorCode::kAlreadyProvisioned: return "AlreadyProvisioned";
    case ErrorCode::kServerNonceMismatch: return "ServerNonceMismatch";
    case ErrorCode::kAttestRequestMismatch: return "AttestRequestMismatch";
    case ErrorCode::kAttestRejected: return "AttestRejected";
    case ErrorCode::kChannelAuthFailure: return "ChannelAuthFailure";
    case ErrorCode::kProfileParseError: return "ProfileParseError";
    case ErrorCode::kProtocolViolation: return "ProtocolViolation";
    case ErrorCode::kReplayDetected: return "ReplayDetected";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kTokenAlreadyClaimed: return "TokenAlreadyClaimed";
    case ErrorCode::kNonceMismatch: return "NonceMismatch";
    case ErrorCode::kDuplicateSupi: return "DuplicateSupi";
    case ErrorCode::kBindError: return "BindError";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kTransportError: return "TransportError";
    case ErrorCode::kServerError: return "ServerError";
    case ErrorCode::kResyncMacFailure: return "ResyncMacFailure";
    case ErrorCode::kNotAttached: return "NotAttached";
  }
  return "Unknown";
}

Error::Error(ErrorCode code) : std::runtime_error(std::string(to_string(code))), code_(code) {}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace vsim
