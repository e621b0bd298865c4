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

#include "vsim/attestation/measurement.hpp"
#include "vsim/common/random.hpp"
#include "vsim/crypto/group_signature.hpp"

namespace vsim::attest {

inline constexpr std::size_t kReportDataSize = 64;
using ReportData = ByteArray<kReportDataSize>;

/// Canonical wire form (106 bytes):
///   measurement(32) || report_data(64) || tee_version(2,BE) || timestamp(8,BE)
struct Quote {
  Measurement measurement;
  ReportData report_data{};
  std::uint16_t tee_version = 0;
  std::uint64_t timestamp = 0;

  static constexpr std::size_t kSerializedSize = 32 + 64 + 2 + 8;
  Bytes serialize() const;
  /// Throws kParseError.
  static Quote parse(ByteView data);
  friend bool operator==(const Quote&, const Quote&) = default;
};

/// Throws kBadReportDataLength unless report_data is exactly 64 bytes.
Quote make_quote(const Measurement& measurement, ByteView report_data, std::uint16_t tee_version,
                 const Clock& clock = system_clock());

/// Wire form: quote(106) || basename_len(2,BE) || basename || signature(128)
struct SignedQuote {
  Quote quote;
  crypto::GroupSignature signature;
  Bytes basename;

  Bytes serialize() const;
  static SignedQuote parse(ByteView data);
  friend bool operator==(const SignedQuote&, const SignedQuote&) = default;
};

SignedQuote sign_quote(const crypto::MemberPrivateKey& member, const crypto::GroupPublicKey& gpk,
                       const Quote& quote, ByteView basename, RandomSource& rng = system_random());

enum class QuoteVerdict {
  kAccepted,
  kBadSignature,
  kRevokedByKey,
  kRevokedBySignature,
  kMeasurementMismatch,
  kReportDataMismatch,
};

std::string_view to_string(QuoteVerdict v);

/// Group signature (with revocation) first, then measurement, then
/// report data; the first failing check decides.
QuoteVerdict verify_signed_quote(const crypto::GroupPublicKey& gpk, const SignedQuote& sq,
                                 const Measurement& expected_measurement, const ReportData& expected_report_data,
                                 const crypto::RevocationLists& rl);

/// report_data binding a quote to one handshake:
///   SHA-256(transcript_hash || nonce_c || nonce_s) || nonce_c
ReportData session_report_data(const crypto::Digest& transcript_hash, const ByteArray<32>& nonce_c,
                               const ByteArray<32>& nonce_s);

}  // namespace vsim::attest
