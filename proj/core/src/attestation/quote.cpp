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

#include "vsim/attestation/quote.hpp"

namespace vsim::attest {

Bytes Quote::serialize() const {
  ByteWriter w;
  w.put(measurement.digest).put(report_data).put_u16(tee_version).put_u64(timestamp);
  return w.take();
}

Quote Quote::parse(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  Quote q;
  q.measurement.digest = r.fixed<32>();
  q.report_data = r.fixed<kReportDataSize>();
  q.tee_version = r.u16();
  q.timestamp = r.u64();
  r.expect_end();
  return q;
}

Quote make_quote(const Measurement& measurement, ByteView report_data, std::uint16_t tee_version,
                 const Clock& clock) {
  if (report_data.size() != kReportDataSize) {
    throw Error(ErrorCode::kBadReportDataLength, "got " + std::to_string(report_data.size()) + " bytes");
  }
  Quote q;
  q.measurement = measurement;
  std::copy(report_data.begin(), report_data.end(), q.report_data.begin());
  q.tee_version = tee_version;
  q.timestamp = clock.now_seconds();
  return q;
}

Bytes SignedQuote::serialize() const {
  ByteWriter w;
  w.put(quote.serialize()).put_prefixed16(basename).put(signature.serialize());
  return w.take();
}

SignedQuote SignedQuote::parse(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  SignedQuote sq;
  sq.quote = Quote::parse(r.take(Quote::kSerializedSize));
  ByteView basename = r.prefixed16();
  sq.basename.assign(basename.begin(), basename.end());
  sq.signature = crypto::GroupSignature::parse(r.take(crypto::GroupSignature::kSerializedSize));
  r.expect_end();
  return sq;
}

SignedQuote sign_quote(const crypto::MemberPrivateKey& member, const crypto::GroupPublicKey& gpk,
                       const Quote& quote, ByteView basename, RandomSource& rng) {
  return {quote, crypto::gsig_sign(member, quote.serialize(), basename, gpk, rng),
          Bytes(basename.begin(), basename.end())};
}

std::string_view to_string(QuoteVerdict v) {
  switch (v) {
    case QuoteVerdict::kAccepted: return "Accepted";
    case QuoteVerdict::kBadSignature: return "BadSignature";
    case QuoteVerdict::kRevokedByKey: return "RevokedByKey";
    case QuoteVerdict::kRevokedBySignature: return "RevokedBySignature";
    case QuoteVerdict::kMeasurementMismatch: return "MeasurementMismatch";
    case QuoteVerdict::kReportDataMismatch: return "ReportDataMismatch";
  }
  return "Unknown";
}

QuoteVerdict verify_signed_quote(const crypto::GroupPublicKey& gpk, const SignedQuote& sq,
                                 const Measurement& expected_measurement, const ReportData& expected_report_data,
                                 const crypto::RevocationLists& rl) {
  switch (crypto::gsig_verify(gpk, sq.quote.serialize(), sq.basename, sq.signature, rl)) {
    case crypto::GroupVerifyResult::kValid: break;
    case crypto::GroupVerifyResult::kBadProof: return QuoteVerdict::kBadSignature;
    case crypto::GroupVerifyResult::kRevokedByKey: return QuoteVerdict::kRevokedByKey;
    case crypto::GroupVerifyResult::kRevokedBySignature: return QuoteVerdict::kRevokedBySignature;
  }
  if (!constant_time_equal(sq.quote.measurement.digest, expected_measurement.digest)) {
    return QuoteVerdict::kMeasurementMismatch;
  }
  if (!constant_time_equal(sq.quote.report_data, expected_report_data)) return QuoteVerdict::kReportDataMismatch;
  return QuoteVerdict::kAccepted;
}

ReportData session_report_data(const crypto::Digest& transcript_hash, const ByteArray<32>& nonce_c,
                               const ByteArray<32>& nonce_s) {
  crypto::Digest binding = crypto::Hasher().update(transcript_hash).update(nonce_c).update(nonce_s).finish();
  ReportData out;
  std::copy(binding.begin(), binding.end(), out.begin());
  std::copy(nonce_c.begin(), nonce_c.end(), out.begin() + 32);
  return out;
}

}  // namespace vsim::attest
