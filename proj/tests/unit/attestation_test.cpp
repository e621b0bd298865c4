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

#include <gtest/gtest.h>

#include "testkit.hpp"
#include "vsim/attestation/boot_chain.hpp"
#include "vsim/attestation/measurement.hpp"
#include "vsim/attestation/quote.hpp"
#include "vsim/crypto/hash.hpp"

namespace vsim::attest {
namespace {

TEST(Measurement, MatchesConfigureTimeDigest) {
  EXPECT_EQ(measure_binary(testkit::reference_image()).digest, testkit::reference_measurement().digest);
}

TEST(Measurement, SingleBitChangesDigest) {
  EXPECT_NE(measure_binary(testkit::tampered_image()).digest, testkit::reference_measurement().digest);
}

TEST(Measurement, EmptyImageRejected) {
  try {
    measure_binary({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyImage);
  }
}

struct BootFixture : ::testing::Test {
  SeededRandom rng{51};
  crypto::SigningKey root = crypto::sig_keygen(rng);
  std::vector<Bytes> images{to_bytes("bl1"), to_bytes("bl2"), to_bytes("kernel"), to_bytes("tee-os")};
  std::vector<BootLayer> chain = build_boot_chain(root, images, rng).layers;
};

TEST_F(BootFixture, IntactChainTrusted) {
  EXPECT_TRUE(verify_boot_chain(root.public_key.bytes(), chain).is_trusted());
}

TEST_F(BootFixture, EmptyChainBrokenAtZero) {
  BootVerdict v = verify_boot_chain(root.public_key.bytes(), {});
  EXPECT_FALSE(v.is_trusted());
  EXPECT_EQ(v.broken_index(), 0u);
}

TEST_F(BootFixture, WrongRootBrokenAtZero) {
  crypto::SigningKey other = crypto::sig_keygen(rng);
  EXPECT_EQ(verify_boot_chain(other.public_key.bytes(), chain).broken_index(), 0u);
}

// Four corruption kinds at each of four layers; each must be caught at the
// corrupted layer.
TEST_F(BootFixture, CorruptionMatrixReportsFirstBrokenLayer) {
  for (std::size_t layer = 0; layer < chain.size(); ++layer) {
    for (int kind = 0; kind < 4; ++kind) {
      std::vector<BootLayer> bad = chain;
      switch (kind) {
        case 0: bad[layer].image[0] ^= 0x01; break;
        case 1: bad[layer].image_signature[5] ^= 0x01; break;
        case 2: bad[layer].next_layer_pk[3] ^= 0x01; break;
        case 3: bad[layer].image.push_back(0x00); break;
      }
      BootVerdict v = verify_boot_chain(root.public_key.bytes(), bad);
      EXPECT_FALSE(v.is_trusted()) << layer << "/" << kind;
      EXPECT_EQ(v.broken_index(), layer) << layer << "/" << kind;
    }
  }
}

TEST_F(BootFixture, SwappedLayersBroken) {
  std::vector<BootLayer> bad = chain;
  std::swap(bad[1], bad[2]);
  EXPECT_EQ(verify_boot_chain(root.public_key.bytes(), bad).broken_index(), 1u);
}

TEST_F(BootFixture, ManifestRoundTrip) {
  Bytes wire = serialize_manifest(chain);
  std::vector<BootLayer> back = parse_manifest(wire);
  ASSERT_EQ(back.size(), chain.size());
  EXPECT_EQ(serialize_manifest(back), wire);
  EXPECT_TRUE(verify_boot_chain(root.public_key.bytes(), back).is_trusted());
  for (std::size_t cut : {std::size_t{0}, std::size_t{3}, wire.size() - 1}) {
    EXPECT_THROW(parse_manifest(ByteView(wire).first(cut)), Error) << cut;
  }
}

struct QuoteFixture : ::testing::Test {
  SeededRandom rng{61};
  testkit::Group group = testkit::Group::create(rng);
  crypto::MemberPrivateKey member = group.join(rng);
  ManualClock clock;
  Bytes basename = to_bytes("bn");
  ReportData rd = [this] {
    ReportData r;
    rng.fill(r);
    return r;
  }();
  SignedQuote sq = sign_quote(member, group.gpk, make_quote(testkit::reference_measurement(), rd, 1, clock),
                              basename, rng);
};

TEST_F(QuoteFixture, Accepted) {
  EXPECT_EQ(verify_signed_quote(group.gpk, sq, testkit::reference_measurement(), rd, {}), QuoteVerdict::kAccepted);
}

TEST_F(QuoteFixture, SerializationRoundTrip) {
  SignedQuote back = SignedQuote::parse(sq.serialize());
  EXPECT_EQ(back.serialize(), sq.serialize());
  EXPECT_EQ(Quote::parse(sq.quote.serialize()).serialize(), sq.quote.serialize());
  EXPECT_EQ(sq.quote.serialize().size(), 106u);
}

TEST_F(QuoteFixture, MeasurementMismatch) {
  EXPECT_EQ(verify_signed_quote(group.gpk, sq, measure_binary(testkit::tampered_image()), rd, {}),
            QuoteVerdict::kMeasurementMismatch);
}

TEST_F(QuoteFixture, ReportDataMismatch) {
  ReportData other = rd;
  other[0] ^= 1;
  EXPECT_EQ(verify_signed_quote(group.gpk, sq, testkit::reference_measurement(), other, {}),
            QuoteVerdict::kReportDataMismatch);
}

TEST_F(QuoteFixture, AlteredQuoteFieldsBreakSignature) {
  SignedQuote bad = sq;
  bad.quote.timestamp += 1;
  EXPECT_EQ(verify_signed_quote(group.gpk, bad, testkit::reference_measurement(), rd, {}),
            QuoteVerdict::kBadSignature);
  bad = sq;
  bad.quote.measurement.digest[0] ^= 1;
  EXPECT_EQ(verify_signed_quote(group.gpk, bad, bad.quote.measurement, rd, {}), QuoteVerdict::kBadSignature);
  bad = sq;
  bad.basename = to_bytes("other");
  EXPECT_EQ(verify_signed_quote(group.gpk, bad, testkit::reference_measurement(), rd, {}),
            QuoteVerdict::kBadSignature);
}

TEST_F(QuoteFixture, Revocations) {
  crypto::RevocationLists rl;
  rl.add_key(member.secret_scalar);
  EXPECT_EQ(verify_signed_quote(group.gpk, sq, testkit::reference_measurement(), rd, rl),
            QuoteVerdict::kRevokedByKey);
  crypto::RevocationLists sig_rl;
  sig_rl.add_signature(basename, crypto::Point::parse(sq.signature.pseudonym));
  EXPECT_EQ(verify_signed_quote(group.gpk, sq, testkit::reference_measurement(), rd, sig_rl),
            QuoteVerdict::kRevokedBySignature);
}

TEST_F(QuoteFixture, ReportDataLengthChecked) {
  try {
    make_quote(testkit::reference_measurement(), Bytes(63, 0), 1, clock);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadReportDataLength);
  }
}

TEST(SessionReportData, BindsAllInputs) {
  crypto::Digest t{};
  ByteArray<32> nc{}, ns{};
  ReportData base = session_report_data(t, nc, ns);
  t[0] = 1;
  EXPECT_NE(session_report_data(t, nc, ns), base);
  t[0] = 0;
  nc[0] = 1;
  EXPECT_NE(session_report_data(t, nc, ns), base);
  nc[0] = 0;
  ns[0] = 1;
  EXPECT_NE(session_report_data(t, nc, ns), base);
}

}  // namespace
}  // namespace vsim::attest
