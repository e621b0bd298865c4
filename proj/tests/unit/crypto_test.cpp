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

#include "vsim/crypto/aead.hpp"
#include "vsim/crypto/cbc.hpp"
#include "vsim/crypto/dh.hpp"
#include "vsim/crypto/group.hpp"
#include "vsim/crypto/hash.hpp"
#include "vsim/crypto/kdf.hpp"
#include "vsim/crypto/pke.hpp"
#include "vsim/crypto/signature.hpp"

namespace vsim::crypto {
namespace {

template <typename Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kServerError;
}

TEST(Hash, StreamingMatchesOneShot) {
  SeededRandom rng(3);
  Bytes data = rng.bytes(1000);
  Hasher h;
  h.update(ByteView(data).first(1)).update(ByteView(data).subspan(1, 500)).update(ByteView(data).subspan(501));
  EXPECT_EQ(h.finish(), hash(data));
}

TEST(Kdf, LengthBounds) {
  Bytes ikm(32, 1);
  EXPECT_EQ(kdf(ikm, as_bytes("x"), 0).size(), 0u);
  EXPECT_EQ(kdf(ikm, as_bytes("x"), kKdfMaxOutput).size(), kKdfMaxOutput);
  EXPECT_EQ(error_of([&] { kdf(ikm, as_bytes("x"), kKdfMaxOutput + 1); }), ErrorCode::kLengthError);
}

TEST(Kdf, LabelsSeparate) {
  Bytes ikm(32, 1);
  EXPECT_NE(kdf32(ikm, as_bytes("session")), kdf32(ikm, as_bytes("seal")));
}

TEST(Group, ScalarArithmetic) {
  SeededRandom rng(5);
  Scalar a = Scalar::random(rng), b = Scalar::random(rng);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a * a.inverse(), Scalar::from_u64(1));
  EXPECT_EQ(Point::base_mul(a) + Point::base_mul(b), Point::base_mul(a + b));
  EXPECT_EQ(Point::base_mul(a) * b, Point::base_mul(a * b));
}

TEST(Group, RejectsIdentityAndGarbage) {
  EXPECT_FALSE(Point::from_bytes(ByteArray<32>{}).has_value());
  ByteArray<32> ff;
  ff.fill(0xff);
  EXPECT_FALSE(Point::from_bytes(ff).has_value());
  EXPECT_EQ(error_of([&] { Point::parse(ff); }), ErrorCode::kInvalidPoint);
  EXPECT_FALSE(Scalar::from_bytes(ff).has_value());
}

TEST(Group, HashToGroupIsDeterministicAndSpread) {
  EXPECT_EQ(Point::hash_to_group(as_bytes("a")), Point::hash_to_group(as_bytes("a")));
  EXPECT_NE(Point::hash_to_group(as_bytes("a")), Point::hash_to_group(as_bytes("b")));
}

TEST(Dh, SharedSecretAgrees) {
  SeededRandom rng(9);
  DhKeyPair a = dh_keygen(rng), b = dh_keygen(rng);
  EXPECT_EQ(dh(a.secret, b.public_key), dh(b.secret, a.public_key));
}

TEST(Dh, RejectsInvalidPeerKey) {
  SeededRandom rng(9);
  DhKeyPair a = dh_keygen(rng);
  EXPECT_EQ(error_of([&] { dh(a.secret, ByteArray<32>{}); }), ErrorCode::kInvalidPoint);
  EXPECT_EQ(error_of([&] { dh(a.secret, Bytes(31, 1)); }), ErrorCode::kInvalidPoint);
}

TEST(Aead, RoundTripAndTamper) {
  SeededRandom rng(11);
  AeadKey key = rng.array<32>();
  AeadNonce nonce{};
  Bytes ad = to_bytes("ad");
  Bytes ct = aead_seal(key, nonce, ad, as_bytes("hello"));
  EXPECT_EQ(aead_open(key, nonce, ad, ct), to_bytes("hello"));
  for (std::size_t i = 0; i < ct.size(); ++i) {
    Bytes bad = ct;
    bad[i] ^= 0x40;
    EXPECT_EQ(error_of([&] { aead_open(key, nonce, ad, bad); }), ErrorCode::kAuthFailure);
  }
  EXPECT_EQ(error_of([&] { aead_open(key, nonce, as_bytes("other"), ct); }), ErrorCode::kAuthFailure);
  AeadNonce other{};
  other[11] = 1;
  EXPECT_EQ(error_of([&] { aead_open(key, other, ad, ct); }), ErrorCode::kAuthFailure);
}

TEST(Aead, BufferFormsMatchAllocatingForms) {
  SeededRandom rng(12);
  AeadKey key = rng.array<32>();
  AeadNonce nonce = rng.array<12>();
  Bytes sealed(4096, 0xee), opened(1, 0xee);
  for (std::size_t n : {0u, 1u, 100u, 3000u}) {
    Bytes pt = rng.bytes(n);
    aead_seal(key, nonce, {}, pt, sealed);
    EXPECT_EQ(sealed, aead_seal(key, nonce, {}, pt));
    aead_open(key, nonce, {}, sealed, opened);
    EXPECT_EQ(opened, pt);
  }
  sealed[0] ^= 1;
  EXPECT_EQ(error_of([&] { aead_open(key, nonce, {}, sealed, opened); }), ErrorCode::kAuthFailure);
  EXPECT_TRUE(opened.empty());
}

TEST(Pke, RoundTrip) {
  SeededRandom rng(13);
  DhKeyPair kp = dh_keygen(rng);
  for (std::size_t n : {0u, 1u, 80u, 1000u}) {
    Bytes pt = rng.bytes(n);
    Bytes sealed = pk_encrypt(kp.public_key, pt, rng);
    EXPECT_EQ(sealed.size(), n + kPkeOverhead);
    EXPECT_EQ(pk_decrypt(kp.secret, sealed), pt);
  }
}

TEST(Pke, WrongKeyAndTamperFail) {
  SeededRandom rng(13);
  DhKeyPair kp = dh_keygen(rng), other = dh_keygen(rng);
  Bytes sealed = pk_encrypt(kp.public_key, as_bytes("secret"), rng);
  EXPECT_EQ(error_of([&] { pk_decrypt(other.secret, sealed); }), ErrorCode::kDecryptFailure);
  for (std::size_t i = 0; i < sealed.size(); ++i) {
    Bytes bad = sealed;
    bad[i] ^= 1;
    EXPECT_EQ(error_of([&] { pk_decrypt(kp.secret, bad); }), ErrorCode::kDecryptFailure) << i;
  }
  EXPECT_EQ(error_of([&] { pk_decrypt(kp.secret, ByteView(sealed).first(47)); }), ErrorCode::kDecryptFailure);
}

TEST(Pke, EncryptionIsRandomized) {
  SeededRandom rng(13);
  DhKeyPair kp = dh_keygen(rng);
  EXPECT_NE(pk_encrypt(kp.public_key, as_bytes("m"), rng), pk_encrypt(kp.public_key, as_bytes("m"), rng));
}

TEST(Cbc, RoundTripAllLengths) {
  SeededRandom rng(17);
  Bytes key = rng.bytes(32);
  for (std::size_t n = 0; n < 70; ++n) {
    CbcIv iv = rng.array<16>();
    Bytes pt = rng.bytes(n);
    Bytes ct = cbc_encrypt_256(key, iv, pt);
    EXPECT_EQ(ct.size() % 16, 0u);
    EXPECT_GT(ct.size(), n);
    EXPECT_EQ(cbc_decrypt_256(key, iv, ct), pt);
  }
}

TEST(Cbc, KeyLengthChecked) {
  CbcIv iv{};
  EXPECT_EQ(error_of([&] { cbc_encrypt_256(Bytes(16, 0), iv, {}); }), ErrorCode::kKeyLengthError);
  EXPECT_EQ(error_of([&] { cbc_mac_256(Bytes(31, 0), {}); }), ErrorCode::kKeyLengthError);
}

TEST(Cbc, DecryptRejectsBadPadding) {
  SeededRandom rng(19);
  Bytes key = rng.bytes(32);
  CbcIv iv{};
  EXPECT_EQ(error_of([&] { cbc_decrypt_256(key, iv, Bytes(15, 0)); }), ErrorCode::kDecryptFailure);
  EXPECT_EQ(error_of([&] { cbc_decrypt_256(key, iv, Bytes{}); }), ErrorCode::kDecryptFailure);
}

TEST(Cbc, MacLengthPrefixSeparatesMessages) {
  Bytes key(32, 7);
  // Without the length prefix these two would collide after zero padding.
  EXPECT_NE(cbc_mac_256(key, Bytes{}), cbc_mac_256(key, Bytes(8, 0)));
  EXPECT_NE(cbc_mac_256(key, Bytes{1}), cbc_mac_256(key, Bytes{1, 0}));
}

TEST(Signature, SignVerify) {
  SeededRandom rng(23);
  SigningKey k = sig_keygen(rng);
  Signature s = sig_sign(k, as_bytes("msg"));
  EXPECT_TRUE(sig_verify(k.public_key, as_bytes("msg"), s));
  EXPECT_EQ(sig_sign(k, as_bytes("msg")), s);
  EXPECT_FALSE(sig_verify(k.public_key, as_bytes("msh"), s));
  SigningKey other = sig_keygen(rng);
  EXPECT_FALSE(sig_verify(other.public_key, as_bytes("msg"), s));
  for (std::size_t i = 0; i < s.size(); ++i) {
    Signature bad = s;
    bad[i] ^= 0x80;
    EXPECT_FALSE(sig_verify(k.public_key, as_bytes("msg"), bad));
  }
}

TEST(Signature, MalformedKeysNeverThrow) {
  Signature s{};
  EXPECT_FALSE(sig_verify(Bytes(32, 0), as_bytes("m"), s));
  EXPECT_FALSE(sig_verify(Bytes(5, 1), as_bytes("m"), s));
}

}  // namespace
}  // namespace vsim::crypto
