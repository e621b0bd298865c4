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

#include "vsim/crypto/signature.hpp"

namespace vsim::crypto {
namespace {

constexpr std::string_view kNonceDomain = "vsim-sig-nonce";
constexpr std::string_view kChallengeDomain = "vsim-sig";

Scalar challenge(const ByteArray<32>& r, const Point& pk, ByteView message) {
  return Scalar::from_hash(concat({as_bytes(kChallengeDomain), r, pk.bytes(), message}));
}

}  // namespace

SigningKey SigningKey::from_secret(const Scalar& secret) { return {secret, Point::base_mul(secret)}; }

SigningKey sig_keygen(RandomSource& rng) { return SigningKey::from_secret(Scalar::random(rng)); }

Signature sig_sign(const SigningKey& key, ByteView message) {
  Scalar r = Scalar::from_hash(concat({as_bytes(kNonceDomain), key.secret.bytes(), message}));
  Point commit = Point::base_mul(r);
  Scalar c = challenge(commit.bytes(), key.public_key, message);
  Scalar z = r + c * key.secret;
  r.wipe();

  Signature sig;
  std::copy(commit.bytes().begin(), commit.bytes().end(), sig.begin());
  std::copy(z.bytes().begin(), z.bytes().end(), sig.begin() + 32);
  return sig;
}

bool sig_verify(ByteView public_key, ByteView message, ByteView signature) {
  auto pk = Point::from_bytes(public_key);
  if (!pk) return false;
  return sig_verify(*pk, message, signature);
}

bool sig_verify(const Point& public_key, ByteView message, ByteView signature) {
  if (signature.size() != kSignatureSize) return false;
  auto commit = Point::from_bytes(signature.first(32));
  ByteArray<32> z_bytes;
  std::copy(signature.begin() + 32, signature.end(), z_bytes.begin());
  auto z = Scalar::from_bytes(z_bytes);
  if (!commit || !z || z->is_zero()) return false;

  try {
    Scalar c = challenge(commit->bytes(), public_key, message);
    Point lhs = Point::base_mul(*z);
    Point rhs = *commit + public_key * c;
    return lhs == rhs;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace vsim::crypto
