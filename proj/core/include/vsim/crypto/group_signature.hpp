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

// Pseudonymous group signatures with private-key and signature-pattern
// revocation, standing in for pairing-based EPID.
//
// A member holds a secret scalar s and an issuer credential (a plain
// signature over g^s). Signing under a basename B publishes the pseudonym
// P = H(B)^s and a Fiat-Shamir proof of knowledge of log_{H(B)} P bound to
// the group key, basename and message. Pseudonyms are stable per basename
// and unlinkable across basenames.
//
// Wire formats (all fixed width, big-endian lengths):
//   GroupPublicKey  = group_id(16) || group_element(32)
//   GroupSignature  = challenge(32) || response(32) || commitment(32) || pseudonym(32)
//   RevocationLists = u32 n_priv || n_priv * scalar(32)
//                     || u32 n_sig || n_sig * (u16 len || basename || pseudonym(32))

#include <optional>
#include <utility>
#include <vector>

#include "vsim/crypto/group.hpp"
#include "vsim/crypto/signature.hpp"

namespace vsim::crypto {

using GroupId = ByteArray<16>;

struct GroupPublicKey {
  Point group_element;
  GroupId group_id;

  static constexpr std::size_t kSerializedSize = 48;
  Bytes serialize() const;
  /// Throws kParseError.
  static GroupPublicKey parse(ByteView data);
  friend bool operator==(const GroupPublicKey&, const GroupPublicKey&) = default;
};

struct IssuerSecret {
  SigningKey signing_key;
  GroupId group_id;
};

struct MemberPrivateKey {
  Scalar secret_scalar;
  Signature membership_credential;
  GroupId group_id;

  /// g^s, the value the credential signs.
  Point commitment() const { return Point::base_mul(secret_scalar); }
};

struct GroupSignature {
  ByteArray<32> challenge;
  ByteArray<32> response;
  ByteArray<32> commitment;
  ByteArray<32> pseudonym;

  static constexpr std::size_t kProofSize = 96;
  static constexpr std::size_t kSerializedSize = 128;
  Bytes serialize() const;
  /// Throws kParseError on wrong length. Point validity is checked by verify.
  static GroupSignature parse(ByteView data);
  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

struct SignatureRevocation {
  Bytes basename;
  Point pseudonym;
  friend bool operator==(const SignatureRevocation&, const SignatureRevocation&) = default;
};

/// Two independently updatable lists. add_* and remove_* keep entries unique.
struct RevocationLists {
  std::vector<Scalar> priv_rl;
  std::vector<SignatureRevocation> sig_rl;

  bool add_key(const Scalar& s);
  bool remove_key(const Scalar& s);
  bool add_signature(ByteView basename, const Point& pseudonym);
  bool remove_signature(ByteView basename, const Point& pseudonym);

  Bytes serialize() const;
  static RevocationLists parse(ByteView data);
  friend bool operator==(const RevocationLists&, const RevocationLists&) = default;
};

enum class GroupVerifyResult { kValid, kBadProof, kRevokedByKey, kRevokedBySignature };

std::string_view to_string(GroupVerifyResult r);

std::pair<GroupPublicKey, IssuerSecret> group_setup(RandomSource& rng = system_random());
MemberPrivateKey group_join(const IssuerSecret& issuer, RandomSource& rng = system_random());
bool verify_credential(const GroupPublicKey& gpk, const MemberPrivateKey& member);

/// Base element for a basename's pseudonyms.
Point basename_base(ByteView basename);
/// H(basename)^s; what gsig_sign publishes for this member and basename.
Point pseudonym_for(const Scalar& secret_scalar, ByteView basename);

GroupSignature gsig_sign(const MemberPrivateKey& member, ByteView message, ByteView basename,
                         const GroupPublicKey& gpk, RandomSource& rng = system_random());

/// Checks proof, then priv_rl, then sig_rl.
GroupVerifyResult gsig_verify(const GroupPublicKey& gpk, ByteView message, ByteView basename,
                              const GroupSignature& sig, const RevocationLists& rl);

}  // namespace vsim::crypto
