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

#include "vsim/crypto/group_signature.hpp"

#include <algorithm>

namespace vsim::crypto {
namespace {

constexpr std::string_view kBasenameDomain = "vsim-basename";
constexpr std::string_view kProofDomain = "vsim-gsig-v1";

Scalar proof_challenge(const GroupPublicKey& gpk, ByteView basename, ByteView message,
                       const ByteArray<32>& pseudonym, const ByteArray<32>& commitment) {
  ByteWriter w;
  w.put(as_bytes(kProofDomain))
      .put(gpk.group_id)
      .put(gpk.group_element.bytes())
      .put_u32(static_cast<std::uint32_t>(basename.size()))
      .put(basename)
      .put_u32(static_cast<std::uint32_t>(message.size()))
      .put(message)
      .put(pseudonym)
      .put(commitment);
  return Scalar::from_hash(w.bytes());
}

}  // namespace

std::string_view to_string(GroupVerifyResult r) {
  switch (r) {
    case GroupVerifyResult::kValid: return "Valid";
    case GroupVerifyResult::kBadProof: return "BadProof";
    case GroupVerifyResult::kRevokedByKey: return "RevokedByKey";
    case GroupVerifyResult::kRevokedBySignature: return "RevokedBySignature";
  }
  return "Unknown";
}

Bytes GroupPublicKey::serialize() const {
  ByteWriter w;
  w.put(group_id).put(group_element.bytes());
  return w.take();
}

GroupPublicKey GroupPublicKey::parse(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  GroupId id = r.fixed<16>();
  auto element = Point::from_bytes(r.fixed<32>());
  r.expect_end();
  if (!element) throw Error(ErrorCode::kParseError, "group element is not a valid point");
  return {*element, id};
}

Bytes GroupSignature::serialize() const {
  ByteWriter w;
  w.put(challenge).put(response).put(commitment).put(pseudonym);
  return w.take();
}

GroupSignature GroupSignature::parse(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  GroupSignature sig;
  sig.challenge = r.fixed<32>();
  sig.response = r.fixed<32>();
  sig.commitment = r.fixed<32>();
  sig.pseudonym = r.fixed<32>();
  r.expect_end();
  return sig;
}

bool RevocationLists::add_key(const Scalar& s) {
  if (std::find(priv_rl.begin(), priv_rl.end(), s) != priv_rl.end()) return false;
  priv_rl.push_back(s);
  return true;
}

bool RevocationLists::remove_key(const Scalar& s) {
  auto it = std::find(priv_rl.begin(), priv_rl.end(), s);
  if (it == priv_rl.end()) return false;
  priv_rl.erase(it);
  return true;
}

bool RevocationLists::add_signature(ByteView basename, const Point& pseudonym) {
  SignatureRevocation entry{Bytes(basename.begin(), basename.end()), pseudonym};
  if (std::find(sig_rl.begin(), sig_rl.end(), entry) != sig_rl.end()) return false;
  sig_rl.push_back(std::move(entry));
  return true;
}

bool RevocationLists::remove_signature(ByteView basename, const Point& pseudonym) {
  SignatureRevocation entry{Bytes(basename.begin(), basename.end()), pseudonym};
  auto it = std::find(sig_rl.begin(), sig_rl.end(), entry);
  if (it == sig_rl.end()) return false;
  sig_rl.erase(it);
  return true;
}

Bytes RevocationLists::serialize() const {
  ByteWriter w;
  w.put_u32(static_cast<std::uint32_t>(priv_rl.size()));
  for (const auto& s : priv_rl) w.put(s.bytes());
  w.put_u32(static_cast<std::uint32_t>(sig_rl.size()));
  for (const auto& e : sig_rl) w.put_prefixed16(e.basename).put(e.pseudonym.bytes());
  return w.take();
}

RevocationLists RevocationLists::parse(ByteView data) {
  ByteReader r(data, ErrorCode::kParseError);
  RevocationLists rl;
  const std::uint32_t n_priv = r.u32();
  for (std::uint32_t i = 0; i < n_priv; ++i) {
    auto s = Scalar::from_bytes(r.fixed<32>());
    if (!s) throw Error(ErrorCode::kParseError, "non-canonical revoked scalar");
    if (!rl.add_key(*s)) throw Error(ErrorCode::kParseError, "duplicate revoked scalar");
  }
  const std::uint32_t n_sig = r.u32();
  for (std::uint32_t i = 0; i < n_sig; ++i) {
    ByteView basename = r.prefixed16();
    auto p = Point::from_bytes(r.fixed<32>());
    if (!p) throw Error(ErrorCode::kParseError, "invalid revoked pseudonym");
    if (!rl.add_signature(basename, *p)) throw Error(ErrorCode::kParseError, "duplicate revoked signature");
  }
  r.expect_end();
  return rl;
}

std::pair<GroupPublicKey, IssuerSecret> group_setup(RandomSource& rng) {
  SigningKey issuer = sig_keygen(rng);
  GroupId id = rng.array<16>();
  return {GroupPublicKey{issuer.public_key, id}, IssuerSecret{issuer, id}};
}

MemberPrivateKey group_join(const IssuerSecret& issuer, RandomSource& rng) {
  MemberPrivateKey member;
  member.secret_scalar = Scalar::random(rng);
  member.group_id = issuer.group_id;
  Point commitment = member.commitment();
  member.membership_credential = sig_sign(issuer.signing_key, concat({issuer.group_id, commitment.bytes()}));
  return member;
}

bool verify_credential(const GroupPublicKey& gpk, const MemberPrivateKey& member) {
  if (member.group_id != gpk.group_id || member.secret_scalar.is_zero()) return false;
  return sig_verify(gpk.group_element, concat({gpk.group_id, member.commitment().bytes()}),
                    member.membership_credential);
}

Point basename_base(ByteView basename) {
  return Point::hash_to_group(concat({as_bytes(kBasenameDomain), basename}));
}

Point pseudonym_for(const Scalar& secret_scalar, ByteView basename) {
  return basename_base(basename) * secret_scalar;
}

GroupSignature gsig_sign(const MemberPrivateKey& member, ByteView message, ByteView basename,
                         const GroupPublicKey& gpk, RandomSource& rng) {
  const Point base = basename_base(basename);
  const Point pseudonym = base * member.secret_scalar;
  Scalar r = Scalar::random(rng);
  const Point commitment = base * r;
  const Scalar c = proof_challenge(gpk, basename, message, pseudonym.bytes(), commitment.bytes());
  const Scalar z = r + c * member.secret_scalar;
  r.wipe();
  return {c.bytes(), z.bytes(), commitment.bytes(), pseudonym.bytes()};
}

GroupVerifyResult gsig_verify(const GroupPublicKey& gpk, ByteView message, ByteView basename,
                              const GroupSignature& sig, const RevocationLists& rl) {
  auto pseudonym = Point::from_bytes(sig.pseudonym);
  auto commitment = Point::from_bytes(sig.commitment);
  auto c = Scalar::from_bytes(sig.challenge);
  auto z = Scalar::from_bytes(sig.response);
  if (!pseudonym || !commitment || !c || !z || c->is_zero()) return GroupVerifyResult::kBadProof;

  const Point base = basename_base(basename);
  try {
    const Scalar expected = proof_challenge(gpk, basename, message, sig.pseudonym, sig.commitment);
    if (!(expected == *c)) return GroupVerifyResult::kBadProof;
    if (z->is_zero()) return GroupVerifyResult::kBadProof;
    if (!(base * *z == *commitment + *pseudonym * *c)) return GroupVerifyResult::kBadProof;
  } catch (const Error&) {
    return GroupVerifyResult::kBadProof;
  }

  for (const Scalar& revoked : rl.priv_rl) {
    if (revoked.is_zero()) continue;
    if (base * revoked == *pseudonym) return GroupVerifyResult::kRevokedByKey;
  }
  for (const auto& entry : rl.sig_rl) {
    if (constant_time_equal(entry.basename, basename) && entry.pseudonym == *pseudonym) {
      return GroupVerifyResult::kRevokedBySignature;
    }
  }
  return GroupVerifyResult::kValid;
}

}  // namespace vsim::crypto
