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

#include "vsim/crypto/group.hpp"

#include "internal/sodium.hpp"
#include "vsim/crypto/hash.hpp"

namespace vsim::crypto {
namespace {

constexpr std::string_view kHashToGroupDomain = "vsim-h2g-v1";
constexpr std::string_view kHashToScalarDomain = "vsim-h2s-v1";

ByteArray<32> reduce64(const ByteArray<64>& wide) {
  ByteArray<32> out;
  crypto_core_ristretto255_scalar_reduce(out.data(), wide.data());
  return out;
}

}  // namespace

Scalar Scalar::random(RandomSource& rng) {
  detail::ensure_sodium();
  for (;;) {
    ByteArray<64> wide = rng.array<64>();
    Scalar s(reduce64(wide));
    secure_wipe(wide);
    if (!s.is_zero()) return s;
  }
}

Scalar Scalar::from_hash(ByteView data) {
  detail::ensure_sodium();
  return Scalar(reduce64(hash512(concat({as_bytes(kHashToScalarDomain), data}))));
}

std::optional<Scalar> Scalar::from_bytes(const ByteArray<32>& bytes) {
  detail::ensure_sodium();
  ByteArray<64> wide{};
  std::copy(bytes.begin(), bytes.end(), wide.begin());
  if (reduce64(wide) != bytes) return std::nullopt;
  return Scalar(bytes);
}

Scalar Scalar::from_u64(std::uint64_t v) {
  ByteArray<32> b{};
  for (std::size_t i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return Scalar(b);
}

bool Scalar::is_zero() const {
  detail::ensure_sodium();
  return sodium_is_zero(bytes_.data(), bytes_.size()) == 1;
}

Scalar Scalar::inverse() const {
  detail::ensure_sodium();
  ByteArray<32> out;
  if (crypto_core_ristretto255_scalar_invert(out.data(), bytes_.data()) != 0) {
    throw Error(ErrorCode::kInvalidScalar, "zero has no inverse");
  }
  return Scalar(out);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  detail::ensure_sodium();
  ByteArray<32> out;
  crypto_core_ristretto255_scalar_add(out.data(), a.bytes_.data(), b.bytes_.data());
  return Scalar(out);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  detail::ensure_sodium();
  ByteArray<32> out;
  crypto_core_ristretto255_scalar_sub(out.data(), a.bytes_.data(), b.bytes_.data());
  return Scalar(out);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  detail::ensure_sodium();
  ByteArray<32> out;
  crypto_core_ristretto255_scalar_mul(out.data(), a.bytes_.data(), b.bytes_.data());
  return Scalar(out);
}

bool operator==(const Scalar& a, const Scalar& b) { return constant_time_equal(a.bytes_, b.bytes_); }

Point Point::generator() { return base_mul(Scalar::from_u64(1)); }

std::optional<Point> Point::from_bytes(const ByteArray<32>& bytes) {
  detail::ensure_sodium();
  // All-zero is the (only) identity encoding.
  if (sodium_is_zero(bytes.data(), bytes.size()) == 1) return std::nullopt;
  if (crypto_core_ristretto255_is_valid_point(bytes.data()) != 1) return std::nullopt;
  return Point(bytes);
}

std::optional<Point> Point::from_bytes(ByteView bytes) {
  if (bytes.size() != 32) return std::nullopt;
  ByteArray<32> b;
  std::copy(bytes.begin(), bytes.end(), b.begin());
  return from_bytes(b);
}

Point Point::parse(ByteView bytes) {
  auto p = from_bytes(bytes);
  if (!p) throw Error(ErrorCode::kInvalidPoint);
  return *p;
}

Point Point::hash_to_group(ByteView data) {
  detail::ensure_sodium();
  ByteArray<64> wide = hash512(concat({as_bytes(kHashToGroupDomain), data}));
  ByteArray<32> out;
  crypto_core_ristretto255_from_hash(out.data(), wide.data());
  return Point(out);
}

Point Point::base_mul(const Scalar& s) {
  detail::ensure_sodium();
  ByteArray<32> out;
  if (crypto_scalarmult_ristretto255_base(out.data(), s.bytes().data()) != 0) {
    throw Error(ErrorCode::kInvalidScalar, "zero scalar");
  }
  return Point(out);
}

Point Point::operator*(const Scalar& s) const {
  detail::ensure_sodium();
  ByteArray<32> out;
  if (crypto_scalarmult_ristretto255(out.data(), s.bytes().data(), bytes_.data()) != 0) {
    throw Error(ErrorCode::kInvalidPoint, "product is the identity");
  }
  return Point(out);
}

Point operator+(const Point& a, const Point& b) {
  detail::ensure_sodium();
  ByteArray<32> out;
  crypto_core_ristretto255_add(out.data(), a.bytes_.data(), b.bytes_.data());
  if (sodium_is_zero(out.data(), out.size()) == 1) throw Error(ErrorCode::kInvalidPoint, "sum is the identity");
  return Point(out);
}

}  // namespace vsim::crypto
