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

#include <optional>

#include "vsim/common/bytes.hpp"
#include "vsim/common/random.hpp"

namespace vsim::crypto {

/// Scalar modulo the ristretto255 group order, little-endian canonical.
class Scalar {
 public:
  Scalar() : bytes_{} {}

  static Scalar random(RandomSource& rng);
  /// Reduces SHA-512(data) modulo the group order.
  static Scalar from_hash(ByteView data);
  /// Rejects non-canonical encodings.
  static std::optional<Scalar> from_bytes(const ByteArray<32>& bytes);
  static Scalar from_u64(std::uint64_t v);

  const ByteArray<32>& bytes() const { return bytes_; }
  bool is_zero() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  void wipe() { secure_wipe(bytes_); }

 private:
  explicit Scalar(const ByteArray<32>& b) : bytes_(b) {}
  ByteArray<32> bytes_;
};

/// Non-identity element of the ristretto255 prime-order group.
class Point {
 public:
  static Point generator();
  /// Rejects invalid encodings and the identity.
  static std::optional<Point> from_bytes(const ByteArray<32>& bytes);
  static std::optional<Point> from_bytes(ByteView bytes);
  /// Throws kInvalidPoint on an invalid encoding.
  static Point parse(ByteView bytes);
  /// Elligator map of SHA-512(data); discrete log to the generator unknown.
  static Point hash_to_group(ByteView data);
  /// generator * s; throws kInvalidScalar if s is zero.
  static Point base_mul(const Scalar& s);

  const ByteArray<32>& bytes() const { return bytes_; }

  /// Throws kInvalidPoint if the product would be the identity.
  Point operator*(const Scalar& s) const;
  /// Throws kInvalidPoint if the sum would be the identity.
  friend Point operator+(const Point& a, const Point& b);
  friend bool operator==(const Point& a, const Point& b) { return a.bytes_ == b.bytes_; }

 private:
  explicit Point(const ByteArray<32>& b) : bytes_(b) {}
  ByteArray<32> bytes_;
};

}  // namespace vsim::crypto
