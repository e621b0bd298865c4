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

#include "vsim/tee/sealed_blob.hpp"

#include "vsim/common/file_io.hpp"

namespace vsim::tee {

Bytes SealedBlob::authenticated_bytes() const {
  ByteWriter w;
  w.put(kMagic).put_u8(version).put(iv).put(ciphertext);
  return w.take();
}

Bytes SealedBlob::serialize() const {
  Bytes out = authenticated_bytes();
  out.insert(out.end(), mac.begin(), mac.end());
  return out;
}

SealedBlob SealedBlob::parse(ByteView data) {
  if (data.size() < 4 || !std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
    throw Error(ErrorCode::kBadHeader, "missing VSIM magic");
  }
  if (data.size() < 5) throw Error(ErrorCode::kBadHeader, "truncated header");
  if (data[4] != kVersion) {
    throw Error(ErrorCode::kVersionUnsupported, "sealed blob version " + std::to_string(data[4]));
  }
  if (data.size() < kMinSize) throw Error(ErrorCode::kBadHeader, "truncated blob");
  const std::size_t ct_len = data.size() - kHeaderSize - 16;
  if (ct_len % crypto::kAesBlock != 0) throw Error(ErrorCode::kBadHeader, "ciphertext not block aligned");

  ByteReader r(data, ErrorCode::kBadHeader);
  r.take(4);
  SealedBlob blob;
  blob.version = r.u8();
  blob.iv = r.fixed<16>();
  ByteView ct = r.take(ct_len);
  blob.ciphertext.assign(ct.begin(), ct.end());
  blob.mac = r.fixed<16>();
  r.expect_end();
  return blob;
}

void store_blob(const std::filesystem::path& path, const SealedBlob& blob) {
  write_file_atomic(path, blob.serialize());
}

SealedBlob load_blob(const std::filesystem::path& path) { return SealedBlob::parse(read_file(path)); }

}  // namespace vsim::tee
