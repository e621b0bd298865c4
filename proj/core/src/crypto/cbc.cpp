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

#include "vsim/crypto/cbc.hpp"

#include <openssl/evp.h>

#include <memory>

namespace vsim::crypto {
namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

void check_key(ByteView key) {
  if (key.size() != 32) {
    throw Error(ErrorCode::kKeyLengthError, "AES-256 needs a 32-byte key, got " + std::to_string(key.size()));
  }
}

// Raw CBC over block-aligned input (no OpenSSL padding).
Bytes cbc_raw(ByteView key, const CbcIv& iv, ByteView data, bool encrypt) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw Error(ErrorCode::kDecryptFailure, "EVP_CIPHER_CTX_new");
  if (EVP_CipherInit_ex(ctx.get(), EVP_aes_256_cbc(), nullptr, key.data(), iv.data(), encrypt ? 1 : 0) != 1) {
    throw Error(ErrorCode::kDecryptFailure, "EVP_CipherInit_ex");
  }
  EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
  Bytes out(data.size() + kAesBlock);
  int len = 0;
  int total = 0;
  if (EVP_CipherUpdate(ctx.get(), out.data(), &len, data.data(), static_cast<int>(data.size())) != 1) {
    throw Error(ErrorCode::kDecryptFailure, "EVP_CipherUpdate");
  }
  total = len;
  if (EVP_CipherFinal_ex(ctx.get(), out.data() + total, &len) != 1) {
    throw Error(ErrorCode::kDecryptFailure, "EVP_CipherFinal_ex");
  }
  total += len;
  out.resize(static_cast<std::size_t>(total));
  return out;
}

}  // namespace

Bytes cbc_encrypt_256(ByteView key, const CbcIv& iv, ByteView plaintext) {
  check_key(key);
  const std::size_t pad = kAesBlock - (plaintext.size() % kAesBlock);
  Bytes padded(plaintext.begin(), plaintext.end());
  padded.insert(padded.end(), pad, static_cast<std::uint8_t>(pad));
  Bytes ct = cbc_raw(key, iv, padded, true);
  secure_wipe(padded);
  return ct;
}

Bytes cbc_decrypt_256(ByteView key, const CbcIv& iv, ByteView ciphertext) {
  check_key(key);
  if (ciphertext.empty() || ciphertext.size() % kAesBlock != 0) {
    throw Error(ErrorCode::kDecryptFailure, "ciphertext is not a positive block multiple");
  }
  Bytes pt = cbc_raw(key, iv, ciphertext, false);
  const std::uint8_t pad = pt.back();
  if (pad == 0 || pad > kAesBlock) throw Error(ErrorCode::kDecryptFailure, "bad padding");
  for (std::size_t i = pt.size() - pad; i < pt.size(); ++i) {
    if (pt[i] != pad) throw Error(ErrorCode::kDecryptFailure, "bad padding");
  }
  pt.resize(pt.size() - pad);
  return pt;
}

CbcMac cbc_mac_256(ByteView key, ByteView message) {
  check_key(key);
  Bytes data;
  data.reserve(8 + message.size() + kAesBlock);
  const std::uint64_t len = message.size();
  for (int shift = 56; shift >= 0; shift -= 8) data.push_back(static_cast<std::uint8_t>(len >> shift));
  data.insert(data.end(), message.begin(), message.end());
  if (data.size() % kAesBlock != 0) data.resize(data.size() + (kAesBlock - data.size() % kAesBlock), 0);

  Bytes ct = cbc_raw(key, CbcIv{}, data, true);
  CbcMac mac;
  std::copy(ct.end() - kAesBlock, ct.end(), mac.begin());
  secure_wipe(data);
  return mac;
}

}  // namespace vsim::crypto
