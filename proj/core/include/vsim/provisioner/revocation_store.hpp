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

#include <filesystem>

#include "vsim/crypto/group_signature.hpp"

namespace vsim::provisioner {

// Revocation file:
//   [priv]
//   <secret scalar hex>
//   [sig]
//   <basename hex>\t<pseudonym hex>
std::string serialize_revocations(const crypto::RevocationLists& rl);
/// Throws kConfigError.
crypto::RevocationLists parse_revocations(std::string_view text);

class RevocationStore {
 public:
  explicit RevocationStore(std::filesystem::path path);

  /// Current lists; a missing file reads as empty. Throws kIoError, kConfigError.
  crypto::RevocationLists load() const;

  /// Each returns true if the file changed.
  bool revoke_key(const crypto::Scalar& secret);
  bool unrevoke_key(const crypto::Scalar& secret);
  bool revoke_signature(ByteView basename, const crypto::Point& pseudonym);
  bool unrevoke_signature(ByteView basename, const crypto::Point& pseudonym);

  const std::filesystem::path& path() const { return path_; }

 private:
  template <typename Fn>
  bool update(Fn&& fn);

  std::filesystem::path path_;
};

}  // namespace vsim::provisioner
