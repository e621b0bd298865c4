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
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vsim/common/bytes.hpp"

namespace vsim {

/// `key = value` text files shared by device, provisioner, profile and
/// network-entry configs. `#` starts a comment line; blank lines are
/// ignored; binary values are hex. Keys are case-sensitive and unique.
class KeyValueFile {
 public:
  KeyValueFile() = default;

  static KeyValueFile parse(std::string_view text);
  static KeyValueFile load(const std::filesystem::path& path);

  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  /// Throws Error(kConfigError) naming the missing key.
  const std::string& get(const std::string& key) const;
  std::optional<std::string> find(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  Bytes get_hex(const std::string& key) const;

  template <std::size_t N>
  ByteArray<N> get_hex_array(const std::string& key) const {
    Bytes raw = get_hex(key);
    if (raw.size() != N) {
      throw Error(ErrorCode::kConfigError,
                  key + ": expected " + std::to_string(N) + " bytes");
    }
    ByteArray<N> out;
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
  }

  void set(const std::string& key, std::string value);
  void set_hex(const std::string& key, ByteView value) { set(key, to_hex(value)); }

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace vsim
