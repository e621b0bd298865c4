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

#include "vsim/common/key_value.hpp"

#include <charconv>
#include <sstream>

#include "vsim/common/file_io.hpp"

namespace vsim {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueFile KeyValueFile::parse(std::string_view text) {
  KeyValueFile kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfigError, "line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw Error(ErrorCode::kConfigError, "line " + std::to_string(line_no) + ": empty key");
    if (!kv.entries_.emplace(key, value).second) {
      throw Error(ErrorCode::kConfigError, "duplicate key " + key);
    }
  }
  return kv;
}

KeyValueFile KeyValueFile::load(const std::filesystem::path& path) {
  Bytes raw;
  try {
    raw = read_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  return parse(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
}

std::string KeyValueFile::serialize() const {
  std::ostringstream out;
  for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
  return out.str();
}

void KeyValueFile::save(const std::filesystem::path& path) const {
  write_file_atomic(path, as_bytes(serialize()));
}

const std::string& KeyValueFile::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw Error(ErrorCode::kConfigError, "missing key " + key);
  return it->second;
}

std::optional<std::string> KeyValueFile::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t KeyValueFile::get_u64(const std::string& key) const {
  const std::string& v = get(key);
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw Error(ErrorCode::kConfigError, key + ": not an unsigned integer");
  }
  return out;
}

Bytes KeyValueFile::get_hex(const std::string& key) const {
  try {
    return from_hex(get(key));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    throw Error(ErrorCode::kConfigError, key + ": invalid hex");
  }
}

void KeyValueFile::set(const std::string& key, std::string value) {
  entries_[key] = std::move(value);
}

}  // namespace vsim
