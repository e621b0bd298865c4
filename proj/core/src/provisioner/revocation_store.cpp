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

#include "vsim/provisioner/revocation_store.hpp"

#include <sstream>
#include <system_error>

#include "vsim/common/file_io.hpp"

namespace vsim::provisioner {

std::string serialize_revocations(const crypto::RevocationLists& rl) {
  std::ostringstream out;
  out << "[priv]\n";
  for (const crypto::Scalar& s : rl.priv_rl) out << to_hex(s.bytes()) << '\n';
  out << "[sig]\n";
  for (const crypto::SignatureRevocation& r : rl.sig_rl) {
    out << to_hex(r.basename) << '\t' << to_hex(r.pseudonym.bytes()) << '\n';
  }
  return out.str();
}

crypto::RevocationLists parse_revocations(std::string_view text) {
  enum class Section { kNone, kPriv, kSig } section = Section::kNone;
  crypto::RevocationLists rl;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "revocation line " + std::to_string(line_no);
    if (line == "[priv]") {
      section = Section::kPriv;
      continue;
    }
    if (line == "[sig]") {
      section = Section::kSig;
      continue;
    }
    try {
      if (section == Section::kPriv) {
        std::optional<crypto::Scalar> s = crypto::Scalar::from_bytes(array_from_hex<32>(line));
        if (!s) throw Error(ErrorCode::kConfigError, "non-canonical scalar");
        rl.add_key(*s);
      } else if (section == Section::kSig) {
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) throw Error(ErrorCode::kConfigError, "expected basename<TAB>pseudonym");
        Bytes basename = from_hex(line.substr(0, tab));
        std::optional<crypto::Point> p = crypto::Point::from_bytes(array_from_hex<32>(line.substr(tab + 1)));
        if (!p) throw Error(ErrorCode::kConfigError, "invalid pseudonym");
        rl.add_signature(basename, *p);
      } else {
        throw Error(ErrorCode::kConfigError, "entry outside a section");
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfigError, where + ": " + e.what());
    }
  }
  return rl;
}

RevocationStore::RevocationStore(std::filesystem::path path) : path_(std::move(path)) {}

crypto::RevocationLists RevocationStore::load() const {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return {};
  Bytes raw = read_file(path_);
  return parse_revocations(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
}

template <typename Fn>
bool RevocationStore::update(Fn&& fn) {
  FileLock lock(path_);
  crypto::RevocationLists rl = load();
  if (!fn(rl)) return false;
  write_file_atomic(path_, as_bytes(serialize_revocations(rl)));
  return true;
}

bool RevocationStore::revoke_key(const crypto::Scalar& secret) {
  return update([&](crypto::RevocationLists& rl) { return rl.add_key(secret); });
}

bool RevocationStore::unrevoke_key(const crypto::Scalar& secret) {
  return update([&](crypto::RevocationLists& rl) { return rl.remove_key(secret); });
}

bool RevocationStore::revoke_signature(ByteView basename, const crypto::Point& pseudonym) {
  return update([&](crypto::RevocationLists& rl) { return rl.add_signature(basename, pseudonym); });
}

bool RevocationStore::unrevoke_signature(ByteView basename, const crypto::Point& pseudonym) {
  return update([&](crypto::RevocationLists& rl) { return rl.remove_signature(basename, pseudonym); });
}

}  // namespace vsim::provisioner
