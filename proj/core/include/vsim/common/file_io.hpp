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

#include "vsim/common/bytes.hpp"

namespace vsim {

Bytes read_file(const std::filesystem::path& path);

/// Writes `data` to a uniquely named sibling temp file and fsyncs it.
/// Returns the temp path; nothing at `path` changes until commit_staged().
std::filesystem::path stage_file(const std::filesystem::path& path, ByteView data);

/// Atomically replaces `path` with a previously staged file.
void commit_staged(const std::filesystem::path& staged, const std::filesystem::path& path);

/// stage_file + commit_staged.
void write_file_atomic(const std::filesystem::path& path, ByteView data);

/// Advisory inter-process lock held on `<path>.lock` for the object's life.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path);
  ~FileLock();
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace vsim
