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

#include "vsim/attestation/measurement.hpp"

namespace vsim::attest {

Measurement measure_binary(ByteView image) {
  if (image.empty()) throw Error(ErrorCode::kEmptyImage);
  return {crypto::hash(image)};
}

}  // namespace vsim::attest
