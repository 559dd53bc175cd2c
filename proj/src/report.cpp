// Copyright 2026 The ttw Authors
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

#include "ttw/report.hpp"

namespace ttw {

std::string LawViolation::to_string() const {
  std::string out = law;
  if (!witness.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(witness[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace ttw
