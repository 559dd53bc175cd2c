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

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ttw {

/// One failed law with the concrete indices that break it.
struct LawViolation {
  std::string law;
  std::vector<int> witness;

  std::string to_string() const;
};

using ViolationList = std::vector<LawViolation>;

/// Commutative square
///
///     tl --top--> tr
///      |           |
///    left        right
///      v           v
///     bl -bottom-> br
struct Square {
  int top = -1;
  int left = -1;
  int right = -1;
  int bottom = -1;

  bool operator==(const Square&) const = default;
};

/// Verdict of a category property check. When `holds` is false, `witness`
/// and (for square-shaped properties) `square` can be replayed through the
/// fincat checkers.
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::string detail;
  std::vector<int> witness;
  std::optional<Square> square;
  /// False when an independent route computing the same verdict disagreed.
  bool cross_check_agrees = true;

  static PropertyReport ok(std::string name) {
    PropertyReport r;
    r.property = std::move(name);
    return r;
  }
  PropertyReport& fail(std::string why, std::vector<int> w = {}) {
    holds = false;
    detail = std::move(why);
    witness = std::move(w);
    return *this;
  }
};

}  // namespace ttw
