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

#include <stdexcept>
#include <string>

namespace ttw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table is malformed: missing entry, index out of range, wrong size.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that does not meet its precondition
/// (category not firm, monoid not commutative, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonCommutingSquare : public Error {
 public:
  using Error::Error;
};

/// A subunit, morphism, object or example name that does not resolve.
class UnknownName : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, long long value, long long limit)
      : Error("cap '" + cap + "' exceeded: " + std::to_string(value) + " > " +
              std::to_string(limit)),
        cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace ttw
