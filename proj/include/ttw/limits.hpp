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

#include <string>

namespace ttw {

/// Engineering caps on brute-force enumeration. All of them are sizes, never
/// semantic choices.
struct Limits {
  long long max_objects = 64;
  long long max_morphisms = 4096;
  long long max_isub = 12;            // 2^|ISub| subset loops
  long long max_ideal_objects = 16;   // 2^|obj| tensor-ideal search
  long long max_presheaf_values = 6;  // per object, Day tensor inputs
  long long max_sieves = 4096;
  long long max_downsets = 65536;
  long long max_cocones = 2000000;
  long long max_broad_objects = 256;
  long long max_spans = 200000;       // right-fraction spans
};

/// Process-wide limits. Set once at startup (the CLI does this from flags and
/// environment); library calls only read them.
const Limits& limits();
void set_limits(const Limits& l);

/// Applies TTW_MAX_OBJECTS / TTW_MAX_MORPHISMS if present.
Limits limits_from_environment(Limits base);

/// Sets a cap by name ("max_objects", "objects", ...). Returns false for an
/// unknown name.
bool set_limit_by_name(Limits& l, const std::string& name, long long value);

void check_cap(const char* name, long long value, long long limit);

}  // namespace ttw
