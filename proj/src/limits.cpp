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

#include "ttw/limits.hpp"

#include <cstdlib>
#include <map>

#include "ttw/errors.hpp"

namespace ttw {
namespace {

Limits& current() {
  static Limits l = limits_from_environment(Limits{});
  return l;
}

long long* field(Limits& l, const std::string& name) {
  const std::map<std::string, long long Limits::*> table = {
      {"objects", &Limits::max_objects},
      {"morphisms", &Limits::max_morphisms},
      {"isub", &Limits::max_isub},
      {"ideal_objects", &Limits::max_ideal_objects},
      {"presheaf_values", &Limits::max_presheaf_values},
      {"sieves", &Limits::max_sieves},
      {"downsets", &Limits::max_downsets},
      {"cocones", &Limits::max_cocones},
      {"broad_objects", &Limits::max_broad_objects},
      {"spans", &Limits::max_spans},
  };
  std::string key = name;
  if (key.rfind("max_", 0) == 0) key = key.substr(4);
  auto it = table.find(key);
  if (it == table.end()) return nullptr;
  return &(l.*(it->second));
}

}  // namespace

const Limits& limits() { return current(); }

void set_limits(const Limits& l) { current() = l; }

Limits limits_from_environment(Limits base) {
  auto read = [](const char* var, long long& out) {
    if (const char* v = std::getenv(var)) {
      char* end = nullptr;
      long long x = std::strtoll(v, &end, 10);
      if (end != v && *end == '\0' && x > 0) out = x;
    }
  };
  read("TTW_MAX_OBJECTS", base.max_objects);
  read("TTW_MAX_MORPHISMS", base.max_morphisms);
  return base;
}

bool set_limit_by_name(Limits& l, const std::string& name, long long value) {
  long long* f = field(l, name);
  if (f == nullptr) return false;
  *f = value;
  return true;
}

void check_cap(const char* name, long long value, long long limit) {
  if (value > limit) throw CapExceeded(name, value, limit);
}

}  // namespace ttw
