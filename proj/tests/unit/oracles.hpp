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

// Brute-force reference computations shared by the unit tests. They work on
// raw tables only and never call into the library's own search routines.

#include <vector>

#include "ttw/fincat.hpp"

namespace oracle {

inline bool brute_mono(const ttw::FinCategory& c, int f) {
  const int m = c.num_morphisms();
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      if (g == h || c.cod(g) != c.dom(f) || c.cod(h) != c.dom(f) || c.dom(g) != c.dom(h)) continue;
      if (c.compose(f, g) == c.compose(f, h)) return false;
    }
  return true;
}

inline bool brute_iso(const ttw::FinCategory& c, int f) {
  for (int g = 0; g < c.num_morphisms(); ++g)
    if (c.compose(g, f) == c.id(c.dom(f)) && c.compose(f, g) == c.id(c.cod(f))) return true;
  return false;
}

inline bool brute_factors(const ttw::FinCategory& c, int s, int t) {
  for (int g = 0; g < c.num_morphisms(); ++g)
    if (c.compose(t, g) == s) return true;
  return false;
}

/// Subunit monos into I, one per class of mutually factoring monos.
inline std::vector<int> subunit_classes(const ttw::MonoidalCategory& c) {
  std::vector<int> reps;
  for (int s = 0; s < c.num_morphisms(); ++s) {
    if (c.cod(s) != c.unit() || !brute_mono(c.cat, s)) continue;
    if (!brute_iso(c.cat, c.right_whisker(s, c.dom(s)))) continue;
    bool fresh = true;
    for (int r : reps)
      if (brute_factors(c.cat, s, r) && brute_factors(c.cat, r, s)) fresh = false;
    if (fresh) reps.push_back(s);
  }
  return reps;
}

}  // namespace oracle
