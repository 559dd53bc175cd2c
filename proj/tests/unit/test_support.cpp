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

#include <doctest.h>

#include "oracles.hpp"
#include "ttw/document.hpp"
#include "ttw/errors.hpp"
#include "ttw/support.hpp"

using namespace ttw;

namespace {

Mask canonical_brute(const MonoidalCategory& c, const SubunitSemilattice& l, int f) {
  Mask out = 0;
  for (int s = 0; s < l.size(); ++s) {
    bool below_all = true;
    for (int t = 0; t < l.size(); ++t) {
      const int tb = c.right_whisker(l.elements[t].mono, c.cod(f));
      if (oracle::brute_factors(c.cat, f, tb) && !oracle::brute_factors(c.cat, l.elements[s].mono, l.elements[t].mono))
        below_all = false;
    }
    if (below_all) out |= mask_bit(s);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical support matches its definition") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    const auto l = subunit_semilattice(c);
    for (int f = 0; f < c.num_morphisms(); ++f) CHECK(canonical_support(c, l, f).canonical == canonical_brute(c, l, f));
  }
}

TEST_CASE("q3: support is not monoidal") {
  const auto c = gallery_category("q3");
  const auto l = subunit_semilattice(c);
  const int eps = *c.cat.morphism_index("eps->1");
  const int sq = c.tensor_mor(eps, eps);
  CHECK(c.cat.morphism(sq).label == "0->1");
  const auto a = canonical_support(c, l, eps);
  const auto b = canonical_support(c, l, sq);
  REQUIRE(a.supp.has_value());
  REQUIRE(b.supp.has_value());
  CHECK(l.lattice.poset.label(*a.supp) == "1");
  CHECK(l.lattice.poset.label(*b.supp) == "0");
  CHECK(l.meet(*a.supp, *a.supp) != *b.supp);
  CHECK(support_not_monoidal(c).has_value());
}

TEST_CASE("support is monoidal on frames") {
  for (const char* name : {"b2", "c3", "boolean2x2"}) {
    CAPTURE(name);
    CHECK_FALSE(support_not_monoidal(gallery_category(name)).has_value());
  }
}

TEST_CASE("support laws for the canonical datum") {
  for (const char* name : {"b2", "c3", "q3", "boolean2x2", "m3", "ideals_10"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    const auto l = subunit_semilattice(c);
    CHECK(verify_support_laws(c, l, canonical_datum(c, l)).holds);
  }
}

TEST_CASE("support laws for the identity into ISub") {
  for (const char* name : {"b2", "c3", "q3", "boolean2x2"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    const auto l = subunit_semilattice(c);
    std::vector<int> h(l.size());
    for (int i = 0; i < l.size(); ++i) h[i] = i;
    const auto d = support_datum_from_monotone(c, l, l.lattice.poset, h);
    CHECK(verify_support_laws(c, l, d).holds);
    for (int f = 0; f < c.num_morphisms(); ++f) CHECK(d.on_morphisms[f] == *canonical_support(c, l, f).supp);
  }
}

TEST_CASE("a non-monotone assignment is rejected") {
  const auto c = gallery_category("c3");
  const auto l = subunit_semilattice(c);
  std::vector<int> h(l.size());
  for (int i = 0; i < l.size(); ++i) h[i] = l.size() - 1 - i;
  CHECK_THROWS_AS(support_datum_from_monotone(c, l, l.lattice.poset, h), PreconditionError);
}

TEST_CASE("objects: support of the unique map to the unit") {
  const auto c = gallery_category("c3");
  const auto l = subunit_semilattice(c);
  for (int a = 0; a < c.num_objects(); ++a) {
    const int f = c.cat.hom(a, c.unit()).front();
    CHECK(l.lattice.poset.label(*canonical_support(c, l, f).supp) == c.cat.object_label(a));
  }
}
