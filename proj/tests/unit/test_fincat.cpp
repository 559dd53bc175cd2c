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
#include "ttw/fincat.hpp"

using namespace ttw;

namespace {

bool rejected(const MonoidalCategory& c) {
  try {
    return !validate(c).empty();
  } catch (const StructuralError&) {
    return true;
  }
}

MonoidalCategory with_compose(const MonoidalCategory& c, std::size_t entry, int value) {
  auto table = c.cat.compose_table();
  table[entry] = value;
  MonoidalCategory out = c;
  out.cat = FinCategory(c.cat.objects(), c.cat.morphisms(), c.cat.identity_table(), table);
  return out;
}

}  // namespace

TEST_CASE("gallery categories satisfy every axiom") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    CHECK(validate(c).empty());
  }
}

TEST_CASE("every single-entry corruption of a composition table is caught") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    const int m = c.num_morphisms();
    int tried = 0, caught = 0;
    for (std::size_t i = 0; i < c.cat.compose_table().size(); ++i) {
      const int old = c.cat.compose_table()[i];
      for (int v = -1; v < m; ++v) {
        if (v == old) continue;
        ++tried;
        caught += rejected(with_compose(c, i, v));
      }
    }
    CHECK(tried > 0);
    CHECK(caught == tried);
  }
}

TEST_CASE("corrupted tensor and braiding entries are caught") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    MonoidalCategory t = c;
    t.mon.tensor_mor[0] = (t.mon.tensor_mor[0] + 1) % c.num_morphisms();
    CHECK(rejected(t));
    if (c.num_objects() > 1) {
      MonoidalCategory u = c;
      u.mon.tensor_obj[0] = (u.mon.tensor_obj[0] + 1) % c.num_objects();
      CHECK(rejected(u));
    }
  }
}

TEST_CASE("monos and isos agree with brute force") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    for (int f = 0; f < c.num_morphisms(); ++f) {
      CHECK(is_mono(c.cat, f) == oracle::brute_mono(c.cat, f));
      CHECK(is_mono_generic(c.cat, f) == oracle::brute_mono(c.cat, f));
      CHECK(is_iso(c.cat, f).has_value() == oracle::brute_iso(c.cat, f));
      CHECK(is_iso_generic(c.cat, f).has_value() == oracle::brute_iso(c.cat, f));
    }
  }
}

TEST_CASE("monoid_idem: a is neither mono nor iso") {
  const auto c = gallery_category("monoid_idem");
  const int a = *c.cat.morphism_index("a");
  CHECK_FALSE(is_mono(c.cat, a));
  CHECK_FALSE(is_epi(c.cat, a));
  CHECK_FALSE(is_iso(c.cat, a).has_value());
}

TEST_CASE("thin category pullbacks and pushouts are meets and joins") {
  const auto c = gallery_category("boolean2x2");
  const auto& k = c.cat;
  auto m = [&](const char* x, const char* y) {
    return *thin_morphism(k, *k.object_index(x), *k.object_index(y));
  };
  Square sq{m("0", "a"), m("0", "b"), m("a", "1"), m("b", "1")};
  CHECK(commutes(k, sq));
  CHECK(is_pullback(k, sq));
  CHECK(is_pushout(k, sq));
  Square loose{m("0", "0"), m("0", "0"), m("0", "a"), m("0", "a")};
  CHECK_FALSE(is_pushout(k, loose));
  CHECK(initial_object(k) == k.object_index("0"));
  CHECK(terminal_object(k) == k.object_index("1"));
}

TEST_CASE("non-commuting square is an error") {
  const auto c = gallery_category("z2");
  const int e = c.id(0), g = *c.cat.morphism_index("g");
  Square sq{e, e, e, g};
  CHECK_FALSE(commutes(c.cat, sq));
  CHECK_THROWS_AS(is_pullback(c.cat, sq), NonCommutingSquare);
}

TEST_CASE("colimit of a discrete diagram in a chain is the join") {
  const auto c = gallery_category("c3");
  DiagramSpec d{{*c.cat.object_index("0"), *c.cat.object_index("m")}, {}};
  auto col = colimit(c.cat, d);
  REQUIRE(col.has_value());
  CHECK(col->apex == *c.cat.object_index("m"));
  CHECK(is_colimit(c.cat, d, *col));
}

TEST_CASE("z2 has no terminal object") {
  CHECK_FALSE(terminal_object(gallery_category("z2").cat).has_value());
}

TEST_CASE("full subcategory keeps object order") {
  const auto c = gallery_category("c3");
  auto s = full_subcategory(c.cat, {2, 0});
  CHECK(s.cat.num_objects() == 2);
  CHECK(s.cat.object_label(0) == "1");
  CHECK(s.cat.num_morphisms() == 3);
  CHECK(validate(s.cat).empty());
}

TEST_CASE("subobjects of the unit in q3") {
  const auto c = gallery_category("q3");
  const auto subs = subobjects(c.cat, c.unit());
  CHECK(subs.size() == 3);
}
