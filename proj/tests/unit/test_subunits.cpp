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

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ttw/document.hpp"
#include "ttw/errors.hpp"
#include "ttw/subunits.hpp"

using namespace ttw;

TEST_CASE("subunit count matches brute-force enumeration") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    CHECK(enumerate_subunits(c).size() == oracle::subunit_classes(c).size());
  }
}

TEST_CASE("quantale categories: subunits are idempotents below the unit") {
  for (const auto& e : gallery()) {
    if (e.document.kind != "quantale" && e.document.kind != "semilattice") continue;
    CAPTURE(e.name);
    const auto c = build(e.document);
    const Quantale q = e.document.kind == "quantale" ? document_quantale(e.document)
                                                     : Quantale::from_frame(document_poset(e.document));
    std::set<std::string> expected;
    for (int x = 0; x < q.size(); ++x)
      if (q.mul(x, x) == x && q.poset.leq(x, q.unit)) expected.insert(q.poset.label(x));
    std::set<std::string> got;
    for (const auto& s : enumerate_subunits(c)) got.insert(c.cat.object_label(s.domain));
    CHECK(got == expected);
  }
}

TEST_CASE("the two subunit orders agree on every pair") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    const auto subs = enumerate_subunits(c);
    for (const auto& s : subs)
      for (const auto& t : subs) {
        const auto v = subunit_leq_both(c, s, t);
        CHECK(v.by_factoring == v.by_invertibility);
        CHECK(v.by_factoring == oracle::brute_factors(c.cat, s.mono, t.mono));
      }
  }
}

TEST_CASE("subunit semilattice laws") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto l = subunit_semilattice(build(e.document));
    CHECK(l.lattice.check().empty());
    const int n = l.size();
    for (int a = 0; a < n; ++a) {
      CHECK(l.meet(a, a) == a);
      CHECK(l.meet(a, l.top()) == a);
      for (int b = 0; b < n; ++b) {
        CHECK(l.meet(a, b) == l.meet(b, a));
        for (int x = 0; x < n; ++x) CHECK(l.meet(l.meet(a, b), x) == l.meet(a, l.meet(b, x)));
      }
    }
  }
}

TEST_CASE("semilattice input comes back unchanged") {
  for (const auto& e : gallery()) {
    if (e.document.kind != "semilattice") continue;
    CAPTURE(e.name);
    const auto input = document_semilattice(e.document);
    const auto l = subunit_semilattice(build(e.document));
    CHECK(l.lattice.poset == input.poset);
    CHECK(l.lattice.meet_table == input.meet_table);
  }
}

TEST_CASE("ISub of q3 is the chain 0 < 1") {
  const auto l = subunit_semilattice(gallery_category("q3"));
  CHECK(l.lattice.poset == FinPoset::chain({"0", "1"}));
}

TEST_CASE("ISub of the ideal quantale of {1, 0}") {
  const auto l = subunit_semilattice(gallery_category("ideals_10"));
  CHECK(l.size() == 3);
  CHECK(is_frame(l.lattice.poset));
}

TEST_CASE("z2 has only the unit as a subunit") {
  const auto c = gallery_category("z2");
  const auto subs = enumerate_subunits(c);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].mono == c.id(c.unit()));
}

TEST_CASE("split epic mode on monoid_idem") {
  const auto c = gallery_category("monoid_idem");
  CHECK(enumerate_subunits(c).size() == 1);
  CHECK(enumerate_subunits(c, {true}).size() == 1);
}

TEST_CASE("locale-based hierarchy on the gallery") {
  for (const char* name : {"b2", "c3", "q3", "boolean2x2", "ideals_10"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    CHECK(is_firm(c).holds);
    CHECK(is_stiff(c).holds);
    const auto r = is_locale_based(c);
    CHECK(r.holds);
    CHECK(r.cross_check_agrees);
  }
}

TEST_CASE("m3 fails universal finite joins with a replayable square") {
  const auto c = gallery_category("m3");
  const auto r = has_universal_finite_joins(c);
  CHECK_FALSE(r.holds);
  REQUIRE(r.square.has_value());
  CHECK(commutes(c.cat, *r.square));
  CHECK_FALSE(is_pushout(c.cat, *r.square));
  CHECK(has_universal_directed_joins(c).holds);
  CHECK_FALSE(is_locale_based(c).holds);
}

TEST_CASE("characterisation agrees with locale-based") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    const auto a = check_characterisation(c);
    CHECK(a.holds == is_locale_based(c).holds);
    CHECK(a.cross_check_agrees);
  }
}

TEST_CASE("stiffness square is a pullback in boolean2x2") {
  const auto c = gallery_category("boolean2x2");
  const auto l = subunit_semilattice(c);
  for (int x = 0; x < c.num_objects(); ++x) {
    const auto sq = stiffness_square(c, l.elements[1], l.elements[2], x);
    CHECK(is_pullback(c.cat, sq));
  }
}

TEST_CASE("idempotent families are meet-closed") {
  const auto l = subunit_semilattice(gallery_category("c3"));
  for (Mask u : idempotent_families(l))
    for (int a : mask_elements(u))
      for (int b : mask_elements(u)) CHECK(mask_has(u, l.meet(a, b)));
}
