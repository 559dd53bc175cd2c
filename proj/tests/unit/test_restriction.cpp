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
#include "ttw/restriction.hpp"

using namespace ttw;

TEST_CASE("restricts_to matches a factorisation search") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    for (const auto& s : enumerate_subunits(c))
      for (int f = 0; f < c.num_morphisms(); ++f) {
        const int sb = c.right_whisker(s.mono, c.cod(f));
        CHECK(restricts_to(c, f, s).has_value() == oracle::brute_factors(c.cat, f, sb));
      }
  }
}

TEST_CASE("the four object conditions coincide") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    for (const auto& s : enumerate_subunits(c))
      for (int a = 0; a < c.num_objects(); ++a) {
        const auto r = object_restriction_equivalences(c, a, s);
        CHECK(r.a_tensor_invertible == oracle::brute_iso(c.cat, c.right_whisker(s.mono, a)));
        CHECK(r.a_tensor_invertible == r.b_iso_to_self);
        CHECK(r.a_tensor_invertible == r.c_iso_to_some);
        CHECK(r.a_tensor_invertible == r.d_identity_restricts);
      }
  }
}

TEST_CASE("restriction category is coreflective and monoidal") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    for (const auto& s : enumerate_subunits(c)) {
      const auto r = restriction_category(c, s);
      CHECK(r.adjunction.holds);
      CHECK(r.monoidal.holds);
      for (int a = 0; a < c.num_objects(); ++a)
        CHECK((r.sub.object_index[a] >= 0) == oracle::brute_iso(c.cat, c.right_whisker(s.mono, a)));
      CHECK(r.inclusion_unit_invertible == oracle::brute_iso(c.cat, s.mono));
    }
  }
}

TEST_CASE("q3 restricted to the bottom subunit has only the object 0") {
  const auto c = gallery_category("q3");
  const auto l = subunit_semilattice(c);
  const auto r = restriction_category(c, l.elements[*l.index_of_label("0")]);
  REQUIRE(r.sub.objects.size() == 1);
  CHECK(c.cat.object_label(r.sub.objects[0]) == "0");
}

TEST_CASE("graded monad laws") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    CHECK(verify_graded_monad(build(e.document)).holds);
  }
}

TEST_CASE("restriction comonads satisfy all laws and round-trip") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    for (const auto& s : enumerate_subunits(c)) {
      const auto f = restriction_comonad(c, s);
      CHECK(check_comonad(c, f).empty());
      const auto back = extract_subunit(c, f);
      CHECK(oracle::brute_factors(c.cat, back.mono, s.mono));
      CHECK(oracle::brute_factors(c.cat, s.mono, back.mono));
    }
    CHECK(verify_comonad_bijection(c).holds);
  }
}

TEST_CASE("corrupted comonads are rejected") {
  const auto c = gallery_category("c3");
  const auto l = subunit_semilattice(c);
  const auto f = restriction_comonad(c, l.elements[*l.index_of_label("m")]);
  for (std::size_t i = 0; i < f.epsilon.size(); ++i) {
    auto g = f;
    g.epsilon[i] = (f.epsilon[i] + 1) % c.num_morphisms();
    CHECK_FALSE(check_comonad(c, g).empty());
    CHECK_THROWS_AS(extract_subunit(c, g), PreconditionError);
  }
}

TEST_CASE("tensor ideals correspond to subunits") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    const auto ideals = tensor_ideals(c);
    CHECK(ideals.size() == enumerate_subunits(c).size());
    for (const auto& d : ideals) CHECK(is_tensor_ideal(c, d));
    CHECK(verify_ideal_bijection(c).holds);
  }
}

TEST_CASE("restriction is compatible with composition and tensor") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    CHECK(restriction_composition_law(build(e.document)).holds);
  }
}
