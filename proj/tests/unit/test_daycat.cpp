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
#include <numeric>

#include "oracles.hpp"
#include "ttw/document.hpp"
#include "ttw/errors.hpp"
#include "ttw/daycat.hpp"

using namespace ttw;

namespace {

// Number of classes of (h: A → B⊗C, x, y) under the generating relation,
// computed from scratch with a flat union-find.
int day_size_brute(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g, int a) {
  struct T {
    int b, c, h, x, y;
  };
  std::vector<T> ts;
  for (int b = 0; b < c.num_objects(); ++b)
    for (int cc = 0; cc < c.num_objects(); ++cc)
      for (int h : c.cat.hom(a, c.tensor(b, cc)))
        for (int x = 0; x < f.sizes[b]; ++x)
          for (int y = 0; y < g.sizes[cc]; ++y) ts.push_back({b, cc, h, x, y});
  std::vector<int> parent(ts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index = [&](int b, int cc, int h, int x, int y) {
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (ts[i].b == b && ts[i].c == cc && ts[i].h == h && ts[i].x == x && ts[i].y == y) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const T t = ts[i];
    for (int u = 0; u < c.num_morphisms(); ++u) {
      if (c.dom(u) == t.b) {  // (h, F(u)x', y) ~ ((u⊗C)∘h, x', y)
        const int h2 = c.compose(c.right_whisker(u, t.c), t.h);
        for (int x2 = 0; x2 < f.sizes[c.cod(u)]; ++x2)
          if (f.action[u][x2] == t.x) parent[find(static_cast<int>(i))] = find(index(c.cod(u), t.c, h2, x2, t.y));
      }
      if (c.dom(u) == t.c) {
        const int h2 = c.compose(c.left_whisker(t.b, u), t.h);
        for (int y2 = 0; y2 < g.sizes[c.cod(u)]; ++y2)
          if (g.action[u][y2] == t.y) parent[find(static_cast<int>(i))] = find(index(t.b, c.cod(u), h2, t.x, y2));
      }
    }
  }
  int classes = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) classes += find(static_cast<int>(i)) == static_cast<int>(i);
  return classes;
}

bool posets_isomorphic(const FinPoset& p, const FinPoset& q) {
  if (p.size() != q.size()) return false;
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < p.size() && ok; ++a)
      for (int b = 0; b < p.size() && ok; ++b) ok = p.leq(a, b) == q.leq(perm[a], perm[b]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("Day tensor sizes match a direct class count") {
  for (const char* name : {"b2", "c3", "q3", "z2", "monoid_idem"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    for (int a = 0; a < c.num_objects(); ++a)
      for (int b = 0; b < c.num_objects(); ++b) {
        const auto t = day_tensor(c, yoneda(c, a), yoneda(c, b));
        for (int x = 0; x < c.num_objects(); ++x)
          CHECK(t.presheaf.sizes[x] == day_size_brute(c, yoneda(c, a), yoneda(c, b), x));
      }
  }
}

TEST_CASE("Yoneda embedding is monoidal") {
  for (const char* name : {"b2", "c3", "q3", "boolean2x2", "z2", "monoid_idem"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    for (int a = 0; a < c.num_objects(); ++a)
      for (int b = 0; b < c.num_objects(); ++b) {
        const auto t = day_tensor(c, yoneda(c, a), yoneda(c, b));
        CHECK(find_presheaf_iso(c, t.presheaf, yoneda(c, c.tensor(a, b))).has_value());
      }
  }
}

TEST_CASE("unit laws for random presheaves") {
  for (const char* name : {"b2", "c3"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto f = random_thin_presheaf(c, seed, 3);
      CHECK(check_presheaf(c, f).empty());
      const auto u = day_unitors(c, f);
      CHECK(is_invertible_nat(u.right_tensor.presheaf, f, u.rho));
      CHECK(is_invertible_nat(u.left_tensor.presheaf, f, u.lambda));
      for (int a = 0; a < c.num_objects(); ++a)
        CHECK(day_size_brute(c, f, unit_presheaf(c), a) == f.sizes[a]);
    }
  }
}

TEST_CASE("a non-functorial presheaf is reported") {
  const auto c = gallery_category("c3");
  const int lo = *thin_morphism(c.cat, 0, 1), hi = *thin_morphism(c.cat, 1, 2), all = *thin_morphism(c.cat, 0, 2);
  Presheaf f;
  f.sizes = {2, 1, 1};
  f.action.assign(c.num_morphisms(), {});
  f.action[c.id(0)] = {0, 1};
  f.action[c.id(1)] = {0};
  f.action[c.id(2)] = {0};
  f.action[lo] = {0};
  f.action[hi] = {0};
  f.action[all] = {0};
  CHECK(check_presheaf(c, f).empty());
  f.action[all] = {1};
  CHECK_FALSE(check_presheaf(c, f).empty());
}

TEST_CASE("sieve subunits follow the quantale formula") {
  // On a quantale, a downset D of ↓1 is a subunit sieve iff every d in D
  // lies below some product b*c with b, c in D.
  for (const char* name : {"b2", "c3", "q3", "boolean2x2", "ideals_10"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    for (const auto& s : sieves(c)) {
      std::vector<int> members;
      for (int a = 0; a < c.num_objects(); ++a)
        if (!s.members[a].empty()) members.push_back(a);
      bool expected = true;
      for (int d : members) {
        bool covered = false;
        for (int b : members)
          for (int e : members) covered = covered || !c.cat.hom(d, c.tensor(b, e)).empty();
        expected = expected && covered;
      }
      CHECK(sieve_is_subunit_by_factorisation(c, s) == expected);
      CHECK(sieve_is_subunit_by_tensor(c, s) == expected);
    }
  }
}

TEST_CASE("q3 has four sieves and three subunit sieves") {
  const auto c = gallery_category("q3");
  CHECK(sieves(c).size() == 4);
  CHECK(presheaf_subunits(c).size() == 3);
}

TEST_CASE("broad completion subunits are the flavour's downsets") {
  for (const char* name : {"b2", "c3", "q3", "boolean2x2"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    const auto l = subunit_semilattice(c);
    for (auto fl : {Flavour::finite, Flavour::directed, Flavour::all}) {
      CAPTURE(to_string(fl));
      const auto b = broad_category(c, fl);
      CHECK(validate(b.cat).empty());
      CHECK(verify_broad_subunits(b).holds);
      const auto isub = subunit_semilattice(b.cat);
      const auto expected = fl == Flavour::directed ? directed_downsets(l.lattice) : downsets(l.lattice);
      CHECK(posets_isomorphic(isub.lattice.poset, expected.as_poset()));
    }
  }
}

TEST_CASE("broad hom-sets are natural transformations") {
  for (const char* name : {"b2", "q3"}) {
    const auto c = gallery_category(name);
    const auto b = broad_category(c, Flavour::all);
    for (int i = 0; i < b.cat.num_objects(); ++i)
      for (int j = 0; j < b.cat.num_objects(); ++j) CHECK(broad_hom_matches_presheaf(c, b, i, j).holds);
  }
}

TEST_CASE("tensor of broad presheaves") {
  const auto c = gallery_category("c3");
  const auto l = subunit_semilattice(c);
  const auto ds = downsets(l.lattice);
  for (Mask u : ds.sets)
    for (Mask v : ds.sets)
      CHECK(broad_tensor_lemma(c, l, {u, 0}, {v, c.unit()}).holds);
}

TEST_CASE("z2 completion has no terminal object") {
  const auto b = broad_category(gallery_category("z2"), Flavour::all);
  CHECK_FALSE(terminal_object(b.cat.cat).has_value());
}

TEST_CASE("extending the identity functor") {
  for (const char* name : {"b2", "c3", "q3"}) {
    CAPTURE(name);
    const auto c = gallery_category(name);
    MonoidalFunctor id;
    for (int a = 0; a < c.num_objects(); ++a) id.obj.push_back(a);
    for (int m = 0; m < c.num_morphisms(); ++m) id.mor.push_back(m);
    CHECK(check_monoidal_functor(c, c, id).empty());
    const auto e = extend_functor(c, c, id, Flavour::all);
    CHECK(e.report.holds);
  }
}

TEST_CASE("extension needs joins in the target") {
  const auto c = gallery_category("z2");
  MonoidalFunctor id{{0}, {0, 1}};
  CHECK_THROWS_AS(extend_functor(c, c, id, Flavour::all), PreconditionError);
}
