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

#include "ttw/document.hpp"
#include "ttw/errors.hpp"
#include "ttw/orderkit.hpp"

using namespace ttw;

namespace {

std::vector<Mask> all_downsets_brute(const FinPoset& p) {
  std::vector<Mask> out;
  const int n = p.size();
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    bool down = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mask_has(m, b) && p.leq(a, b) && !mask_has(m, a)) down = false;
    if (down) out.push_back(m);
  }
  return out;
}

std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

FinPoset vee() { return FinPoset::from_pairs({"a", "b", "t"}, {{0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("from_pairs takes the reflexive transitive closure") {
  auto p = FinPoset::from_pairs({"x", "y", "z"}, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.check().empty());
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("relation that is not antisymmetric is reported") {
  FinPoset p({"x", "y"}, {1, 1, 1, 1});
  CHECK_FALSE(p.check().empty());
}

TEST_CASE("joins and meets in a vee") {
  auto p = vee();
  CHECK(p.join(0, 1) == 2);
  CHECK_FALSE(p.meet(0, 1).has_value());
  CHECK_FALSE(p.bottom().has_value());
  CHECK(p.top() == 2);
}

TEST_CASE("downsets agree with subset enumeration") {
  for (const auto& p : {vee(), FinPoset::chain({"0", "1", "2", "3"}),
                        FinPoset::from_pairs({"0", "a", "b", "c", "1"},
                                             {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})}) {
    CHECK(sorted(enumerate_downsets(p)) == sorted(all_downsets_brute(p)));
  }
  CHECK(downsets(vee()).size() == 5);
}

TEST_CASE("directed downsets of a frame") {
  auto l = Semilattice::from_poset(FinPoset::from_pairs({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  auto d = directed_downsets(l);
  // Nonempty directed downsets of a finite poset are the principal ones.
  std::set<Mask> expected = {0};
  for (int x = 0; x < l.size(); ++x) expected.insert(l.poset.down_closure(mask_bit(x)));
  CHECK(std::set<Mask>(d.sets.begin(), d.sets.end()) == expected);
  CHECK(directed_downsets(l, false).size() == 4);
  CHECK(finitely_bounded_downsets(l).size() == static_cast<int>(all_downsets_brute(l.poset).size()));
}

TEST_CASE("frames and distributivity") {
  auto b = FinPoset::from_pairs({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto m3 = FinPoset::from_pairs({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(is_frame(b));
  CHECK(is_lattice(m3));
  CHECK_FALSE(is_distributive(m3));
  CHECK_FALSE(is_frame(m3));
  CHECK(is_preframe(m3));
  CHECK_FALSE(is_lattice(vee()));
}

TEST_CASE("quantale subunits match the idempotent-below-unit oracle") {
  for (const auto& e : gallery()) {
    if (e.document.kind != "quantale" && e.document.kind != "monoid_ideals") continue;
    const Quantale q = e.document.kind == "quantale" ? document_quantale(e.document)
                                                     : ideal_quantale(document_monoid(e.document));
    CHECK(q.check().empty());
    std::vector<std::string> expected;
    for (int x = 0; x < q.size(); ++x)
      if (q.mul(x, x) == x && q.poset.leq(x, q.unit)) expected.push_back(q.poset.label(x));
    const auto s = quantale_subunits(q);
    CHECK(s.poset.labels() == expected);
  }
}

TEST_CASE("q3 has subunits 0 and 1 only") {
  const Quantale q = document_quantale(gallery_entry("q3").document);
  CHECK(quantale_subunits(q).poset.labels() == std::vector<std::string>{"0", "1"});
}

TEST_CASE("ideal quantale of {1, 0}") {
  Monoid m{{"1", "0"}, {0, 1, 1, 1}, 0};
  REQUIRE(m.check().empty());
  const auto q = ideal_quantale(m);
  // Ideals by brute force: subsets closed under multiplication by anything.
  int count = 0;
  for (Mask s = 0; s < 4; ++s) {
    bool closed = true;
    for (int x : mask_elements(s))
      for (int y = 0; y < 2; ++y)
        if (!mask_has(s, m.mul(x, y))) closed = false;
    count += closed;
  }
  CHECK(q.size() == count);
  CHECK(q.check().empty());
  CHECK(q.is_commutative());
}

TEST_CASE("quantale check catches a corrupted product") {
  Quantale q = document_quantale(gallery_entry("q3").document);
  q.mult[1 * 3 + 2] = 2;  // eps * 1 = 1
  CHECK_FALSE(q.check().empty());
}

TEST_CASE("noncommutative quantale is rejected for subunits") {
  // Powerset of the monoid {1, x, y} with xy = x, yx = y, product pointwise.
  Monoid m{{"1", "x", "y"}, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0};
  REQUIRE(m.check().empty());
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> mult;
  for (Mask a = 0; a < 8; ++a) {
    names.push_back(mask_label(FinPoset::chain({"1", "x", "y"}), a));
    for (Mask b = 0; b < 8; ++b) {
      if ((a & b) == a) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      Mask p = 0;
      for (int x : mask_elements(a))
        for (int y : mask_elements(b)) p |= mask_bit(m.mul(x, y));
      mult.push_back(static_cast<int>(p));
    }
  }
  Quantale q{FinPoset::from_pairs(names, pairs), mult, 1};
  REQUIRE(q.check().empty());
  CHECK_FALSE(q.is_commutative());
  CHECK_THROWS_AS(quantale_subunits(q), PreconditionError);
}

TEST_CASE("semilattice from poset") {
  auto l = Semilattice::from_poset(FinPoset::chain({"0", "m", "1"}));
  CHECK(l.check().empty());
  CHECK(l.top == 2);
  CHECK(l.meet(1, 2) == 1);
  CHECK_THROWS_AS(Semilattice::from_poset(FinPoset::from_pairs({"a", "b"}, {})), PreconditionError);
}
