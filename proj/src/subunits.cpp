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

#include "ttw/subunits.hpp"

#include <algorithm>

#include "ttw/errors.hpp"
#include "ttw/limits.hpp"

namespace ttw {
namespace {

std::vector<int> members_of(Mask u) { return mask_elements(u); }

std::vector<int> with_object(int x, const std::vector<int>& members) {
  std::vector<int> w{x};
  w.insert(w.end(), members.begin(), members.end());
  return w;
}

std::string family_label(const SubunitSemilattice& l, Mask u) {
  return mask_label(l.lattice.poset, u);
}

}  // namespace

std::vector<Subunit> enumerate_subunits(const MonoidalCategory& c, SubunitOptions opt) {
  const FinCategory& k = c.cat;
  std::vector<Subunit> out;
  for (auto& cls : subobjects(k, c.unit())) {
    const int s = cls.representative;
    const int S = k.dom(s);
    const int w = c.tensor_mor(s, k.id(S));  // S⊗S → I⊗S = S
    std::optional<int> inv = is_iso(k, w);
    if (!inv && opt.split_epic) {
      for (int g : k.hom(S, k.dom(w)))
        if (k.compose(w, g) == k.id(S)) {
          inv = g;
          break;
        }
    }
    if (inv) out.push_back({std::move(cls), s, S, *inv});
  }
  return out;
}

std::optional<int> subunit_index_of(const MonoidalCategory& c, const std::vector<Subunit>& subs, int f) {
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (factor_through(c.cat, f, subs[i].mono) && factor_through(c.cat, subs[i].mono, f))
      return static_cast<int>(i);
  return std::nullopt;
}

OrderVerdict subunit_leq_both(const MonoidalCategory& c, const Subunit& s, const Subunit& t) {
  OrderVerdict v;
  v.by_factoring = factor_through(c.cat, s.mono, t.mono).has_value();
  v.by_invertibility = is_iso(c.cat, c.left_whisker(s.domain, t.mono)).has_value();
  return v;
}

bool subunit_leq(const MonoidalCategory& c, const Subunit& s, const Subunit& t) {
  const auto v = subunit_leq_both(c, s, t);
  if (v.by_factoring != v.by_invertibility)
    throw ConsistencyError("factoring and invertibility disagree on subunits " +
                           std::to_string(s.mono) + ", " + std::to_string(t.mono));
  return v.by_factoring;
}

std::optional<int> inclusion(const MonoidalCategory& c, const Subunit& s, const Subunit& t) {
  return factor_through(c.cat, s.mono, t.mono);
}

PropertyReport is_firm(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("firm");
  const auto subs = enumerate_subunits(c);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      const int f = c.right_whisker(subs[i].mono, subs[j].domain);
      if (!is_mono(c.cat, f))
        return r.fail("s⊗T is not monic for s = " + c.cat.object_label(subs[i].domain) +
                          ", t = " + c.cat.object_label(subs[j].domain),
                      {subs[i].mono, subs[j].mono});
    }
  return r;
}

SubunitSemilattice subunit_semilattice(const MonoidalCategory& c) {
  auto firm = is_firm(c);
  if (!firm.holds) throw PreconditionError("category is not firm: " + firm.detail);
  SubunitSemilattice out;
  out.elements = enumerate_subunits(c);
  const int n = out.size();
  std::vector<std::string> labels;
  std::vector<char> rel(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    labels.push_back(c.cat.object_label(out.elements[a].domain));
    for (int b = 0; b < n; ++b) rel[a * n + b] = subunit_leq(c, out.elements[a], out.elements[b]);
  }
  Semilattice l;
  l.poset = FinPoset(std::move(labels), std::move(rel));
  l.meet_table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int st = c.tensor_mor(out.elements[a].mono, out.elements[b].mono);
      auto idx = subunit_index_of(c, out.elements, st);
      if (!idx) throw ConsistencyError("s⊗t is not a subunit for " + std::to_string(a) + ", " + std::to_string(b));
      l.meet_table[a * n + b] = *idx;
    }
  auto top = subunit_index_of(c, out.elements, c.id(c.unit()));
  if (!top) throw ConsistencyError("identity on the unit is not a subunit");
  l.top = *top;
  auto v = l.check();
  if (!v.empty()) throw ConsistencyError("subunit meets break a law: " + v.front().to_string());
  out.lattice = std::move(l);
  return out;
}

std::vector<Mask> idempotent_families(const SubunitSemilattice& l) {
  const int n = l.size();
  check_cap("isub", n, limits().max_isub);
  std::vector<Mask> out;
  for (Mask u = 0; u < (Mask{1} << n); ++u) {
    bool closed = true;
    for (int a : mask_elements(u))
      for (int b : mask_elements(u))
        if (!mask_has(u, l.meet(a, b))) closed = false;
    if (closed) out.push_back(u);
  }
  return out;
}

DiagramSpec subunit_diagram(const MonoidalCategory& c, const SubunitSemilattice& l, Mask u, int x) {
  DiagramSpec d;
  const auto idx = members_of(u);
  for (int i : idx) d.nodes.push_back(c.tensor(l.elements[i].domain, x));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const auto& s = l.elements[idx[a]];
      const auto& t = l.elements[idx[b]];
      const int sx = c.right_whisker(s.mono, x);
      const int tx = c.right_whisker(t.mono, x);
      for (int f : c.cat.hom(d.nodes[a], d.nodes[b])) {
        if (a == b && f == c.id(d.nodes[a])) continue;
        if (c.compose(tx, f) == sx)
          d.edges.push_back({static_cast<int>(a), static_cast<int>(b), f});
      }
    }
  return d;
}

Square stiffness_square(const MonoidalCategory& c, const Subunit& s, const Subunit& t, int x) {
  Square q;
  q.top = c.tensor_mor(s.mono, c.id(c.tensor(t.domain, x)));
  q.left = c.tensor_mor(c.id(s.domain), c.right_whisker(t.mono, x));
  q.right = c.right_whisker(t.mono, x);
  q.bottom = c.right_whisker(s.mono, x);
  return q;
}

Square join_square(const MonoidalCategory& c, const Subunit& s, const Subunit& t, const Subunit& j,
                   int x) {
  Square q = stiffness_square(c, s, t, x);
  q.right = c.right_whisker(*inclusion(c, t, j), x);
  q.bottom = c.right_whisker(*inclusion(c, s, j), x);
  return q;
}

namespace {

bool all_monic(const FinCategory& k, const Square& q) {
  return is_mono(k, q.top) && is_mono(k, q.left) && is_mono(k, q.right) && is_mono(k, q.bottom);
}

}  // namespace

PropertyReport is_stiff(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("stiff");
  const auto subs = enumerate_subunits(c);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      for (int x = 0; x < c.num_objects(); ++x) {
        const Square q = stiffness_square(c, subs[i], subs[j], x);
        bool ok = all_monic(c.cat, q);
        if (ok) {
          try {
            ok = is_pullback(c.cat, q);
          } catch (const NonCommutingSquare&) {
            ok = false;
          }
        }
        if (!ok) {
          r.fail("square for s = " + c.cat.object_label(subs[i].domain) + ", t = " +
                     c.cat.object_label(subs[j].domain) + ", X = " + c.cat.object_label(x) +
                     " is not a pullback of monomorphisms",
                 {subs[i].mono, subs[j].mono, x});
          r.square = q;
          return r;
        }
      }
  return r;
}

PropertyReport has_universal_finite_joins(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("univ-finite");
  const FinCategory& k = c.cat;
  const auto zero = initial_object(k);
  if (!zero) return r.fail("no initial object");
  const int z = *zero;
  const int zi = k.hom(z, c.unit()).front();
  if (!is_mono(k, zi)) return r.fail("0 -> I is not monic", {zi});
  for (int x = 0; x < c.num_objects(); ++x)
    if (!find_iso(k, c.tensor(x, z), z)) return r.fail("X⊗0 is not initial for X = " + k.object_label(x), {x});
  if (!is_firm(c).holds) return r.fail("not firm");
  const auto l = subunit_semilattice(c);
  const FinPoset& p = l.lattice.poset;
  if (!is_lattice(p) || !p.bottom()) return r.fail("subunits lack finite joins");
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      const int jn = *l.join(i, j);
      for (int x = 0; x < c.num_objects(); ++x) {
        const Square q = join_square(c, l.elements[i], l.elements[j], l.elements[jn], x);
        std::string what;
        if (!all_monic(k, q)) what = "not a square of monomorphisms";
        else if (!is_pullback(k, q)) what = "not a pullback";
        else if (!is_pushout(k, q)) what = "not a pushout";
        if (!what.empty()) {
          r.fail("join square for s = " + p.label(i) + ", t = " + p.label(j) + ", X = " +
                     k.object_label(x) + " is " + what,
                 {l.elements[i].mono, l.elements[j].mono, x});
          r.square = q;
          return r;
        }
      }
    }
  // Consequences that must then hold: stiff, distributive, bottom is 0 -> I.
  const auto bottom_idx = subunit_index_of(c, l.elements, zi);
  r.cross_check_agrees = is_stiff(c).holds && is_distributive(p) && bottom_idx &&
                         *bottom_idx == *p.bottom();
  return r;
}

PropertyReport has_universal_directed_joins(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("univ-directed");
  if (!is_stiff(c).holds) return r.fail("not stiff");
  const auto l = subunit_semilattice(c);
  const FinCategory& k = c.cat;
  check_cap("isub", l.size(), limits().max_isub);
  for (Mask u = 1; u < (Mask{1} << l.size()); ++u) {
    if (!l.lattice.poset.is_directed(u)) continue;
    const auto idx = members_of(u);
    const DiagramSpec d = subunit_diagram(c, l, u, c.unit());
    const auto colim = colimit(k, d);
    if (!colim) return r.fail("no colimit for directed family " + family_label(l, u), idx);
    Cocone to_unit{c.unit(), {}};
    for (int i : idx) to_unit.legs.push_back(l.elements[i].mono);
    const auto m = mediating(k, *colim, to_unit);
    if (!m || !is_mono(k, *m) || !is_iso(k, c.tensor_mor(*m, c.id(colim->apex))))
      return r.fail("induced map from the colimit of " + family_label(l, u) + " is not a subunit", idx);
    for (int x = 0; x < c.num_objects(); ++x) {
      Cocone cx{c.tensor(colim->apex, x), {}};
      for (int leg : colim->legs) cx.legs.push_back(c.right_whisker(leg, x));
      if (!is_colimit(k, subunit_diagram(c, l, u, x), cx))
        return r.fail("tensoring with X = " + k.object_label(x) + " does not preserve the colimit of " +
                          family_label(l, u),
                      with_object(x, idx));
    }
  }
  return r;
}

namespace {

PropertyReport locale_based_direct(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("locale-based");
  if (!is_stiff(c).holds) return r.fail("not stiff");
  const auto l = subunit_semilattice(c);
  if (!is_frame(l.lattice.poset)) return r.fail("subunits do not form a frame");
  const FinCategory& k = c.cat;
  for (Mask u : idempotent_families(l)) {
    const auto idx = members_of(u);
    const auto& j = l.elements[*l.join_of(idx)];
    for (int x = 0; x < c.num_objects(); ++x) {
      Cocone cc{c.tensor(j.domain, x), {}};
      for (int i : idx) cc.legs.push_back(c.right_whisker(*inclusion(c, l.elements[i], j), x));
      if (!is_colimit(k, subunit_diagram(c, l, u, x), cc))
        return r.fail("canonical maps into (⋁U)⊗X are not a colimit for U = " + family_label(l, u) +
                          ", X = " + k.object_label(x),
                      with_object(x, idx));
    }
  }
  return r;
}

}  // namespace

PropertyReport is_locale_based(const MonoidalCategory& c) {
  auto r = locale_based_direct(c);
  const bool both = has_universal_finite_joins(c).holds && has_universal_directed_joins(c).holds;
  r.cross_check_agrees = (r.holds == both);
  return r;
}

PropertyReport check_characterisation(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("characterisation");
  auto finish = [&](PropertyReport& rep) -> PropertyReport& {
    rep.cross_check_agrees = (rep.holds == locale_based_direct(c).holds);
    return rep;
  };
  if (!is_stiff(c).holds) return finish(r.fail("not stiff"));
  const auto l = subunit_semilattice(c);
  const FinCategory& k = c.cat;
  for (Mask u : idempotent_families(l)) {
    const auto idx = members_of(u);
    const auto colim_i = colimit(k, subunit_diagram(c, l, u, c.unit()));
    if (!colim_i)
      return finish(r.fail("D(U,I) has no colimit for U = " + family_label(l, u), with_object(c.unit(), idx)));
    Cocone to_unit{c.unit(), {}};
    for (int i : idx) to_unit.legs.push_back(l.elements[i].mono);
    const auto su = mediating(k, *colim_i, to_unit);
    if (!su || !is_mono(k, *su))
      return finish(r.fail("colim D(U,I) -> I is not monic for U = " + family_label(l, u),
                           with_object(c.unit(), idx)));
    for (int x = 0; x < c.num_objects(); ++x) {
      const auto colim_x = colimit(k, subunit_diagram(c, l, u, x));
      if (!colim_x)
        return finish(r.fail("D(U,X) has no colimit for U = " + family_label(l, u) + ", X = " +
                                 k.object_label(x),
                             with_object(x, idx)));
      Cocone target{c.tensor(colim_i->apex, x), {}};
      for (int leg : colim_i->legs) target.legs.push_back(c.right_whisker(leg, x));
      const auto delta = mediating(k, *colim_x, target);
      if (!delta || !is_iso(k, *delta))
        return finish(r.fail("colim D(U,X) -> colim D(U,I) ⊗ X is not invertible for U = " +
                                 family_label(l, u) + ", X = " + k.object_label(x),
                             with_object(x, idx)));
    }
  }
  return finish(r);
}

}  // namespace ttw
