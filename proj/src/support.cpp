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

#include "ttw/support.hpp"

#include "ttw/errors.hpp"
#include "ttw/restriction.hpp"

namespace ttw {
namespace {

std::vector<int> image(const std::vector<int>& h, Mask m) {
  std::vector<int> out;
  for (int i : mask_elements(m)) out.push_back(h[i]);
  return out;
}

}  // namespace

Mask restriction_set(const MonoidalCategory& c, const SubunitSemilattice& l, int f) {
  Mask out = 0;
  for (int i = 0; i < l.size(); ++i)
    if (restricts_to(c, f, l.elements[i])) out |= mask_bit(i);
  return out;
}

SupportResult canonical_support(const MonoidalCategory& c, int f) {
  return canonical_support(c, subunit_semilattice(c), f);
}

SupportResult canonical_support(const MonoidalCategory& c, const SubunitSemilattice& l, int f) {
  SupportResult r;
  r.morphism = f;
  const Mask res = restriction_set(c, l, f);
  for (int s = 0; s < l.size(); ++s) {
    bool below = true;
    for (int t : mask_elements(res)) below = below && l.leq(s, t);
    if (below) r.canonical |= mask_bit(s);
  }
  const auto& p = l.lattice.poset;
  if (!p.is_downset(r.canonical)) throw ConsistencyError("canonical support is not a downset");
  if (p.bottom() && is_complete_lattice(p)) {
    const auto elems = mask_elements(r.canonical);
    r.supp = p.join_of(elems);
    const auto other = p.meet_of(mask_elements(res));
    if (r.supp != other) throw ConsistencyError("supp as a join and as a meet differ");
  }
  return r;
}

SupportDatum support_datum_from_monotone(const MonoidalCategory& c, const SubunitSemilattice& l,
                                         const FinPoset& target, const std::vector<int>& h) {
  if (!is_complete_lattice(target)) throw PreconditionError("support target is not a complete lattice");
  if (static_cast<int>(h.size()) != l.size()) throw PreconditionError("one value per subunit expected");
  for (int v : h)
    if (v < 0 || v >= target.size()) throw PreconditionError("value outside the target lattice");
  for (int s = 0; s < l.size(); ++s)
    for (int t = 0; t < l.size(); ++t)
      if (l.leq(s, t) && !target.leq(h[s], h[t]))
        throw PreconditionError("not monotone at " + l.lattice.poset.label(s) + " <= " + l.lattice.poset.label(t));
  SupportDatum d;
  d.target = target;
  d.on_subunits = h;
  std::vector<Mask> res(c.num_morphisms());
  for (int f = 0; f < c.num_morphisms(); ++f) {
    res[f] = restriction_set(c, l, f);
    d.on_morphisms.push_back(*target.meet_of(image(h, res[f])));
  }
  for (int s = 0; s < l.size(); ++s)
    if (d.on_morphisms[l.elements[s].mono] != h[s]) throw ConsistencyError("extension disagrees on a subunit");
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g)
      if ((res[g] & ~res[f]) == 0 && !target.leq(d.on_morphisms[f], d.on_morphisms[g]))
        throw ConsistencyError("extension is not monotone along mors(C)");
  return d;
}

SupportDatum canonical_datum(const MonoidalCategory& c, const SubunitSemilattice& l) {
  const auto dl = downsets(l.lattice.poset);
  std::vector<int> h;
  for (int s = 0; s < l.size(); ++s) h.push_back(dl.principal[s]);
  return support_datum_from_monotone(c, l, dl.as_poset(), h);
}

PropertyReport verify_support_laws(const MonoidalCategory& c, const SubunitSemilattice& l, const SupportDatum& d) {
  auto r = PropertyReport::ok("support laws");
  const auto& L = d.target;
  const int m = c.num_morphisms();
  std::vector<Mask> res(m);
  for (int f = 0; f < m; ++f) res[f] = restriction_set(c, l, f);
  auto F = [&](int f) { return d.on_morphisms[f]; };
  for (int f = 0; f < m; ++f)
    if (L.meet_of(image(d.on_subunits, res[f])) != F(f)) return r.fail("defining meet formula fails", {f});
  for (int s = 0; s < l.size(); ++s)
    if (F(l.elements[s].mono) != d.on_subunits[s]) return r.fail("disagrees with h on a subunit", {s});
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if ((res[g] & ~res[f]) == 0 && !L.leq(F(f), F(g))) return r.fail("not monotone along mors(C)", {f, g});
      const auto both = L.meet(F(f), F(g));
      if (!L.leq(F(c.tensor_mor(f, g)), *both)) return r.fail("F(f⊗g) is not below F(f) ∧ F(g)", {f, g});
      if (c.cod(g) == c.dom(f) && !L.leq(F(c.compose(f, g)), *both))
        return r.fail("F(f∘g) is not below F(f) ∧ F(g)", {f, g});
    }
  // Object formula: f factors through A when f = g∘h with h: dom f → A.
  for (int f = 0; f < m; ++f) {
    std::vector<int> vals;
    for (int a = 0; a < c.num_objects(); ++a) {
      bool through = false;
      for (int h : c.cat.hom(c.dom(f), a)) {
        for (int g : c.cat.hom(a, c.cod(f)))
          if (c.compose(g, h) == f) {
            through = true;
            break;
          }
        if (through) break;
      }
      if (through) vals.push_back(F(c.id(a)));
    }
    if (L.meet_of(vals) != F(f)) return r.fail("object formula disagrees", {f});
  }
  for (int f = 0; f < m; ++f) {
    const auto can = canonical_support(c, l, f);
    if (L.join_of(image(d.on_subunits, can.canonical)) != F(f))
      return r.fail("does not factor through the canonical support", {f});
  }
  return r;
}

std::optional<std::pair<int, int>> support_not_monoidal(const MonoidalCategory& c) {
  const auto l = subunit_semilattice(c);
  const int m = c.num_morphisms();
  std::vector<std::optional<int>> supp(m);
  for (int f = 0; f < m; ++f) supp[f] = canonical_support(c, l, f).supp;
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (!supp[f] || !supp[g]) continue;
      if (l.meet(*supp[f], *supp[g]) != supp[c.tensor_mor(f, g)]) return std::pair{f, g};
    }
  return std::nullopt;
}

}  // namespace ttw
