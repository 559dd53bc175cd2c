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

#include "ttw/restriction.hpp"

#include <algorithm>

#include "ttw/errors.hpp"
#include "ttw/limits.hpp"

namespace ttw {
namespace {

// Composition and tensor that propagate -1 instead of indexing with it.
int comp(const MonoidalCategory& c, int g, int f) {
  if (g < 0 || f < 0) return -1;
  return c.compose(g, f);
}


int inverse(const MonoidalCategory& c, int f) {
  if (f < 0) return -1;
  auto g = is_iso(c.cat, f);
  return g ? *g : -1;
}

std::string obj(const MonoidalCategory& c, int a) { return c.cat.object_label(a); }

}  // namespace

std::optional<int> restricts_to(const MonoidalCategory& c, int f, const Subunit& s) {
  return factor_through(c.cat, f, c.right_whisker(s.mono, c.cod(f)));
}

ObjectRestriction object_restriction_equivalences(const MonoidalCategory& c, int a, const Subunit& s) {
  ObjectRestriction r;
  r.a_tensor_invertible = is_iso(c.cat, c.right_whisker(s.mono, a)).has_value();
  r.b_iso_to_self = find_iso(c.cat, c.tensor(s.domain, a), a).has_value();
  for (int b = 0; b < c.num_objects() && !r.c_iso_to_some; ++b)
    r.c_iso_to_some = find_iso(c.cat, c.tensor(s.domain, b), a).has_value();
  r.d_identity_restricts = restricts_to(c, c.id(a), s).has_value();
  const bool all = r.a_tensor_invertible && r.b_iso_to_self && r.c_iso_to_some && r.d_identity_restricts;
  const bool none = !r.a_tensor_invertible && !r.b_iso_to_self && !r.c_iso_to_some && !r.d_identity_restricts;
  if (!all && !none)
    throw ConsistencyError("restriction conditions disagree for object " + obj(c, a) + " and subunit " +
                           obj(c, s.domain));
  return r;
}

RestrictionCategory restriction_category(const MonoidalCategory& c, const Subunit& s) {
  RestrictionCategory out;
  out.subunit = s;
  const int n = c.num_objects();
  const int S = s.domain;
  std::vector<int> objects;
  std::vector<int> inv_s(n, -1);  // (s⊗A)^{-1} for A in C|s
  for (int a = 0; a < n; ++a) {
    inv_s[a] = inverse(c, c.right_whisker(s.mono, a));
    if (inv_s[a] >= 0) objects.push_back(a);
  }
  out.sub = full_subcategory(c.cat, objects);
  for (int a = 0; a < n; ++a) out.coreflector_obj.push_back(c.tensor(S, a));
  for (int f = 0; f < c.num_morphisms(); ++f) out.coreflector_mor.push_back(c.left_whisker(S, f));
  auto in_sub = [&](int a) { return out.sub.object_index[a] >= 0; };

  auto& adj = out.adjunction = PropertyReport::ok("restriction adjunction");
  auto forward = [&](int a, int f) { return comp(c, c.left_whisker(S, f), inv_s[a]); };
  auto backward = [&](int b, int g) { return comp(c, c.right_whisker(s.mono, b), g); };
  for (int b = 0; b < n && adj.holds; ++b)
    if (!in_sub(c.tensor(S, b))) adj.fail("S⊗B is outside the restriction for B = " + obj(c, b), {b});
  for (int a : objects) {
    if (!adj.holds) break;
    for (int b = 0; b < n && adj.holds; ++b) {
      const int sb = c.tensor(S, b);
      for (int f : c.cat.hom(a, b))
        if (backward(b, forward(a, f)) != f) {
          adj.fail("f -> (S⊗f)∘(s⊗A)^-1 is not inverted", {a, b, f});
          break;
        }
      for (int g : c.cat.hom(a, sb))
        if (adj.holds && forward(a, backward(b, g)) != g) adj.fail("g -> (s⊗B)∘g is not inverted", {a, b, g});
      // Naturality in both arguments.
      for (int a2 : objects)
        for (int x : c.cat.hom(a2, a))
          for (int b2 = 0; b2 < n && adj.holds; ++b2)
            for (int y : c.cat.hom(b, b2))
              for (int f : c.cat.hom(a, b)) {
                const int lhs = forward(a2, comp(c, y, comp(c, f, x)));
                const int rhs = comp(c, c.left_whisker(S, y), comp(c, forward(a, f), x));
                if (lhs != rhs) {
                  adj.fail("adjunction bijection is not natural", {a2, a, b, b2, f});
                  break;
                }
              }
    }
  }

  auto& mon = out.monoidal = PropertyReport::ok("restriction monoidal");
  if (!in_sub(S)) mon.fail("S is not in the restriction", {S});
  for (int a : objects)
    for (int b : objects)
      if (mon.holds && !in_sub(c.tensor(a, b))) mon.fail("restriction not closed under tensor", {a, b});
  for (int a : objects)
    if (mon.holds && (!find_iso(c.cat, c.tensor(S, a), a) || !find_iso(c.cat, c.tensor(a, S), a)))
      mon.fail("S is not a unit up to isomorphism at " + obj(c, a), {a});
  for (int a = 0; a < n && mon.holds; ++a)
    for (int b = 0; b < n && mon.holds; ++b)
      if (!find_iso(c.cat, c.tensor(S, c.tensor(a, b)), c.tensor(c.tensor(S, a), c.tensor(S, b))))
        mon.fail("coreflector does not preserve the tensor at " + obj(c, a) + ", " + obj(c, b), {a, b});
  if (mon.holds && c.tensor(S, c.unit()) != S) mon.fail("coreflector does not send I to S");
  out.inclusion_unit_invertible = is_iso(c.cat, s.mono).has_value();
  return out;
}

// Graded monad ---------------------------------------------------------------

GradedMonadData graded_monad_data(const MonoidalCategory& c) {
  GradedMonadData d;
  const int I = c.unit();
  for (int x = 0; x < c.num_objects(); ++x)
    for (int f : c.cat.hom(x, I))
      if (is_mono(c.cat, f) && is_iso(c.cat, c.tensor_mor(f, c.id(x)))) d.grades.push_back(f);
  std::sort(d.grades.begin(), d.grades.end());
  const int k = static_cast<int>(d.grades.size());
  auto index = [&](int f) {
    auto it = std::find(d.grades.begin(), d.grades.end(), f);
    return it == d.grades.end() ? -1 : static_cast<int>(it - d.grades.begin());
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int f : c.cat.hom(c.dom(d.grades[i]), c.dom(d.grades[j])))
        if (c.compose(d.grades[j], f) == d.grades[i]) d.arrows.push_back({i, j, f});
  d.grade_tensor.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) d.grade_tensor[i * k + j] = index(c.tensor_mor(d.grades[i], d.grades[j]));
  d.unit_grade = index(c.id(I));
  return d;
}

PropertyReport verify_graded_monad(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("graded-monad");
  const auto d = graded_monad_data(c);
  const int k = static_cast<int>(d.grades.size());
  const int n = c.num_objects();
  const int I = c.unit();
  if (d.unit_grade < 0) return r.fail("identity on I is not a grade");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (d.grade_tensor[i * k + j] < 0) return r.fail("grades not closed under tensor", {d.grades[i], d.grades[j]});
  auto dom_of = [&](int g) { return c.dom(d.grades[g]); };
  // T(s)(A) = A⊗S; T(f)_A = A⊗f; η_A = id_A; μ_{s,t,A} = id_{A⊗S⊗T}.
  auto T_arrow = [&](int a, int f) { return c.left_whisker(a, f); };
  auto eta = [&](int a) -> int { return c.tensor(a, I) == a ? c.id(a) : -1; };
  auto mu = [&](int s, int t, int a) -> int {
    const int lhs = c.tensor(c.tensor(a, dom_of(s)), dom_of(t));
    const int rhs = c.tensor(a, c.tensor(dom_of(s), dom_of(t)));
    return lhs == rhs ? c.id(lhs) : -1;
  };
  for (const auto& e : d.arrows) {
    const int S = dom_of(e.from), Tt = dom_of(e.to);
    for (int h = 0; h < c.num_morphisms(); ++h) {
      const int lhs = comp(c, T_arrow(c.cod(h), e.mor), c.tensor_mor(h, c.id(S)));
      const int rhs = comp(c, c.tensor_mor(h, c.id(Tt)), T_arrow(c.dom(h), e.mor));
      if (lhs != rhs) return r.fail("T(f) is not natural", {e.mor, h});
    }
  }
  for (const auto& e1 : d.arrows)
    for (const auto& e2 : d.arrows) {
      if (e1.to != e2.from) continue;
      const int g = c.compose(e2.mor, e1.mor);
      for (int a = 0; a < n; ++a)
        if (T_arrow(a, g) != comp(c, T_arrow(a, e2.mor), T_arrow(a, e1.mor)))
          return r.fail("T does not preserve composition", {e2.mor, e1.mor, a});
    }
  for (int g = 0; g < k; ++g)
    for (int a = 0; a < n; ++a)
      if (T_arrow(a, c.id(dom_of(g))) != c.id(c.tensor(a, dom_of(g))))
        return r.fail("T does not preserve identities", {d.grades[g], a});
  for (int a = 0; a < n; ++a)
    if (eta(a) < 0) return r.fail("unit component is not typed A -> A⊗I", {a});
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t)
      for (int a = 0; a < n; ++a)
        if (mu(s, t, a) < 0) return r.fail("multiplication component is not typed", {d.grades[s], d.grades[t], a});
  // μ natural in A and in both grades.
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t)
      for (int h = 0; h < c.num_morphisms(); ++h) {
        const int S = dom_of(s), Tt = dom_of(t);
        const int lhs = comp(c, c.tensor_mor(h, c.id(c.tensor(S, Tt))), mu(s, t, c.dom(h)));
        const int rhs = comp(c, mu(s, t, c.cod(h)), c.tensor_mor(c.tensor_mor(h, c.id(S)), c.id(Tt)));
        if (lhs != rhs) return r.fail("multiplication is not natural in A", {d.grades[s], d.grades[t], h});
      }
  for (const auto& f : d.arrows)
    for (const auto& g : d.arrows) {
      const int st = d.grade_tensor[f.from * k + g.from];
      const int st2 = d.grade_tensor[f.to * k + g.to];
      const int fg = c.tensor_mor(f.mor, g.mor);
      if (c.compose(d.grades[st2], fg) != d.grades[st])
        return r.fail("f⊗g is not an arrow of grades", {f.mor, g.mor});
      for (int a = 0; a < n; ++a) {
        const int s2 = dom_of(f.to);
        const int lhs = comp(c, T_arrow(a, fg), mu(f.from, g.from, a));
        const int horiz = comp(c, T_arrow(c.tensor(a, s2), g.mor), c.tensor_mor(T_arrow(a, f.mor), c.id(dom_of(g.from))));
        const int rhs = comp(c, mu(f.to, g.to, a), horiz);
        if (lhs != rhs) return r.fail("multiplication is not natural in the grades", {f.mor, g.mor, a});
      }
    }
  // Associativity and the two unit laws, componentwise.
  for (int x = 0; x < k; ++x)
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t)
        for (int a = 0; a < n; ++a) {
          const int xs = d.grade_tensor[x * k + s], st = d.grade_tensor[s * k + t];
          const int lhs = comp(c, mu(xs, t, a), c.tensor_mor(mu(x, s, a), c.id(dom_of(t))));
          const int rhs = comp(c, mu(x, st, a), mu(s, t, c.tensor(a, dom_of(x))));
          if (lhs < 0 || lhs != rhs) return r.fail("associativity fails", {d.grades[x], d.grades[s], d.grades[t], a});
        }
  const int one = d.unit_grade;
  for (int s = 0; s < k; ++s)
    for (int a = 0; a < n; ++a) {
      const int as = c.tensor(a, dom_of(s));
      const int left = comp(c, mu(one, s, a), c.tensor_mor(eta(a), c.id(dom_of(s))));
      if (left != c.id(as)) return r.fail("left unit law fails", {d.grades[s], a});
      const int right = comp(c, mu(s, one, a), eta(as));
      if (right != c.id(as)) return r.fail("right unit law fails", {d.grades[s], a});
    }
  return r;
}

// Restriction comonads --------------------------------------------------------

ComonadData restriction_comonad(const MonoidalCategory& c, const Subunit& s) {
  ComonadData f;
  const int n = c.num_objects();
  const int S = s.domain;
  for (int a = 0; a < n; ++a) {
    f.f_obj.push_back(c.tensor(S, a));
    const int d = inverse(c, c.tensor_mor(s.mono, c.id(c.tensor(S, a))));
    if (d < 0) throw PreconditionError("s⊗S⊗A is not invertible; not a subunit");
    f.delta.push_back(d);
    f.epsilon.push_back(c.right_whisker(s.mono, a));
  }
  for (int m = 0; m < c.num_morphisms(); ++m) f.f_mor.push_back(c.left_whisker(S, m));
  f.phi.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f.phi[a * n + b] = c.right_whisker(c.braid(a, S), b);
  return f;
}

ViolationList check_comonad(const MonoidalCategory& c, const ComonadData& F) {
  ViolationList out;
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  auto in_range = [](const std::vector<int>& v, std::size_t size, int bound) {
    return v.size() == size && std::all_of(v.begin(), v.end(), [&](int x) { return x >= 0 && x < bound; });
  };
  const auto nn = static_cast<std::size_t>(n);
  if (!in_range(F.f_obj, nn, n) || !in_range(F.f_mor, static_cast<std::size_t>(m), m) ||
      !in_range(F.delta, nn, m) || !in_range(F.epsilon, nn, m) || !in_range(F.phi, nn * nn, m)) {
    out.push_back({"table shape", {}});
    return out;
  }
  auto Fo = [&](int a) { return F.f_obj[a]; };
  auto Fm = [&](int f) { return f < 0 ? -1 : F.f_mor[f]; };
  auto typed = [&](int f, int a, int b) { return f >= 0 && c.dom(f) == a && c.cod(f) == b; };
  for (int f = 0; f < m; ++f)
    if (!typed(Fm(f), Fo(c.dom(f)), Fo(c.cod(f)))) out.push_back({"functor typing", {f}});
  for (int a = 0; a < n; ++a) {
    if (!typed(F.delta[a], Fo(a), Fo(Fo(a)))) out.push_back({"comultiplication typing", {a}});
    if (!typed(F.epsilon[a], Fo(a), a)) out.push_back({"counit typing", {a}});
    for (int b = 0; b < n; ++b)
      if (!typed(F.phi[a * n + b], c.tensor(a, Fo(b)), Fo(c.tensor(a, b)))) out.push_back({"strength typing", {a, b}});
  }
  if (!out.empty()) return out;
  auto phi = [&](int a, int b) { return F.phi[a * n + b]; };
  for (int a = 0; a < n; ++a)
    if (Fm(c.id(a)) != c.id(Fo(a))) out.push_back({"functor identity", {a}});
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (c.cod(f) == c.dom(g) && Fm(c.compose(g, f)) != c.compose(Fm(g), Fm(f)))
        out.push_back({"functor composition", {g, f}});
  for (int f = 0; f < m; ++f) {
    const int a = c.dom(f), b = c.cod(f);
    if (c.compose(F.epsilon[b], Fm(f)) != c.compose(f, F.epsilon[a])) out.push_back({"counit naturality", {f}});
    if (c.compose(F.delta[b], Fm(f)) != c.compose(Fm(Fm(f)), F.delta[a]))
      out.push_back({"comultiplication naturality", {f}});
  }
  for (int a = 0; a < n; ++a) {
    const int d = F.delta[a];
    if (c.compose(F.epsilon[Fo(a)], d) != c.id(Fo(a))) out.push_back({"left counit law", {a}});
    if (c.compose(Fm(F.epsilon[a]), d) != c.id(Fo(a))) out.push_back({"right counit law", {a}});
    if (c.compose(F.delta[Fo(a)], d) != c.compose(Fm(d), d)) out.push_back({"coassociativity", {a}});
    if (inverse(c, d) < 0) out.push_back({"comultiplication invertible", {a}});
  }
  const int I = c.unit();
  if (!is_mono(c.cat, F.epsilon[I])) out.push_back({"counit at unit monic", {I}});
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const int lhs = comp(c, phi(c.cod(f), c.cod(g)), c.tensor_mor(f, Fm(g)));
      const int rhs = comp(c, Fm(c.tensor_mor(f, g)), phi(c.dom(f), c.dom(g)));
      if (lhs != rhs) out.push_back({"strength naturality", {f, g}});
    }
  for (int b = 0; b < n; ++b)
    if (phi(I, b) != c.id(Fo(b))) out.push_back({"strength unit", {b}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = c.tensor(a, b);
      if (c.compose(F.epsilon[ab], phi(a, b)) != c.left_whisker(a, F.epsilon[b]))
        out.push_back({"strength and counit", {a, b}});
      const int lhs = c.compose(F.delta[ab], phi(a, b));
      const int rhs = comp(c, Fm(phi(a, b)), comp(c, phi(a, Fo(b)), c.left_whisker(a, F.delta[b])));
      if (lhs != rhs) out.push_back({"strength and comultiplication", {a, b}});
      for (int e = 0; e < n; ++e) {
        const int l2 = phi(ab, e);
        const int r2 = comp(c, phi(a, c.tensor(b, e)), c.left_whisker(a, phi(b, e)));
        if (l2 != r2) out.push_back({"strength associativity", {a, b, e}});
      }
    }
  for (int a = 0; a < n; ++a) {
    const int fa = Fo(a);
    const int lhs = comp(c, inverse(c, F.delta[fa]), Fm(F.delta[a]));
    const int rhs = comp(c, Fm(inverse(c, F.delta[a])), F.delta[fa]);
    if (lhs < 0 || lhs != rhs) out.push_back({"Frobenius law", {a}});
  }
  return out;
}

Subunit extract_subunit(const MonoidalCategory& c, const ComonadData& F) {
  const auto v = check_comonad(c, F);
  if (!v.empty()) throw PreconditionError("not a restriction comonad: " + v.front().to_string());
  const int I = c.unit();
  const int e = F.epsilon[I];
  const int FI = F.f_obj[I];
  const int direct = c.left_whisker(FI, e);
  if (!is_iso(c.cat, direct)) throw PreconditionError("F(I)⊗ε_I is not invertible");
  // ψ_{I,I} = F(σ_{I,I})∘φ_{I,I}∘σ_{F(I),I}, and F(I)⊗ε_I equals
  // ψ^{-1}∘δ^{-1}∘F(ψ)∘φ_{F(I),I}.
  const int n = c.num_objects();
  const int psi = comp(c, F.f_mor[c.braid(I, I)], comp(c, F.phi[I * n + I], c.braid(FI, I)));
  const int Fpsi = psi < 0 ? -1 : F.f_mor[psi];
  const int chain = comp(c, inverse(c, psi), comp(c, inverse(c, F.delta[I]), comp(c, Fpsi, F.phi[FI * n + I])));
  if (chain != direct) throw ConsistencyError("the δ/φ composite differs from F(I)⊗ε_I");
  const auto subs = enumerate_subunits(c);
  auto idx = subunit_index_of(c, subs, e);
  if (!idx) throw ConsistencyError("ε_I is not a subunit");
  return subs[*idx];
}

PropertyReport verify_comonad_bijection(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("comonads");
  const auto subs = enumerate_subunits(c);
  std::vector<ComonadData> built;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto F = restriction_comonad(c, subs[i]);
    const auto v = check_comonad(c, F);
    if (!v.empty()) return r.fail("comonad for " + obj(c, subs[i].domain) + " breaks " + v.front().to_string(), {subs[i].mono});
    const Subunit back = extract_subunit(c, F);
    if (back.mono != subs[i].mono) return r.fail("extracting the subunit does not round-trip", {subs[i].mono, back.mono});
    if (!(restriction_comonad(c, back) == F)) return r.fail("rebuilding the comonad does not round-trip", {subs[i].mono});
    for (std::size_t j = 0; j < built.size(); ++j)
      if (built[j] == F) return r.fail("two subunits give the same comonad", {subs[j].mono, subs[i].mono});
    built.push_back(F);
  }
  return r;
}

// Tensor ideals -------------------------------------------------------------

namespace {

// Coreflection of `a` into the object set `in`: (G(a), ε_a) or (-1, -1).
std::pair<int, int> coreflect(const MonoidalCategory& c, const std::vector<char>& in, int a) {
  const int n = c.num_objects();
  for (int x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (int e : c.cat.hom(x, a)) {
      bool universal = true;
      for (int b = 0; b < n && universal; ++b) {
        if (!in[b]) continue;
        const auto& src = c.cat.hom(b, x);
        const auto& dst = c.cat.hom(b, a);
        if (src.size() != dst.size()) {
          universal = false;
          break;
        }
        std::vector<int> img;
        for (int g : src) img.push_back(c.compose(e, g));
        std::sort(img.begin(), img.end());
        universal = std::adjacent_find(img.begin(), img.end()) == img.end();
      }
      if (universal) return {x, e};
    }
  }
  return {-1, -1};
}

bool ideal_conditions(const MonoidalCategory& c, const std::vector<char>& in, TensorIdeal* out) {
  const int n = c.num_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (in[a] && !in[b] && find_iso(c.cat, a, b)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (in[b] && !in[c.tensor(a, b)]) return false;
  std::vector<int> g(n), eps(n);
  for (int a = 0; a < n; ++a) {
    auto [x, e] = coreflect(c, in, a);
    if (x < 0) return false;
    g[a] = x;
    eps[a] = e;
  }
  const int ei = eps[c.unit()];
  if (!is_mono(c.cat, ei)) return false;
  for (int b = 0; b < n; ++b)
    if (in[b] && !is_iso(c.cat, c.left_whisker(b, ei))) return false;
  if (out) {
    out->objects.clear();
    for (int a = 0; a < n; ++a)
      if (in[a]) out->objects.push_back(a);
    out->coreflector_obj = g;
    out->counit = eps;
  }
  return true;
}

}  // namespace

bool is_tensor_ideal(const MonoidalCategory& c, const TensorIdeal& d) {
  std::vector<char> in(c.num_objects(), 0);
  for (int a : d.objects) in[a] = 1;
  if (!ideal_conditions(c, in, nullptr)) return false;
  const int n = c.num_objects();
  if (static_cast<int>(d.coreflector_obj.size()) != n || static_cast<int>(d.counit.size()) != n) return false;
  for (int a = 0; a < n; ++a) {
    const int e = d.counit[a];
    if (e < 0 || e >= c.num_morphisms() || c.cod(e) != a || c.dom(e) != d.coreflector_obj[a] || !in[c.dom(e)])
      return false;
  }
  return true;
}

std::vector<TensorIdeal> tensor_ideals(const MonoidalCategory& c) {
  const int n = c.num_objects();
  check_cap("ideal_objects", n, limits().max_ideal_objects);
  std::vector<TensorIdeal> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    std::vector<char> in(n);
    for (int a = 0; a < n; ++a) in[a] = mask_has(m, a);
    TensorIdeal d;
    if (ideal_conditions(c, in, &d)) out.push_back(std::move(d));
  }
  return out;
}

PropertyReport verify_ideal_bijection(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("ideals");
  const auto subs = enumerate_subunits(c);
  const auto ideals = tensor_ideals(c);
  std::vector<std::vector<int>> restrictions;
  for (const auto& s : subs) restrictions.push_back(restriction_category(c, s).sub.objects);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& d = ideals[i];
    if (!is_tensor_ideal(c, d)) return r.fail("ideal found by search fails the conditions", d.objects);
    auto idx = subunit_index_of(c, subs, d.counit[c.unit()]);
    if (!idx) return r.fail("counit at I of an ideal is not a subunit", d.objects);
    if (restrictions[*idx] != d.objects) return r.fail("ideal differs from the restriction to its subunit", d.objects);
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    bool found = false;
    for (const auto& d : ideals) found = found || d.objects == restrictions[i];
    if (!found) return r.fail("restriction to " + obj(c, subs[i].domain) + " is not among the ideals", {subs[i].mono});
  }
  if (ideals.size() != subs.size())
    return r.fail(std::to_string(ideals.size()) + " ideals but " + std::to_string(subs.size()) + " subunits");
  return r;
}

PropertyReport restriction_composition_law(const MonoidalCategory& c) {
  auto r = PropertyReport::ok("restriction composition");
  const auto l = subunit_semilattice(c);
  const int m = c.num_morphisms();
  std::vector<Mask> res(m, 0);
  for (int f = 0; f < m; ++f)
    for (int i = 0; i < l.size(); ++i)
      if (restricts_to(c, f, l.elements[i])) res[f] |= mask_bit(i);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      for (int s : mask_elements(res[f]))
        for (int t : mask_elements(res[g])) {
          const int st = l.meet(s, t);
          if (c.cod(g) == c.dom(f) && !mask_has(res[c.compose(f, g)], st))
            return r.fail("f∘g does not restrict to s∧t", {f, g, s, t});
          if (!mask_has(res[c.tensor_mor(f, g)], st)) return r.fail("f⊗g does not restrict to s∧t", {f, g, s, t});
        }
  for (int mm = 0; mm < m; ++mm)
    for (int e : c.cat.hom(c.cod(mm), c.dom(mm)))
      if (c.compose(e, mm) == c.id(c.dom(mm)) && res[mm] != res[e])
        return r.fail("restriction does not transfer along a retraction", {e, mm});
  return r;
}

}  // namespace ttw
