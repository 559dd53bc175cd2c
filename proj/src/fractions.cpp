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

#include "ttw/fractions.hpp"

#include <algorithm>
#include <map>

#include "ttw/errors.hpp"
#include "ttw/limits.hpp"
#include "union_find.hpp"

namespace ttw {

bool SigmaClass::contains(int f) const { return std::binary_search(members.begin(), members.end(), f); }

SigmaClass sigma(const MonoidalCategory& c, const std::vector<Subunit>& subunits) {
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  std::vector<std::string> origin(m);
  std::vector<int> work;
  auto add = [&](int f, std::string why) {
    if (f >= 0 && origin[f].empty()) {
      origin[f] = std::move(why);
      work.push_back(f);
    }
  };
  SigmaClass out;
  for (int a = 0; a < n; ++a) add(c.id(a), "identity");
  for (const auto& s : subunits) {
    out.subunits.push_back(s.mono);
    for (int a = 0; a < n; ++a)
      add(c.right_whisker(s.mono, a), c.cat.morphism(s.mono).label + "⊗" + c.cat.object_label(a));
  }
  std::vector<int> in;
  while (!work.empty()) {
    const int f = work.back();
    work.pop_back();
    in.push_back(f);
    for (int g : in) {
      if (c.cod(f) == c.dom(g)) add(c.compose(g, f), "composite");
      if (c.cod(g) == c.dom(f)) add(c.compose(f, g), "composite");
    }
    for (int x = 0; x < n; ++x) {
      add(c.right_whisker(f, x), "tensor");
      add(c.left_whisker(x, f), "tensor");
    }
  }
  for (int f = 0; f < m; ++f)
    if (!origin[f].empty()) {
      out.members.push_back(f);
      out.origin.push_back(origin[f]);
    }
  return out;
}

PropertyReport verify_right_fractions(const MonoidalCategory& c, const SigmaClass& s) {
  auto r = PropertyReport::ok("right fractions");
  const int m = c.num_morphisms();
  for (int a = 0; a < c.num_objects(); ++a)
    if (!s.contains(c.id(a))) return r.fail("identity not in the class", {c.id(a)});
  for (int f : s.members)
    for (int g : s.members)
      if (c.cod(f) == c.dom(g) && !s.contains(c.compose(g, f)))
        return r.fail("class not closed under composition", {g, f});
  // Ore: for f: P1 → B and t: P2 → B in Σ, some t': P' → P1 in Σ and f' with f∘t' = t∘f'.
  for (int t : s.members)
    for (int f = 0; f < m; ++f) {
      if (c.cod(f) != c.cod(t)) continue;
      bool found = false;
      for (int t2 : s.members) {
        if (c.cod(t2) != c.dom(f)) continue;
        const int lhs = c.compose(f, t2);
        for (int f2 : c.cat.hom(c.dom(t2), c.dom(t)))
          if (c.compose(t, f2) == lhs) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return r.fail("no Ore square for the pair", {t, f});
    }
  // Cancellation: t∘f = t∘g with t in Σ gives some u in Σ with f∘u = g∘u.
  for (int t : s.members)
    for (int f = 0; f < m; ++f)
      for (int g = f + 1; g < m; ++g) {
        if (c.cod(f) != c.dom(t) || c.dom(f) != c.dom(g) || c.cod(g) != c.dom(t)) continue;
        if (c.compose(t, f) != c.compose(t, g)) continue;
        bool found = false;
        for (int u : s.members)
          if (c.cod(u) == c.dom(f) && c.compose(f, u) == c.compose(g, u)) {
            found = true;
            break;
          }
        if (!found) return r.fail("no equalising member for a pair equalised by t", {t, f, g});
      }
  return r;
}

namespace {

std::optional<std::pair<int, int>> ore_filler(const MonoidalCategory& c, const SigmaClass& s, int f, int t) {
  for (int t2 : s.members) {
    if (c.cod(t2) != c.dom(f)) continue;
    const int lhs = c.compose(f, t2);
    for (int f2 : c.cat.hom(c.dom(t2), c.dom(t)))
      if (c.compose(t, f2) == lhs) return std::pair{t2, f2};
  }
  return std::nullopt;
}

// (d1, n1) ~ (d2, n2) when u, v exist with d1∘u = d2∘v in Σ and n1∘u = n2∘v.
bool related(const MonoidalCategory& c, const SigmaClass& s, FractionSpan x, FractionSpan y) {
  const int p1 = c.dom(x.denominator), p2 = c.dom(y.denominator);
  for (int q = 0; q < c.num_objects(); ++q)
    for (int u : c.cat.hom(q, p1)) {
      const int du = c.compose(x.denominator, u);
      if (!s.contains(du)) continue;
      const int nu = c.compose(x.numerator, u);
      for (int v : c.cat.hom(q, p2))
        if (c.compose(y.denominator, v) == du && c.compose(y.numerator, v) == nu) return true;
    }
  return false;
}

}  // namespace

LocalisedCategory localise(const MonoidalCategory& c, const SigmaClass& s) {
  const auto check = verify_right_fractions(c, s);
  if (!check.holds) throw PreconditionError("cannot localise: " + check.detail);
  const int n = c.num_objects();
  std::vector<FractionSpan> spans;
  for (int d : s.members)
    for (int b = 0; b < n; ++b)
      for (int num : c.cat.hom(c.dom(d), b)) {
        spans.push_back({d, num});
        check_cap("spans", static_cast<long long>(spans.size()), limits().max_spans);
      }
  std::sort(spans.begin(), spans.end());
  const int k = static_cast<int>(spans.size());
  auto source = [&](const FractionSpan& x) { return c.cod(x.denominator); };
  auto target = [&](const FractionSpan& x) { return c.cod(x.numerator); };

  LocalisedCategory out;
  detail::UnionFind uf(k);
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) groups[{source(spans[i]), target(spans[i])}].push_back(i);
  for (const auto& [ends, ids] : groups) {
    const int g = static_cast<int>(ids.size());
    std::vector<char> rel(static_cast<std::size_t>(g) * g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) rel[i * g + j] = related(c, s, spans[ids[i]], spans[ids[j]]);
    for (int i = 0; i < g; ++i) {
      if (!rel[i * g + i]) out.relation_is_equivalence = false;
      for (int j = 0; j < g; ++j) {
        if (!rel[i * g + j]) continue;
        uf.unite(ids[i], ids[j]);
        if (!rel[j * g + i]) out.relation_is_equivalence = false;
        for (int l = 0; l < g; ++l)
          if (rel[j * g + l] && !rel[i * g + l]) out.relation_is_equivalence = false;
      }
    }
  }
  std::map<int, int> class_of_root;
  std::vector<int> class_of(k);
  for (int i = 0; i < k; ++i) {
    const int root = uf.find(i);
    auto [it, fresh] = class_of_root.emplace(root, static_cast<int>(out.classes.size()));
    if (fresh) {
      out.classes.emplace_back();
      out.representative.push_back(spans[root]);
    }
    out.classes[it->second].push_back(spans[i]);
    class_of[i] = it->second;
  }
  std::map<FractionSpan, int> index;
  for (int i = 0; i < k; ++i) index[spans[i]] = class_of[i];
  auto class_at = [&](FractionSpan x) {
    auto it = index.find(x);
    if (it == index.end()) throw ConsistencyError("span outside the enumerated set");
    return it->second;
  };

  const int mm = static_cast<int>(out.classes.size());
  std::vector<Morphism> mors;
  for (int i = 0; i < mm; ++i) {
    const auto& rep = out.representative[i];
    std::string label;
    for (const auto& x : out.classes[i])
      if (x.denominator == c.id(source(x))) {
        label = c.cat.morphism(x.numerator).label;
        break;
      }
    if (label.empty())
      label = c.cat.morphism(rep.numerator).label + "∘" + c.cat.morphism(rep.denominator).label + "^-1";
    mors.push_back({i, source(rep), target(rep), label});
  }
  std::vector<int> identity(n);
  for (int a = 0; a < n; ++a) identity[a] = class_at({c.id(a), c.id(a)});
  std::vector<int> compose(static_cast<std::size_t>(mm) * mm, -1);
  for (int g = 0; g < mm; ++g)
    for (int f = 0; f < mm; ++f) {
      if (mors[f].cod != mors[g].dom) continue;
      const auto x = out.representative[f], y = out.representative[g];
      auto fill = ore_filler(c, s, x.numerator, y.denominator);
      if (!fill) throw ConsistencyError("no Ore filler while composing");
      compose[static_cast<std::size_t>(g) * mm + f] =
          class_at({c.compose(x.denominator, fill->first), c.compose(y.numerator, fill->second)});
    }
  out.cat.name = c.name.empty() ? std::string() : c.name + "[Σ^-1]";
  out.cat.cat = FinCategory(c.cat.objects(), mors, identity, compose);
  for (int f = 0; f < c.num_morphisms(); ++f) out.quotient.push_back(class_at({c.id(c.dom(f)), f}));
  MonoidalData md;
  md.unit = c.unit();
  md.tensor_obj.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) md.tensor_obj[a * n + b] = c.tensor(a, b);
  md.tensor_mor.resize(static_cast<std::size_t>(mm) * mm);
  for (int f = 0; f < mm; ++f)
    for (int g = 0; g < mm; ++g) {
      const auto x = out.representative[f], y = out.representative[g];
      const int d = c.tensor_mor(x.denominator, y.denominator);
      if (!s.contains(d)) throw ConsistencyError("class not closed under tensor");
      md.tensor_mor[static_cast<std::size_t>(f) * mm + g] = class_at({d, c.tensor_mor(x.numerator, y.numerator)});
    }
  md.braiding.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) md.braiding[a * n + b] = out.quotient[c.braid(a, b)];
  out.cat.mon = md;
  const auto v = validate(out.cat);
  if (!v.empty()) throw ConsistencyError("localised category breaks " + v.front().to_string());
  return out;
}

PropertyReport verify_localisation(const MonoidalCategory& c, const SigmaClass& s, const LocalisedCategory& l) {
  auto r = PropertyReport::ok("localisation");
  if (!l.relation_is_equivalence) return r.fail("span relation is not an equivalence relation");
  const auto& q = l.quotient;
  const auto& L = l.cat;
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (L.dom(q[f]) != c.dom(f) || L.cod(q[f]) != c.cod(f)) return r.fail("Q moves endpoints", {f});
    if (s.contains(f) && !is_iso(L.cat, q[f])) return r.fail("Q(f) not invertible for f in Σ", {f});
    for (int g = 0; g < c.num_morphisms(); ++g) {
      if (c.cod(f) == c.dom(g) && q[c.compose(g, f)] != L.compose(q[g], q[f]))
        return r.fail("Q does not preserve composition", {g, f});
      if (q[c.tensor_mor(f, g)] != L.tensor_mor(q[f], q[g])) return r.fail("Q does not preserve tensor", {f, g});
    }
  }
  for (int a = 0; a < c.num_objects(); ++a)
    if (q[c.id(a)] != L.id(a)) return r.fail("Q does not preserve identities", {a});
  // Every choice of representatives composes to the same class.
  std::map<FractionSpan, int> index;
  for (int i = 0; i < static_cast<int>(l.classes.size()); ++i)
    for (const auto& x : l.classes[i]) index[x] = i;
  for (int f = 0; f < L.num_morphisms(); ++f)
    for (int g = 0; g < L.num_morphisms(); ++g) {
      if (L.cod(f) != L.dom(g)) continue;
      const int expect = L.compose(g, f);
      for (const auto& x : l.classes[f])
        for (const auto& y : l.classes[g])
          for (int t2 : s.members) {
            if (c.cod(t2) != c.dom(x.numerator)) continue;
            for (int f2 : c.cat.hom(c.dom(t2), c.dom(y.denominator))) {
              if (c.compose(x.numerator, t2) != c.compose(y.denominator, f2)) continue;
              auto it = index.find({c.compose(x.denominator, t2), c.compose(y.numerator, f2)});
              if (it == index.end() || it->second != expect)
                return r.fail("composite depends on the representatives", {f, g});
            }
          }
    }
  return r;
}

PropertyReport restriction_localisation_bijection(const MonoidalCategory& c, const Subunit& s,
                                                  const LocalisedCategory& l) {
  auto r = PropertyReport::ok("restriction is localisation");
  const int S = s.domain;
  const int n = c.num_objects();
  std::vector<int> image(l.classes.size(), -1);
  for (std::size_t i = 0; i < l.classes.size(); ++i)
    for (const auto& x : l.classes[i]) {
      auto inv = is_iso(c.cat, c.left_whisker(S, x.denominator));
      if (!inv) return r.fail("S⊗d is not invertible", {x.denominator});
      const int g = c.compose(c.left_whisker(S, x.numerator), *inv);
      if (image[i] >= 0 && image[i] != g) return r.fail("image depends on the representative", {static_cast<int>(i)});
      image[i] = g;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> got;
      for (int k : l.cat.cat.hom(a, b)) got.push_back(image[k]);
      std::sort(got.begin(), got.end());
      if (std::adjacent_find(got.begin(), got.end()) != got.end()) return r.fail("map is not injective", {a, b});
      std::vector<int> want = c.cat.hom(c.tensor(S, a), c.tensor(S, b));
      std::sort(want.begin(), want.end());
      if (got != want) return r.fail("map is not onto C(S⊗A, S⊗B)", {a, b});
    }
  return r;
}

bool is_simple(const MonoidalCategory& c) { return enumerate_subunits(c).size() == 1; }

LocalisedCategory simple_quotient(const MonoidalCategory& c) {
  const auto firm = is_firm(c);
  if (!firm.holds) throw PreconditionError("not firm: " + firm.detail);
  return localise(c, sigma(c, enumerate_subunits(c)));
}

}  // namespace ttw
