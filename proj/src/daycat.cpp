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

#include "ttw/daycat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "ttw/errors.hpp"
#include "ttw/limits.hpp"
#include "ttw/restriction.hpp"
#include "union_find.hpp"

namespace ttw {
namespace {

int position(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

// Position of every morphism in its own hom-set.
std::vector<int> hom_positions(const MonoidalCategory& c) {
  std::vector<int> pos(c.num_morphisms());
  for (int a = 0; a < c.num_objects(); ++a)
    for (int b = 0; b < c.num_objects(); ++b) {
      const auto& h = c.cat.hom(a, b);
      for (int i = 0; i < static_cast<int>(h.size()); ++i) pos[h[i]] = i;
    }
  return pos;
}

// Backtracking over components object by object; naturality is checked for
// every morphism whose endpoints are both assigned.
void search_nats(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g, bool bijective,
                 const std::function<bool(const NatTrans&)>& found) {
  const int n = c.num_objects();
  NatTrans t(n);
  std::function<bool(int)> rec = [&](int a) -> bool {
    if (a == n) return found(t);
    const int fs = f.sizes[a], gs = g.sizes[a];
    if (bijective && fs != gs) return true;
    std::vector<int> comp(fs, 0);
    if (bijective) std::iota(comp.begin(), comp.end(), 0);
    if (fs > 0 && gs == 0) return true;
    auto consistent = [&]() {
      t[a] = comp;
      for (int b = 0; b <= a; ++b)
        for (int dir = 0; dir < 2; ++dir) {
          const int from = dir == 0 ? a : b, to = dir == 0 ? b : a;
          for (int m : c.cat.hom(from, to))
            for (int v = 0; v < f.sizes[to]; ++v)
              if (g.action[m][t[to][v]] != t[from][f.action[m][v]]) return false;
        }
      return true;
    };
    while (true) {
      if (consistent() && !rec(a + 1)) return false;
      if (bijective) {
        if (!std::next_permutation(comp.begin(), comp.end())) break;
      } else {
        int i = 0;
        while (i < fs && ++comp[i] == gs) comp[i++] = 0;
        if (i == fs) break;
      }
    }
    return true;
  };
  rec(0);
}

}  // namespace

ViolationList check_presheaf(const MonoidalCategory& c, const Presheaf& f) {
  ViolationList out;
  const int n = c.num_objects(), m = c.num_morphisms();
  if (static_cast<int>(f.sizes.size()) != n || static_cast<int>(f.action.size()) != m) {
    out.push_back({"presheaf table shape", {}});
    return out;
  }
  for (int a = 0; a < n; ++a)
    if (f.sizes[a] < 0) out.push_back({"negative value count", {a}});
  for (int g = 0; g < m; ++g) {
    const auto& act = f.action[g];
    if (static_cast<int>(act.size()) != f.sizes[c.cod(g)]) {
      out.push_back({"action size", {g}});
      continue;
    }
    for (int v : act)
      if (v < 0 || v >= f.sizes[c.dom(g)]) out.push_back({"action value out of range", {g}});
  }
  if (!out.empty()) return out;
  for (int a = 0; a < n; ++a)
    for (int v = 0; v < f.sizes[a]; ++v)
      if (f.action[c.id(a)][v] != v) {
        out.push_back({"action of identity", {a, v}});
        break;
      }
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      if (c.cod(g) != c.dom(h)) continue;
      const int hg = c.compose(h, g);
      for (int v = 0; v < f.sizes[c.cod(h)]; ++v)
        if (f.action[hg][v] != f.action[g][f.action[h][v]]) {
          out.push_back({"action of composite", {h, g, v}});
          break;
        }
    }
  return out;
}

Presheaf yoneda(const MonoidalCategory& c, int a) {
  Presheaf p;
  const auto pos = hom_positions(c);
  for (int b = 0; b < c.num_objects(); ++b) p.sizes.push_back(static_cast<int>(c.cat.hom(b, a).size()));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    std::vector<int> act;
    for (int x : c.cat.hom(c.cod(f), a)) act.push_back(pos[c.compose(x, f)]);
    p.action.push_back(std::move(act));
  }
  return p;
}

Presheaf unit_presheaf(const MonoidalCategory& c) { return yoneda(c, c.unit()); }

bool is_natural(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g, const NatTrans& t) {
  if (static_cast<int>(t.size()) != c.num_objects()) return false;
  for (int a = 0; a < c.num_objects(); ++a) {
    if (static_cast<int>(t[a].size()) != f.sizes[a]) return false;
    for (int v : t[a])
      if (v < 0 || v >= g.sizes[a]) return false;
  }
  for (int m = 0; m < c.num_morphisms(); ++m)
    for (int v = 0; v < f.sizes[c.cod(m)]; ++v)
      if (g.action[m][t[c.cod(m)][v]] != t[c.dom(m)][f.action[m][v]]) return false;
  return true;
}

NatTrans identity_nat(const Presheaf& f) {
  NatTrans t;
  for (int s : f.sizes) {
    std::vector<int> comp(s);
    std::iota(comp.begin(), comp.end(), 0);
    t.push_back(std::move(comp));
  }
  return t;
}

NatTrans compose_nat(const NatTrans& g, const NatTrans& f) {
  NatTrans t(f.size());
  for (std::size_t a = 0; a < f.size(); ++a)
    for (int v : f[a]) t[a].push_back(g[a][v]);
  return t;
}

bool is_invertible_nat(const Presheaf& f, const Presheaf& g, const NatTrans& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (f.sizes[a] != g.sizes[a]) return false;
    std::vector<int> comp = t[a];
    std::sort(comp.begin(), comp.end());
    if (std::adjacent_find(comp.begin(), comp.end()) != comp.end()) return false;
  }
  return true;
}

std::vector<NatTrans> natural_transformations(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g) {
  std::vector<NatTrans> out;
  search_nats(c, f, g, false, [&](const NatTrans& t) {
    out.push_back(t);
    check_cap("cocones", static_cast<long long>(out.size()), limits().max_cocones);
    return true;
  });
  return out;
}

std::optional<NatTrans> find_presheaf_iso(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g) {
  std::optional<NatTrans> out;
  search_nats(c, f, g, true, [&](const NatTrans& t) {
    out = t;
    return false;
  });
  return out;
}

Presheaf random_thin_presheaf(const MonoidalCategory& c, std::uint64_t seed, int max_values) {
  if (!c.cat.is_thin()) throw PreconditionError("random presheaves need a thin category");
  const int n = c.num_objects(), m = c.num_morphisms();
  // Covers: non-identity f: a → b with no object strictly in between.
  std::vector<int> covers;
  for (int f = 0; f < m; ++f) {
    const int a = c.dom(f), b = c.cod(f);
    if (a == b) continue;
    bool cover = true;
    for (int x = 0; x < n && cover; ++x)
      if (x != a && x != b && !c.cat.hom(a, x).empty() && !c.cat.hom(x, b).empty()) cover = false;
    if (cover) covers.push_back(f);
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Presheaf p;
    p.sizes.resize(n);
    for (int a = 0; a < n; ++a) p.sizes[a] = static_cast<int>(rng() % (max_values + 1));
    p.action.assign(m, {});
    std::vector<char> done(m, 0);
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      const int id = c.id(a);
      p.action[id].resize(p.sizes[a]);
      std::iota(p.action[id].begin(), p.action[id].end(), 0);
      done[id] = 1;
    }
    for (int f : covers) {
      const int a = c.dom(f), b = c.cod(f);
      if (p.sizes[b] > 0 && p.sizes[a] == 0) ok = false;
      if (!ok) break;
      for (int v = 0; v < p.sizes[b]; ++v) p.action[f].push_back(static_cast<int>(rng() % p.sizes[a]));
      done[f] = 1;
    }
    if (!ok) continue;
    // Remaining morphisms as composites, longest paths last.
    bool progress = true;
    while (progress) {
      progress = false;
      for (int f = 0; f < m; ++f) {
        if (done[f]) continue;
        for (int g : covers) {
          if (c.dom(g) != c.dom(f)) continue;
          for (int h = 0; h < m; ++h)
            if (done[h] && c.dom(h) == c.cod(g) && c.cod(h) == c.cod(f) && c.compose(h, g) == f) {
              for (int v = 0; v < p.sizes[c.cod(f)]; ++v) p.action[f].push_back(p.action[g][p.action[h][v]]);
              done[f] = 1;
              progress = true;
              break;
            }
          if (done[f]) break;
        }
      }
    }
    if (std::find(done.begin(), done.end(), 0) != done.end()) continue;
    if (check_presheaf(c, p).empty()) return p;
  }
  throw ConsistencyError("no functorial random presheaf found");
}

// Day convolution --------------------------------------------------------------

int DayTensorResult::class_index(const MonoidalCategory& c, int a, const DayTriple& t) const {
  const int n = c.num_objects();
  const int hp = position(c.cat.hom(a, c.tensor(t.b, t.c)), t.h);
  if (hp < 0 || t.x < 0 || t.x >= left_sizes[t.b] || t.y < 0 || t.y >= right_sizes[t.c])
    throw ConsistencyError("triple outside the enumeration");
  return class_of[a][offsets[a][t.b * n + t.c] + (hp * left_sizes[t.b] + t.x) * right_sizes[t.c] + t.y];
}

DayTensorResult day_tensor(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g) {
  const int n = c.num_objects();
  for (int a = 0; a < n; ++a) {
    check_cap("presheaf_values", f.sizes[a], limits().max_presheaf_values);
    check_cap("presheaf_values", g.sizes[a], limits().max_presheaf_values);
  }
  const auto pos = hom_positions(c);
  DayTensorResult out;
  out.left_sizes = f.sizes;
  out.right_sizes = g.sizes;
  out.triples.resize(n);
  out.offsets.resize(n);
  out.class_of.resize(n);
  out.representative.resize(n);
  out.presheaf.sizes.resize(n);
  for (int a = 0; a < n; ++a) {
    auto& ts = out.triples[a];
    auto& off = out.offsets[a];
    off.assign(static_cast<std::size_t>(n) * n, 0);
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) {
        off[b * n + cc] = static_cast<int>(ts.size());
        for (int h : c.cat.hom(a, c.tensor(b, cc)))
          for (int x = 0; x < f.sizes[b]; ++x)
            for (int y = 0; y < g.sizes[cc]; ++y) ts.push_back({b, cc, h, x, y});
      }
    auto index = [&](int b, int cc, int h, int x, int y) {
      return off[b * n + cc] + (pos[h] * f.sizes[b] + x) * g.sizes[cc] + y;
    };
    detail::UnionFind uf(static_cast<int>(ts.size()));
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int h : c.cat.hom(a, c.tensor(b, cc)))
          for (int b2 = 0; b2 < n; ++b2)
            for (int fm : c.cat.hom(b, b2))
              for (int c2 = 0; c2 < n; ++c2)
                for (int gm : c.cat.hom(cc, c2)) {
                  const int h2 = c.compose(c.tensor_mor(fm, gm), h);
                  for (int x2 = 0; x2 < f.sizes[b2]; ++x2)
                    for (int y2 = 0; y2 < g.sizes[c2]; ++y2)
                      uf.unite(index(b, cc, h, f.action[fm][x2], g.action[gm][y2]), index(b2, c2, h2, x2, y2));
                }
    std::map<int, int> cls;
    for (int i = 0; i < static_cast<int>(ts.size()); ++i) {
      auto [it, fresh] = cls.emplace(uf.find(i), static_cast<int>(out.representative[a].size()));
      if (fresh) out.representative[a].push_back(i);
      out.class_of[a].push_back(it->second);
    }
    out.presheaf.sizes[a] = static_cast<int>(out.representative[a].size());
  }
  // Action (h, x, y) ↦ (h∘u, x, y), checked on every member of a class.
  out.presheaf.action.resize(c.num_morphisms());
  for (int u = 0; u < c.num_morphisms(); ++u) {
    const int a2 = c.dom(u), a = c.cod(u);
    std::vector<int> act(out.presheaf.sizes[a], -1);
    for (int i = 0; i < static_cast<int>(out.triples[a].size()); ++i) {
      const auto& t = out.triples[a][i];
      const int h2 = c.compose(t.h, u);
      const int j = out.offsets[a2][t.b * n + t.c] + (pos[h2] * f.sizes[t.b] + t.x) * g.sizes[t.c] + t.y;
      const int k = out.class_of[a][i];
      const int img = out.class_of[a2][j];
      if (act[k] >= 0 && act[k] != img) throw ConsistencyError("Day tensor action is not well defined");
      act[k] = img;
    }
    out.presheaf.action[u] = std::move(act);
  }
  return out;
}

NatTrans day_tensor_mor(const MonoidalCategory& c, const DayTensorResult& from, const DayTensorResult& to,
                        const NatTrans& phi, const NatTrans& psi) {
  NatTrans t(c.num_objects());
  for (int a = 0; a < c.num_objects(); ++a) {
    t[a].assign(from.presheaf.sizes[a], -1);
    for (int i = 0; i < static_cast<int>(from.triples[a].size()); ++i) {
      const auto& x = from.triples[a][i];
      const int img = to.class_index(c, a, {x.b, x.c, x.h, phi[x.b][x.x], psi[x.c][x.y]});
      int& slot = t[a][from.class_of[a][i]];
      if (slot >= 0 && slot != img) throw ConsistencyError("tensor of transformations is not well defined");
      slot = img;
    }
  }
  return t;
}

DayUnitors day_unitors(const MonoidalCategory& c, const Presheaf& f) {
  const Presheaf unit = unit_presheaf(c);
  const int I = c.unit();
  DayUnitors u;
  u.right_tensor = day_tensor(c, f, unit);
  u.left_tensor = day_tensor(c, unit, f);
  const int n = c.num_objects();
  u.rho.resize(n);
  u.lambda.resize(n);
  for (int a = 0; a < n; ++a) {
    u.rho[a].assign(u.right_tensor.presheaf.sizes[a], -1);
    for (int i = 0; i < static_cast<int>(u.right_tensor.triples[a].size()); ++i) {
      const auto& t = u.right_tensor.triples[a][i];
      const int ym = c.cat.hom(t.c, I)[t.y];
      const int m = c.compose(c.left_whisker(t.b, ym), t.h);
      const int v = f.action[m][t.x];
      int& slot = u.rho[a][u.right_tensor.class_of[a][i]];
      if (slot >= 0 && slot != v) throw ConsistencyError("right unitor is not well defined");
      slot = v;
    }
    u.lambda[a].assign(u.left_tensor.presheaf.sizes[a], -1);
    for (int i = 0; i < static_cast<int>(u.left_tensor.triples[a].size()); ++i) {
      const auto& t = u.left_tensor.triples[a][i];
      const int xm = c.cat.hom(t.b, I)[t.x];
      const int m = c.compose(c.right_whisker(xm, t.c), t.h);
      const int v = f.action[m][t.y];
      int& slot = u.lambda[a][u.left_tensor.class_of[a][i]];
      if (slot >= 0 && slot != v) throw ConsistencyError("left unitor is not well defined");
      slot = v;
    }
  }
  if (!is_natural(c, u.right_tensor.presheaf, f, u.rho) || !is_natural(c, u.left_tensor.presheaf, f, u.lambda))
    throw ConsistencyError("unitor is not natural");
  if (!is_invertible_nat(u.right_tensor.presheaf, f, u.rho) || !is_invertible_nat(u.left_tensor.presheaf, f, u.lambda))
    throw ConsistencyError("unitor is not invertible");
  return u;
}

// Sieves ---------------------------------------------------------------------

bool Sieve::contains(int a, int f) const { return std::binary_search(members[a].begin(), members[a].end(), f); }

bool Sieve::subset_of(const Sieve& o) const {
  for (std::size_t a = 0; a < members.size(); ++a)
    if (!std::includes(o.members[a].begin(), o.members[a].end(), members[a].begin(), members[a].end())) return false;
  return true;
}

std::vector<Sieve> sieves(const MonoidalCategory& c) {
  const int I = c.unit();
  const int n = c.num_objects();
  std::vector<int> elems;
  for (int a = 0; a < n; ++a)
    for (int f : c.cat.hom(a, I)) elems.push_back(f);
  std::sort(elems.begin(), elems.end());
  const int k = static_cast<int>(elems.size());
  std::vector<std::vector<int>> closure(k);
  for (int i = 0; i < k; ++i) {
    const int e = elems[i];
    for (int b = 0; b < n; ++b)
      for (int f : c.cat.hom(b, c.dom(e))) closure[i].push_back(position(elems, c.compose(e, f)));
  }
  std::vector<Sieve> out;
  std::vector<char> state(k, 0);  // 0 open, 1 in, 2 out
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      Sieve s;
      s.members.resize(n);
      for (int j = 0; j < k; ++j)
        if (state[j] == 1) s.members[c.dom(elems[j])].push_back(elems[j]);
      out.push_back(std::move(s));
      check_cap("sieves", static_cast<long long>(out.size()), limits().max_sieves);
      return;
    }
    if (state[i] != 0) {
      rec(i + 1);
      return;
    }
    state[i] = 2;
    rec(i + 1);
    state[i] = 0;
    bool ok = true;
    for (int j : closure[i]) ok = ok && state[j] != 2;
    if (ok) {
      const auto saved = state;
      for (int j : closure[i]) state[j] = 1;
      state[i] = 1;
      rec(i + 1);
      state = saved;
    }
    state[i] = 0;
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Sieve& x, const Sieve& y) {
    std::size_t sx = 0, sy = 0;
    for (const auto& v : x.members) sx += v.size();
    for (const auto& v : y.members) sy += v.size();
    return sx < sy;
  });
  return out;
}

Presheaf sieve_presheaf(const MonoidalCategory& c, const Sieve& s) {
  Presheaf p;
  for (const auto& v : s.members) p.sizes.push_back(static_cast<int>(v.size()));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    std::vector<int> act;
    for (int x : s.members[c.cod(f)]) act.push_back(position(s.members[c.dom(f)], c.compose(x, f)));
    p.action.push_back(std::move(act));
  }
  return p;
}

bool sieve_is_subunit_by_factorisation(const MonoidalCategory& c, const Sieve& s) {
  const Presheaf p = sieve_presheaf(c, s);
  const auto t = day_tensor(c, p, p);
  for (int a = 0; a < c.num_objects(); ++a) {
    std::vector<int> value(t.presheaf.sizes[a], -1);
    for (int i = 0; i < static_cast<int>(t.triples[a].size()); ++i) {
      const auto& x = t.triples[a][i];
      const int m = c.compose(c.tensor_mor(s.members[x.b][x.x], s.members[x.c][x.y]), x.h);
      int& slot = value[t.class_of[a][i]];
      if (slot >= 0 && slot != m) throw ConsistencyError("multiplication of a sieve is not well defined");
      slot = m;
    }
    std::sort(value.begin(), value.end());
    if (value != s.members[a]) return false;
  }
  return true;
}

bool sieve_is_subunit_by_tensor(const MonoidalCategory& c, const Sieve& s) {
  const Presheaf p = sieve_presheaf(c, s);
  const Presheaf unit = unit_presheaf(c);
  NatTrans incl(c.num_objects());
  for (int a = 0; a < c.num_objects(); ++a)
    for (int x : s.members[a]) incl[a].push_back(position(c.cat.hom(a, c.unit()), x));
  const auto ss = day_tensor(c, p, p);
  const auto is = day_tensor(c, unit, p);
  const auto t = day_tensor_mor(c, ss, is, incl, identity_nat(p));
  return is_invertible_nat(ss.presheaf, is.presheaf, t);
}

std::vector<Sieve> presheaf_subunits(const MonoidalCategory& c) {
  std::vector<Sieve> out;
  for (auto& s : sieves(c)) {
    const bool a = sieve_is_subunit_by_factorisation(c, s);
    const bool b = sieve_is_subunit_by_tensor(c, s);
    if (a != b) throw ConsistencyError("the two sieve subunit tests disagree");
    if (a) out.push_back(std::move(s));
  }
  return out;
}

FinPoset sieve_poset(const MonoidalCategory& c, const std::vector<Sieve>& s) {
  std::vector<std::string> labels;
  for (const auto& x : s) {
    std::string l = "{";
    bool first = true;
    for (const auto& v : x.members)
      for (int f : v) {
        l += (first ? "" : ",") + c.cat.morphism(f).label;
        first = false;
      }
    labels.push_back(l + "}");
  }
  const std::size_t k = s.size();
  std::vector<char> leq(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = s[i].subset_of(s[j]);
  return FinPoset(labels, leq);
}

// Broad presheaves --------------------------------------------------------------

const char* to_string(Flavour f) {
  switch (f) {
    case Flavour::finite: return "finite";
    case Flavour::directed: return "directed";
    case Flavour::all: return "all";
  }
  return "all";
}

std::optional<Flavour> flavour_from_string(const std::string& s) {
  if (s == "finite") return Flavour::finite;
  if (s == "directed") return Flavour::directed;
  if (s == "all") return Flavour::all;
  return std::nullopt;
}

DownsetLattice flavour_downsets(const SubunitSemilattice& l, Flavour f) {
  switch (f) {
    case Flavour::finite: return finitely_bounded_downsets(l.lattice);
    case Flavour::directed: return directed_downsets(l.lattice);
    case Flavour::all: return downsets(l.lattice);
  }
  return downsets(l.lattice);
}

std::vector<std::vector<int>> broad_values(const MonoidalCategory& c, const SubunitSemilattice& l,
                                           const BroadSpec& b) {
  std::vector<std::vector<int>> out(c.num_objects());
  for (int a = 0; a < c.num_objects(); ++a)
    for (int f : c.cat.hom(a, b.x))
      for (int s : mask_elements(b.u))
        if (restricts_to(c, f, l.elements[s])) {
          out[a].push_back(f);
          break;
        }
  return out;
}

Presheaf broad_presheaf(const MonoidalCategory& c, const SubunitSemilattice& l, const BroadSpec& b) {
  if (!l.lattice.poset.is_downset(b.u)) throw PreconditionError("family is not a downset");
  if (b.x < 0 || b.x >= c.num_objects()) throw PreconditionError("object out of range");
  const auto vals = broad_values(c, l, b);
  Presheaf p;
  for (const auto& v : vals) p.sizes.push_back(static_cast<int>(v.size()));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    std::vector<int> act;
    for (int x : vals[c.cod(f)]) {
      const int i = position(vals[c.dom(f)], c.compose(x, f));
      if (i < 0) throw ConsistencyError("broad presheaf not closed under precomposition");
      act.push_back(i);
    }
    p.action.push_back(std::move(act));
  }
  return p;
}

Mask tensor_families(const SubunitSemilattice& l, Mask u, Mask v) {
  Mask m = 0;
  for (int s : mask_elements(u))
    for (int t : mask_elements(v)) m |= mask_bit(l.meet(s, t));
  return l.lattice.poset.down_closure(m);
}

PropertyReport broad_tensor_lemma(const MonoidalCategory& c, const SubunitSemilattice& l, const BroadSpec& a,
                                  const BroadSpec& b) {
  auto r = PropertyReport::ok("broad tensor");
  const auto va = broad_values(c, l, a), vb = broad_values(c, l, b);
  const BroadSpec ab{tensor_families(l, a.u, b.u), c.tensor(a.x, b.x)};
  const auto vab = broad_values(c, l, ab);
  const auto t = day_tensor(c, broad_presheaf(c, l, a), broad_presheaf(c, l, b));
  for (int x = 0; x < c.num_objects(); ++x) {
    std::vector<int> value(t.presheaf.sizes[x], -1);
    for (int i = 0; i < static_cast<int>(t.triples[x].size()); ++i) {
      const auto& tr = t.triples[x][i];
      const int m = c.compose(c.tensor_mor(va[tr.b][tr.x], vb[tr.c][tr.y]), tr.h);
      int& slot = value[t.class_of[x][i]];
      if (slot >= 0 && slot != m) return r.fail("comparison map is not well defined", {x});
      slot = m;
    }
    std::sort(value.begin(), value.end());
    if (std::adjacent_find(value.begin(), value.end()) != value.end()) return r.fail("comparison map is not injective", {x});
    std::vector<int> want = vab[x];
    std::sort(want.begin(), want.end());
    if (value != want) return r.fail("comparison map does not hit [U⊗V, X⊗Y]", {x});
  }
  return r;
}

// Broad completion -------------------------------------------------------------

std::optional<int> BroadCategory::object_of(const BroadSpec& b) const {
  for (int k = 0; k < static_cast<int>(specs.size()); ++k)
    if (specs[k] == b) return k;
  return std::nullopt;
}

std::optional<int> BroadCategory::morphism_of(int from, int to, const std::vector<int>& l) const {
  for (int m : cat.cat.hom(from, to))
    if (legs[m] == l) return m;
  return std::nullopt;
}

BroadCategory broad_category(const MonoidalCategory& c, Flavour flavour) {
  const auto stiff = is_stiff(c);
  if (!stiff.holds) throw PreconditionError("not stiff: " + stiff.detail);
  BroadCategory out;
  out.flavour = flavour;
  out.base = subunit_semilattice(c);
  const auto& l = out.base;
  const auto fam = flavour_downsets(l, flavour);
  const int n = c.num_objects();
  check_cap("broad_objects", static_cast<long long>(fam.size()) * n, limits().max_broad_objects);
  std::vector<std::string> labels;
  for (Mask u : fam.sets)
    for (int x = 0; x < n; ++x) {
      out.specs.push_back({u, x});
      labels.push_back("[" + mask_label(l.lattice.poset, u) + "," + c.cat.object_label(x) + "]");
    }
  const int k = static_cast<int>(out.specs.size());
  const Mask all = fam.sets.back();

  std::vector<Morphism> mors;
  std::vector<std::vector<std::vector<int>>> homs(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    const auto& [u, x] = out.specs[i];
    const auto diag = subunit_diagram(c, l, u, x);
    for (int j = 0; j < k; ++j) {
      const auto& [v, y] = out.specs[j];
      for (const auto& cc : cocones_into(c.cat, diag, y)) {
        bool ok = true;
        for (int leg : cc.legs) {
          bool some = false;
          for (int t : mask_elements(v)) some = some || restricts_to(c, leg, l.elements[t]).has_value();
          ok = ok && some;
        }
        if (!ok) continue;
        const int id = static_cast<int>(mors.size());
        mors.push_back({id, i, j, ""});
        out.legs.push_back(cc.legs);
        check_cap("morphisms", id + 1, limits().max_morphisms);
      }
    }
  }
  const int m = static_cast<int>(mors.size());
  // Lookup by (from, to, legs) before the FinCategory exists.
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int f = 0; f < m; ++f) index[{mors[f].dom, mors[f].cod, out.legs[f]}] = f;
  auto find = [&](int from, int to, const std::vector<int>& legs) {
    auto it = index.find({from, to, legs});
    if (it == index.end()) throw ConsistencyError("cocone outside the enumerated hom-set");
    return it->second;
  };
  auto whiskers = [&](Mask u, int x) {
    std::vector<int> legs;
    for (int s : mask_elements(u)) legs.push_back(c.right_whisker(l.elements[s].mono, x));
    return legs;
  };
  std::vector<int> identity(k);
  for (int i = 0; i < k; ++i) identity[i] = find(i, i, whiskers(out.specs[i].u, out.specs[i].x));
  int counter = 0;
  for (int f = 0; f < m; ++f)
    mors[f].label = identity[mors[f].dom] == f ? "id_" + labels[mors[f].dom] : "m" + std::to_string(counter++);

  std::vector<int> compose(static_cast<std::size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (mors[f].cod != mors[g].dom) continue;
      const auto& [v, y] = out.specs[mors[g].dom];
      std::vector<int> legs;
      for (int leg : out.legs[f]) {
        std::optional<int> e;
        const auto vt = mask_elements(v);
        for (std::size_t j = 0; j < vt.size() && !e; ++j)
          if (auto h = factor_through(c.cat, leg, c.right_whisker(l.elements[vt[j]].mono, y)))
            e = c.compose(out.legs[g][j], *h);
        if (!e) throw ConsistencyError("leg does not restrict to the target family");
        legs.push_back(*e);
      }
      compose[static_cast<std::size_t>(g) * m + f] = find(mors[f].dom, mors[g].cod, legs);
    }

  MonoidalData md;
  md.tensor_obj.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const BroadSpec t{tensor_families(l, out.specs[i].u, out.specs[j].u), c.tensor(out.specs[i].x, out.specs[j].x)};
      auto o = out.object_of(t);
      if (!o) throw ConsistencyError("flavour not closed under tensor");
      md.tensor_obj[static_cast<std::size_t>(i) * k + j] = *o;
    }
  md.unit = *out.object_of({all, c.unit()});
  md.tensor_mor.resize(static_cast<std::size_t>(m) * m);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const auto& s1 = out.specs[mors[f].dom];
      const auto& s2 = out.specs[mors[g].dom];
      const Mask r = tensor_families(l, s1.u, s2.u);
      const auto u1 = mask_elements(s1.u), u2 = mask_elements(s2.u);
      std::vector<int> legs;
      for (int ri : mask_elements(r)) {
        int leg = -1;
        for (std::size_t i = 0; i < u1.size() && leg < 0; ++i)
          for (std::size_t j = 0; j < u2.size() && leg < 0; ++j) {
            const auto& s = l.elements[u1[i]];
            const auto& t = l.elements[u2[j]];
            auto inc = factor_through(c.cat, l.elements[ri].mono, c.tensor_mor(s.mono, t.mono));
            if (!inc) continue;
            const int swap = c.tensor_mor(c.tensor_mor(c.id(s.domain), c.braid(t.domain, s1.x)), c.id(s2.x));
            leg = c.cat.compose_all({c.tensor_mor(out.legs[f][i], out.legs[g][j]), swap,
                                 c.right_whisker(*inc, c.tensor(s1.x, s2.x))});
          }
        if (leg < 0) throw ConsistencyError("no generating pair below a tensor member");
        legs.push_back(leg);
      }
      md.tensor_mor[static_cast<std::size_t>(f) * m + g] =
          find(md.tensor_obj[static_cast<std::size_t>(mors[f].dom) * k + mors[g].dom],
               md.tensor_obj[static_cast<std::size_t>(mors[f].cod) * k + mors[g].cod], legs);
    }
  md.braiding.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int xy = c.tensor(out.specs[i].x, out.specs[j].x);
      const Mask r = tensor_families(l, out.specs[i].u, out.specs[j].u);
      std::vector<int> legs;
      for (int ri : mask_elements(r))
        legs.push_back(c.compose(c.braid(out.specs[i].x, out.specs[j].x), c.right_whisker(l.elements[ri].mono, xy)));
      md.braiding[static_cast<std::size_t>(i) * k + j] =
          find(md.tensor_obj[static_cast<std::size_t>(i) * k + j], md.tensor_obj[static_cast<std::size_t>(j) * k + i], legs);
    }
  out.cat.name = (c.name.empty() ? std::string("C") : c.name) + "/broad-" + to_string(flavour);
  out.cat.cat = FinCategory(labels, mors, identity, compose);
  out.cat.mon = md;
  const auto v = validate(out.cat);
  if (!v.empty()) throw ConsistencyError("broad category breaks " + v.front().to_string());

  for (int x = 0; x < n; ++x) out.embed_obj.push_back(*out.object_of({all, x}));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    std::vector<int> legs;
    for (int s : mask_elements(all)) legs.push_back(c.compose(f, c.right_whisker(l.elements[s].mono, c.dom(f))));
    out.embed_mor.push_back(find(out.embed_obj[c.dom(f)], out.embed_obj[c.cod(f)], legs));
  }
  return out;
}

PropertyReport broad_hom_matches_presheaf(const MonoidalCategory& c, const BroadCategory& b, int from, int to) {
  auto r = PropertyReport::ok("broad hom-sets");
  const auto& l = b.base;
  const auto& sa = b.specs[from];
  const auto& sb = b.specs[to];
  const auto va = broad_values(c, l, sa), vb = broad_values(c, l, sb);
  const auto nats = natural_transformations(c, broad_presheaf(c, l, sa), broad_presheaf(c, l, sb));
  std::vector<int> hit;
  for (const auto& t : nats) {
    std::vector<int> legs;
    for (int s : mask_elements(sa.u)) {
      const int sx = c.tensor(l.elements[s].domain, sa.x);
      const int i = position(va[sx], c.right_whisker(l.elements[s].mono, sa.x));
      if (i < 0) return r.fail("s⊗X is missing from [U,X]", {from, s});
      legs.push_back(vb[sx][t[sx][i]]);
    }
    auto m = b.morphism_of(from, to, legs);
    if (!m) return r.fail("transformation gives no cocone in the hom-set", {from, to});
    hit.push_back(*m);
  }
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) return r.fail("two transformations give one cocone", {from, to});
  if (hit.size() != b.cat.cat.hom(from, to).size()) return r.fail("some cocone has no transformation", {from, to});
  return r;
}

PropertyReport verify_broad_subunits(const BroadCategory& b) {
  auto r = PropertyReport::ok("broad subunits");
  const auto& l = b.base;
  const auto fam = flavour_downsets(l, b.flavour);
  const auto subs = enumerate_subunits(b.cat);
  const int unit = b.cat.unit();
  std::vector<int> image;
  for (int i = 0; i < fam.size(); ++i) {
    const Mask u = fam.sets[i];
    auto o = b.object_of({u, b.cat.num_objects() > 0 ? b.specs[unit].x : 0});
    if (!o) return r.fail("no object [U, I]", {i});
    std::vector<int> legs;
    for (int s : mask_elements(u)) legs.push_back(l.elements[s].mono);
    auto m = b.morphism_of(*o, unit, legs);
    if (!m) return r.fail("no inclusion [U, I] → Î", {i});
    auto k = subunit_index_of(b.cat, subs, *m);
    if (!k) return r.fail("Û is not a subunit", {i});
    image.push_back(*k);
  }
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return r.fail("two downsets give one subunit");
  if (image.size() != subs.size())
    return r.fail(std::to_string(subs.size()) + " subunits but " + std::to_string(image.size()) + " downsets");
  for (int i = 0; i < fam.size(); ++i)
    for (int j = 0; j < fam.size(); ++j) {
      const bool incl = (fam.sets[i] & ~fam.sets[j]) == 0;
      if (incl != subunit_leq(b.cat, subs[image[i]], subs[image[j]])) return r.fail("order differs from inclusion", {i, j});
    }
  return r;
}

// Functor extension ------------------------------------------------------------

ViolationList check_monoidal_functor(const MonoidalCategory& c, const MonoidalCategory& d, const MonoidalFunctor& f) {
  ViolationList out;
  if (static_cast<int>(f.obj.size()) != c.num_objects() || static_cast<int>(f.mor.size()) != c.num_morphisms()) {
    out.push_back({"functor table shape", {}});
    return out;
  }
  for (int a : f.obj)
    if (a < 0 || a >= d.num_objects()) out.push_back({"object out of range", {a}});
  for (int m : f.mor)
    if (m < 0 || m >= d.num_morphisms()) out.push_back({"morphism out of range", {m}});
  if (!out.empty()) return out;
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (d.dom(f.mor[m]) != f.obj[c.dom(m)] || d.cod(f.mor[m]) != f.obj[c.cod(m)]) out.push_back({"functor typing", {m}});
  for (int a = 0; a < c.num_objects(); ++a)
    if (f.mor[c.id(a)] != d.id(f.obj[a])) out.push_back({"functor identity", {a}});
  if (!out.empty()) return out;
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int h = 0; h < c.num_morphisms(); ++h) {
      if (c.cod(g) == c.dom(h) && f.mor[c.compose(h, g)] != d.compose(f.mor[h], f.mor[g]))
        out.push_back({"functor composition", {h, g}});
      if (f.mor[c.tensor_mor(g, h)] != d.tensor_mor(f.mor[g], f.mor[h])) out.push_back({"tensor of morphisms", {g, h}});
    }
  if (f.obj[c.unit()] != d.unit()) out.push_back({"unit", {}});
  for (int a = 0; a < c.num_objects(); ++a)
    for (int b = 0; b < c.num_objects(); ++b) {
      if (f.obj[c.tensor(a, b)] != d.tensor(f.obj[a], f.obj[b])) out.push_back({"tensor of objects", {a, b}});
      if (f.mor[c.braid(a, b)] != d.braid(f.obj[a], f.obj[b])) out.push_back({"braiding", {a, b}});
    }
  const auto subs = enumerate_subunits(d);
  for (const auto& s : enumerate_subunits(c))
    if (!subunit_index_of(d, subs, f.mor[s.mono])) out.push_back({"subunit preservation", {s.mono}});
  return out;
}

ExtendedFunctor extend_functor(const MonoidalCategory& c, const MonoidalCategory& d, const MonoidalFunctor& f,
                               Flavour flavour) {
  const auto v = check_monoidal_functor(c, d, f);
  if (!v.empty()) throw PreconditionError("not a strict monoidal subunit-preserving functor: " + v.front().to_string());
  const auto b = broad_category(c, flavour);
  const auto& l = b.base;
  const auto ld = subunit_semilattice(d);
  const int k = b.cat.num_objects();
  ExtendedFunctor out;
  out.report = PropertyReport::ok("extension");
  std::vector<Cocone> colim(k);
  std::vector<DiagramSpec> diag(k);
  std::vector<std::vector<int>> incl(k);  // i_s: F(S) → ⋁F(U)
  for (int o = 0; o < k; ++o) {
    const auto& [u, x] = b.specs[o];
    const int fx = f.obj[x];
    std::vector<int> family;
    for (int s : mask_elements(u)) family.push_back(*subunit_index_of(d, ld.elements, f.mor[l.elements[s].mono]));
    const auto join = ld.join_of(family);
    const std::string name = mask_label(l.lattice.poset, u);
    if (!join) throw PreconditionError("no join of F(U) in the target for U = " + name);
    const int jm = ld.elements[*join].mono;
    out.join_mono.push_back(jm);
    auto& dg = diag[o];
    auto& cc = colim[o];
    cc.apex = d.tensor(d.dom(jm), fx);
    const auto us = mask_elements(u);
    for (int s : us) {
      const int fs = f.mor[l.elements[s].mono];
      dg.nodes.push_back(d.tensor(d.dom(fs), fx));
      auto i = factor_through(d.cat, fs, jm);
      if (!i) throw ConsistencyError("F(s) is not below the join");
      incl[o].push_back(*i);
      cc.legs.push_back(d.right_whisker(*i, fx));
    }
    for (std::size_t i = 0; i < us.size(); ++i)
      for (std::size_t j = 0; j < us.size(); ++j) {
        const int si = d.right_whisker(f.mor[l.elements[us[i]].mono], fx);
        const int sj = d.right_whisker(f.mor[l.elements[us[j]].mono], fx);
        for (int e : d.cat.hom(dg.nodes[i], dg.nodes[j]))
          if (!(i == j && e == d.id(dg.nodes[i])) && d.compose(sj, e) == si)
            dg.edges.push_back({static_cast<int>(i), static_cast<int>(j), e});
      }
    if (!is_colimit(d.cat, dg, cc)) throw PreconditionError("target lacks the join colimit for U = " + name);
    out.functor.obj.push_back(cc.apex);
  }
  for (int m = 0; m < b.cat.num_morphisms(); ++m) {
    const int from = b.cat.dom(m), to = b.cat.cod(m);
    const auto& [v2, y] = b.specs[to];
    const auto vt = mask_elements(v2);
    Cocone other{out.functor.obj[to], {}};
    for (int leg : b.legs[m]) {
      int img = -1;
      for (std::size_t j = 0; j < vt.size() && img < 0; ++j)
        if (auto g = factor_through(c.cat, leg, c.right_whisker(l.elements[vt[j]].mono, y)))
          img = d.compose(d.right_whisker(incl[to][j], f.obj[y]), f.mor[*g]);
      if (img < 0) throw ConsistencyError("leg does not restrict to the target family");
      other.legs.push_back(img);
    }
    auto med = mediating(d.cat, colim[from], other);
    if (!med) throw ConsistencyError("no unique mediating map for a broad morphism");
    out.functor.mor.push_back(*med);
  }
  auto& r = out.report;
  const auto& fb = out.functor;
  for (int a = 0; a < k && r.holds; ++a)
    if (fb.mor[b.cat.id(a)] != d.id(fb.obj[a])) r.fail("extension does not preserve identities", {a});
  for (int g = 0; g < b.cat.num_morphisms() && r.holds; ++g)
    for (int h = 0; h < b.cat.num_morphisms() && r.holds; ++h)
      if (b.cat.cod(g) == b.cat.dom(h) && fb.mor[b.cat.compose(h, g)] != d.compose(fb.mor[h], fb.mor[g]))
        r.fail("extension does not preserve composition", {h, g});
  for (int a = 0; a < c.num_objects() && r.holds; ++a)
    if (fb.obj[b.embed_obj[a]] != f.obj[a]) r.fail("extension does not restrict to F on objects", {a});
  for (int m = 0; m < c.num_morphisms() && r.holds; ++m)
    if (fb.mor[b.embed_mor[m]] != f.mor[m]) r.fail("extension does not restrict to F on morphisms", {m});
  // Û ↦ ⋁F(U): the inclusion [U, I] → Î goes to the join mono.
  const int unit = b.cat.unit();
  for (int o = 0; o < k && r.holds; ++o) {
    if (b.specs[o].x != c.unit()) continue;
    std::vector<int> legs;
    for (int s : mask_elements(b.specs[o].u)) legs.push_back(l.elements[s].mono);
    auto m = b.morphism_of(o, unit, legs);
    if (!m || fb.mor[*m] != out.join_mono[o]) r.fail("extension does not send Û to ⋁F(U)", {o});
  }
  return out;
}

}  // namespace ttw
