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

#include "ttw/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ttw/errors.hpp"
#include "ttw/limits.hpp"

namespace ttw {

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<int> identity, std::vector<int> compose)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      compose_(std::move(compose)) {
  const int n = num_objects();
  const int m = num_morphisms();
  check_cap("objects", n, limits().max_objects);
  check_cap("morphisms", m, limits().max_morphisms);
  hom_.assign(static_cast<std::size_t>(n) * n, {});
  for (int f = 0; f < m; ++f) {
    const auto& mf = morphisms_[f];
    if (mf.id != f) throw StructuralError("morphism " + std::to_string(f) + " has id " + std::to_string(mf.id));
    if (mf.dom < 0 || mf.dom >= n || mf.cod < 0 || mf.cod >= n)
      throw StructuralError("morphism " + std::to_string(f) + " has an endpoint out of range");
    hom_[static_cast<std::size_t>(mf.dom) * n + mf.cod].push_back(f);
  }
  thin_ = std::all_of(hom_.begin(), hom_.end(), [](const auto& h) { return h.size() <= 1; });
}

int FinCategory::compose_all(std::initializer_list<int> fs) const {
  int acc = -1;
  for (auto it = std::rbegin(fs); it != std::rend(fs); ++it) {
    if (*it < 0) return -1;
    acc = acc < 0 ? *it : compose(*it, acc);
    if (acc < 0) return -1;
  }
  return acc;
}

std::optional<int> FinCategory::object_index(std::string_view label) const {
  for (int i = 0; i < num_objects(); ++i)
    if (objects_[i] == label) return i;
  return std::nullopt;
}

std::optional<int> FinCategory::morphism_index(std::string_view label) const {
  for (int i = 0; i < num_morphisms(); ++i)
    if (morphisms_[i].label == label) return i;
  return std::nullopt;
}

bool FinCategory::operator==(const FinCategory& o) const {
  return objects_ == o.objects_ && morphisms_ == o.morphisms_ && identity_ == o.identity_ &&
         compose_ == o.compose_;
}

// Validation ----------------------------------------------------------------

namespace {

void structural(const FinCategory& c) {
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  if (static_cast<int>(c.identity_table().size()) != n)
    throw StructuralError("identity table has " + std::to_string(c.identity_table().size()) +
                          " entries, expected " + std::to_string(n));
  for (int a = 0; a < n; ++a)
    if (c.id(a) < 0 || c.id(a) >= m)
      throw StructuralError("identity of object " + std::to_string(a) + " out of range");
  if (c.compose_table().size() != static_cast<std::size_t>(m) * m)
    throw StructuralError("compose table has wrong size");
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      const int gf = c.compose(g, f);
      const bool composable = c.cod(f) == c.dom(g);
      if (gf < -1 || gf >= m)
        throw StructuralError("composite (" + std::to_string(g) + ", " + std::to_string(f) +
                              ") out of range");
      if (composable && gf < 0)
        throw StructuralError("missing composite (" + std::to_string(g) + ", " + std::to_string(f) + ")");
      if (!composable && gf >= 0)
        throw StructuralError("composite given for non-composable pair (" + std::to_string(g) +
                              ", " + std::to_string(f) + ")");
    }
}

void structural(const FinCategory& c, const MonoidalData& d) {
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  if (d.unit < 0 || d.unit >= n) throw StructuralError("unit object out of range");
  if (d.tensor_obj.size() != static_cast<std::size_t>(n) * n)
    throw StructuralError("object tensor table has wrong size");
  if (d.tensor_mor.size() != static_cast<std::size_t>(m) * m)
    throw StructuralError("morphism tensor table has wrong size");
  if (d.braiding.size() != static_cast<std::size_t>(n) * n)
    throw StructuralError("braiding table has wrong size");
  for (std::size_t i = 0; i < d.tensor_obj.size(); ++i)
    if (d.tensor_obj[i] < 0 || d.tensor_obj[i] >= n)
      throw StructuralError("object tensor entry " + std::to_string(i) + " out of range");
  for (std::size_t i = 0; i < d.tensor_mor.size(); ++i)
    if (d.tensor_mor[i] < 0 || d.tensor_mor[i] >= m)
      throw StructuralError("morphism tensor entry " + std::to_string(i) + " out of range");
  for (std::size_t i = 0; i < d.braiding.size(); ++i)
    if (d.braiding[i] < 0 || d.braiding[i] >= m)
      throw StructuralError("braiding entry " + std::to_string(i) + " out of range");
}

std::vector<std::pair<int, int>> composable_pairs(const FinCategory& c) {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g)
      if (c.cod(f) == c.dom(g)) out.emplace_back(g, f);
  return out;
}

}  // namespace

ViolationList validate(const FinCategory& c) {
  structural(c);
  ViolationList out;
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  for (int a = 0; a < n; ++a)
    if (c.dom(c.id(a)) != a || c.cod(c.id(a)) != a) out.push_back({"identity typing", {a}});
  bool typed = true;
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      const int gf = c.compose(g, f);
      if (gf >= 0 && (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))) {
        out.push_back({"composite typing", {g, f}});
        typed = false;
      }
    }
  for (int f = 0; f < m; ++f) {
    if (c.compose(f, c.id(c.dom(f))) != f) out.push_back({"right identity", {f}});
    if (c.compose(c.id(c.cod(f)), f) != f) out.push_back({"left identity", {f}});
  }
  if (!typed) return out;
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (c.cod(f) != c.dom(g)) continue;
      const int gf = c.compose(g, f);
      for (int h = 0; h < m; ++h) {
        if (c.cod(g) != c.dom(h)) continue;
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          out.push_back({"associativity", {h, g, f}});
      }
    }
  return out;
}

ViolationList validate(const FinCategory& c, const MonoidalData& d) {
  ViolationList out = validate(c);
  structural(c, d);
  if (!out.empty()) return out;
  MonoidalCategory mc{"", c, d};
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  const int I = d.unit;

  for (int a = 0; a < n; ++a) {
    if (mc.tensor(a, I) != a) out.push_back({"right unit on objects", {a}});
    if (mc.tensor(I, a) != a) out.push_back({"left unit on objects", {a}});
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        if (mc.tensor(mc.tensor(a, b), e) != mc.tensor(a, mc.tensor(b, e)))
          out.push_back({"associativity on objects", {a, b, e}});
  }
  bool typed = true;
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const int fg = mc.tensor_mor(f, g);
      if (c.dom(fg) != mc.tensor(c.dom(f), c.dom(g)) || c.cod(fg) != mc.tensor(c.cod(f), c.cod(g))) {
        out.push_back({"tensor typing", {f, g}});
        typed = false;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int s = mc.braid(a, b);
      if (c.dom(s) != mc.tensor(a, b) || c.cod(s) != mc.tensor(b, a)) {
        out.push_back({"braiding typing", {a, b}});
        typed = false;
      }
    }
  if (!typed || !out.empty()) return out;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mc.tensor_mor(c.id(a), c.id(b)) != c.id(mc.tensor(a, b)))
        out.push_back({"tensor of identities", {a, b}});
  for (int f = 0; f < m; ++f) {
    if (mc.tensor_mor(f, c.id(I)) != f) out.push_back({"right unit on morphisms", {f}});
    if (mc.tensor_mor(c.id(I), f) != f) out.push_back({"left unit on morphisms", {f}});
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        if (mc.tensor_mor(mc.tensor_mor(f, g), h) != mc.tensor_mor(f, mc.tensor_mor(g, h)))
          out.push_back({"associativity on morphisms", {f, g, h}});
  }
  const auto pairs = composable_pairs(c);
  for (auto [f2, f1] : pairs)
    for (auto [g2, g1] : pairs) {
      const int lhs = c.compose(mc.tensor_mor(f2, g2), mc.tensor_mor(f1, g1));
      const int rhs = mc.tensor_mor(c.compose(f2, f1), c.compose(g2, g1));
      if (lhs != rhs) out.push_back({"interchange", {f2, f1, g2, g1}});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!is_iso(c, mc.braid(a, b))) out.push_back({"braiding invertible", {a, b}});
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const int lhs = c.compose(mc.braid(c.cod(f), c.cod(g)), mc.tensor_mor(f, g));
      const int rhs = c.compose(mc.tensor_mor(g, f), mc.braid(c.dom(f), c.dom(g)));
      if (lhs != rhs) out.push_back({"braiding naturality", {f, g}});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        const int h1 = c.compose(mc.tensor_mor(c.id(b), mc.braid(a, e)),
                                 mc.tensor_mor(mc.braid(a, b), c.id(e)));
        if (mc.braid(a, mc.tensor(b, e)) != h1) out.push_back({"hexagon", {a, b, e}});
        const int h2 = c.compose(mc.tensor_mor(mc.braid(a, e), c.id(b)),
                                 mc.tensor_mor(c.id(a), mc.braid(b, e)));
        if (mc.braid(mc.tensor(a, b), e) != h2) out.push_back({"inverse hexagon", {a, b, e}});
      }
  return out;
}

ViolationList validate(const MonoidalCategory& c) { return validate(c.cat, c.mon); }

// Morphism properties -------------------------------------------------------

bool is_mono_generic(const FinCategory& c, int f) {
  const int a = c.dom(f);
  for (int x = 0; x < c.num_objects(); ++x) {
    std::set<int> seen;
    for (int g : c.hom(x, a))
      if (!seen.insert(c.compose(f, g)).second) return false;
  }
  return true;
}

bool is_mono(const FinCategory& c, int f) { return c.is_thin() || is_mono_generic(c, f); }

bool is_epi(const FinCategory& c, int f) {
  if (c.is_thin()) return true;
  const int b = c.cod(f);
  for (int y = 0; y < c.num_objects(); ++y) {
    std::set<int> seen;
    for (int g : c.hom(b, y))
      if (!seen.insert(c.compose(g, f)).second) return false;
  }
  return true;
}

std::optional<int> is_iso_generic(const FinCategory& c, int f) {
  for (int g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(g, f) == c.id(c.dom(f)) && c.compose(f, g) == c.id(c.cod(f))) return g;
  return std::nullopt;
}

std::optional<int> is_iso(const FinCategory& c, int f) {
  if (c.is_thin()) {
    const auto& back = c.hom(c.cod(f), c.dom(f));
    if (back.empty()) return std::nullopt;
    return back.front();
  }
  return is_iso_generic(c, f);
}

std::optional<int> factor_through(const FinCategory& c, int s, int t) {
  if (c.cod(s) != c.cod(t)) return std::nullopt;
  for (int g : c.hom(c.dom(s), c.dom(t)))
    if (c.compose(t, g) == s) return g;
  return std::nullopt;
}

std::optional<int> find_iso(const FinCategory& c, int a, int b) {
  for (int f : c.hom(a, b))
    if (is_iso(c, f)) return f;
  return std::nullopt;
}

std::vector<SubobjectClass> subobjects(const FinCategory& c, int a) {
  std::vector<int> monos;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int f : c.hom(x, a))
      if (is_mono(c, f)) monos.push_back(f);
  std::sort(monos.begin(), monos.end());
  std::vector<SubobjectClass> classes;
  for (int f : monos) {
    bool placed = false;
    for (auto& k : classes) {
      const int r = k.representative;
      if (factor_through(c, f, r) && factor_through(c, r, f)) {
        k.members.push_back(f);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({f, {f}});
  }
  // Order along factoring; a class goes once everything strictly below it has.
  std::vector<SubobjectClass> out;
  std::vector<char> used(classes.size(), 0);
  while (out.size() < classes.size()) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (used[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < classes.size() && ready; ++j)
        if (!used[j] && j != i &&
            factor_through(c, classes[j].representative, classes[i].representative))
          ready = false;
      if (ready) {
        used[i] = 1;
        out.push_back(classes[i]);
        break;
      }
    }
  }
  return out;
}

// Colimits ------------------------------------------------------------------

void check_diagram(const FinCategory& c, const DiagramSpec& d) {
  const int k = static_cast<int>(d.nodes.size());
  for (int x : d.nodes)
    if (x < 0 || x >= c.num_objects()) throw StructuralError("diagram node out of range");
  for (const auto& e : d.edges) {
    if (e.source < 0 || e.source >= k || e.target < 0 || e.target >= k)
      throw StructuralError("diagram edge endpoint out of range");
    if (e.mor < 0 || e.mor >= c.num_morphisms() || c.dom(e.mor) != d.nodes[e.source] ||
        c.cod(e.mor) != d.nodes[e.target])
      throw StructuralError("diagram edge morphism does not match its nodes");
  }
}

std::vector<Cocone> cocones_into(const FinCategory& c, const DiagramSpec& d, int apex) {
  check_diagram(c, d);
  const int k = static_cast<int>(d.nodes.size());
  // Edges checked once both endpoints are assigned.
  std::vector<std::vector<const DiagramEdge*>> due(k);
  for (const auto& e : d.edges) due[std::max(e.source, e.target)].push_back(&e);
  std::vector<Cocone> out;
  std::vector<int> legs(k, -1);
  const long long cap = limits().max_cocones;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      out.push_back({apex, legs});
      check_cap("cocones", static_cast<long long>(out.size()), cap);
      return;
    }
    for (int l : c.hom(d.nodes[i], apex)) {
      legs[i] = l;
      bool ok = true;
      for (const auto* e : due[i])
        if (c.compose(legs[e->target], e->mor) != legs[e->source]) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
    legs[i] = -1;
  };
  rec(rec, 0);
  return out;
}

namespace {

bool is_cocone(const FinCategory& c, const DiagramSpec& d, const Cocone& cc) {
  if (cc.legs.size() != d.nodes.size()) return false;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (c.dom(cc.legs[i]) != d.nodes[i] || c.cod(cc.legs[i]) != cc.apex) return false;
  for (const auto& e : d.edges)
    if (c.compose(cc.legs[e.target], e.mor) != cc.legs[e.source]) return false;
  return true;
}

bool universal(const FinCategory& c, const Cocone& cc, const std::vector<long long>& counts) {
  for (int y = 0; y < c.num_objects(); ++y) {
    const auto& ms = c.hom(cc.apex, y);
    if (static_cast<long long>(ms.size()) != counts[y]) return false;
    std::set<std::vector<int>> images;
    for (int m : ms) {
      std::vector<int> img;
      img.reserve(cc.legs.size());
      for (int l : cc.legs) img.push_back(c.compose(m, l));
      if (!images.insert(std::move(img)).second) return false;
    }
  }
  return true;
}

std::vector<long long> cocone_counts(const FinCategory& c, const DiagramSpec& d) {
  std::vector<long long> counts(c.num_objects());
  for (int y = 0; y < c.num_objects(); ++y) counts[y] = cocones_into(c, d, y).size();
  return counts;
}

}  // namespace

bool is_colimit(const FinCategory& c, const DiagramSpec& d, const Cocone& cc) {
  check_diagram(c, d);
  if (!is_cocone(c, d, cc)) return false;
  return universal(c, cc, cocone_counts(c, d));
}

std::optional<Cocone> colimit(const FinCategory& c, const DiagramSpec& d) {
  check_diagram(c, d);
  const auto counts = cocone_counts(c, d);
  for (int x = 0; x < c.num_objects(); ++x)
    for (const auto& cc : cocones_into(c, d, x))
      if (universal(c, cc, counts)) return cc;
  return std::nullopt;
}

std::optional<int> mediating(const FinCategory& c, const Cocone& colim, const Cocone& other) {
  std::optional<int> found;
  for (int m : c.hom(colim.apex, other.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < colim.legs.size() && ok; ++i)
      ok = c.compose(m, colim.legs[i]) == other.legs[i];
    if (ok) {
      if (found) return std::nullopt;
      found = m;
    }
  }
  return found;
}

// Squares -------------------------------------------------------------------

SquareObjects square_objects(const FinCategory& c, const Square& s) {
  const int m = c.num_morphisms();
  for (int f : {s.top, s.left, s.right, s.bottom})
    if (f < 0 || f >= m) throw StructuralError("square morphism out of range");
  SquareObjects o{c.dom(s.top), c.cod(s.top), c.cod(s.left), c.cod(s.right)};
  if (c.dom(s.left) != o.tl || c.dom(s.right) != o.tr || c.dom(s.bottom) != o.bl ||
      c.cod(s.bottom) != o.br)
    throw StructuralError("morphisms do not form a square");
  return o;
}

bool commutes(const FinCategory& c, const Square& s) {
  square_objects(c, s);
  return c.compose(s.right, s.top) == c.compose(s.bottom, s.left);
}

bool is_pullback(const FinCategory& c, const Square& s) {
  if (!commutes(c, s)) throw NonCommutingSquare("square does not commute");
  const auto o = square_objects(c, s);
  for (int p = 0; p < c.num_objects(); ++p)
    for (int u : c.hom(p, o.tr))
      for (int v : c.hom(p, o.bl)) {
        if (c.compose(s.right, u) != c.compose(s.bottom, v)) continue;
        int count = 0;
        for (int w : c.hom(p, o.tl))
          if (c.compose(s.top, w) == u && c.compose(s.left, w) == v) ++count;
        if (count != 1) return false;
      }
  return true;
}

bool is_pushout(const FinCategory& c, const Square& s) {
  if (!commutes(c, s)) throw NonCommutingSquare("square does not commute");
  const auto o = square_objects(c, s);
  for (int q = 0; q < c.num_objects(); ++q)
    for (int u : c.hom(o.tr, q))
      for (int v : c.hom(o.bl, q)) {
        if (c.compose(u, s.top) != c.compose(v, s.left)) continue;
        int count = 0;
        for (int w : c.hom(o.br, q))
          if (c.compose(w, s.right) == u && c.compose(w, s.bottom) == v) ++count;
        if (count != 1) return false;
      }
  return true;
}

FullSubcategory full_subcategory(const FinCategory& c, const std::vector<int>& objects) {
  FullSubcategory out;
  out.objects = objects;
  out.object_index.assign(c.num_objects(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) out.object_index[objects[i]] = static_cast<int>(i);
  out.morphism_index.assign(c.num_morphisms(), -1);
  std::vector<Morphism> mors;
  for (int f = 0; f < c.num_morphisms(); ++f) {
    const int a = out.object_index[c.dom(f)];
    const int b = out.object_index[c.cod(f)];
    if (a < 0 || b < 0) continue;
    out.morphism_index[f] = static_cast<int>(mors.size());
    mors.push_back({static_cast<int>(mors.size()), a, b, c.morphism(f).label});
    out.morphisms.push_back(f);
  }
  const int m = static_cast<int>(mors.size());
  std::vector<int> identity;
  std::vector<std::string> labels;
  for (int a : objects) {
    identity.push_back(out.morphism_index[c.id(a)]);
    labels.push_back(c.object_label(a));
  }
  std::vector<int> compose(static_cast<std::size_t>(m) * m, -1);
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      const int gf = c.compose(out.morphisms[g], out.morphisms[f]);
      if (gf >= 0) compose[static_cast<std::size_t>(g) * m + f] = out.morphism_index[gf];
    }
  out.cat = FinCategory(std::move(labels), std::move(mors), std::move(identity), std::move(compose));
  return out;
}

std::optional<int> initial_object(const FinCategory& c) {
  for (int a = 0; a < c.num_objects(); ++a) {
    bool ok = true;
    for (int b = 0; b < c.num_objects() && ok; ++b) ok = c.hom(a, b).size() == 1;
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<int> terminal_object(const FinCategory& c) {
  for (int a = 0; a < c.num_objects(); ++a) {
    bool ok = true;
    for (int b = 0; b < c.num_objects() && ok; ++b) ok = c.hom(b, a).size() == 1;
    if (ok) return a;
  }
  return std::nullopt;
}

// Constructors --------------------------------------------------------------

MonoidalCategory thin_category(const FinPoset& p, const std::vector<int>& mult, int unit,
                               std::string name) {
  const int n = p.size();
  if (!p.check().empty()) throw PreconditionError("order relation is not a partial order");
  if (mult.size() != static_cast<std::size_t>(n) * n) throw StructuralError("multiplication table has wrong size");
  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  std::vector<Morphism> mors;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y)) {
        const int id = static_cast<int>(mors.size());
        index[x * n + y] = id;
        mors.push_back({id, x, y, x == y ? "id_" + p.label(x) : p.label(x) + "->" + p.label(y)});
      }
  const int m = static_cast<int>(mors.size());
  check_cap("morphisms", m, limits().max_morphisms);
  std::vector<int> identity(n);
  for (int x = 0; x < n; ++x) identity[x] = index[x * n + x];
  std::vector<int> compose(static_cast<std::size_t>(m) * m, -1);
  for (const auto& f : mors)
    for (const auto& g : mors)
      if (f.cod == g.dom) compose[static_cast<std::size_t>(g.id) * m + f.id] = index[f.dom * n + g.cod];
  MonoidalData d;
  d.unit = unit;
  d.tensor_obj = mult;
  d.tensor_mor.assign(static_cast<std::size_t>(m) * m, -1);
  for (const auto& f : mors)
    for (const auto& g : mors) {
      const int a = mult[f.dom * n + g.dom];
      const int b = mult[f.cod * n + g.cod];
      const int t = index[a * n + b];
      if (t < 0) throw PreconditionError("multiplication is not monotone at " + f.label + ", " + g.label);
      d.tensor_mor[static_cast<std::size_t>(f.id) * m + g.id] = t;
    }
  d.braiding.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int s = index[mult[a * n + b] * n + mult[b * n + a]];
      if (s < 0) throw PreconditionError("no braiding " + p.label(a) + p.label(b) + " -> " + p.label(b) + p.label(a));
      d.braiding[a * n + b] = s;
    }
  MonoidalCategory out;
  out.name = std::move(name);
  out.cat = FinCategory(p.labels(), std::move(mors), std::move(identity), std::move(compose));
  out.mon = std::move(d);
  return out;
}

std::optional<int> thin_morphism(const FinCategory& c, int x, int y) {
  const auto& h = c.hom(x, y);
  if (h.empty()) return std::nullopt;
  return h.front();
}

MonoidalCategory from_quantale(const Quantale& q, std::string name) {
  auto v = q.check();
  if (!v.empty()) throw PreconditionError("quantale law fails: " + v.front().to_string());
  if (!q.is_commutative()) throw PreconditionError("quantale is not commutative; no braiding exists");
  return thin_category(q.poset, q.mult, q.unit, std::move(name));
}

MonoidalCategory from_semilattice(const Semilattice& l, std::string name) {
  auto v = l.check();
  if (!v.empty()) throw PreconditionError("semilattice law fails: " + v.front().to_string());
  return thin_category(l.poset, l.meet_table, l.top, std::move(name));
}

MonoidalCategory from_commutative_monoid(const Monoid& m, MonoidMode mode, std::string name) {
  auto v = m.check();
  if (!v.empty()) throw PreconditionError("monoid law fails: " + v.front().to_string());
  if (!m.is_commutative()) throw PreconditionError("monoid is not commutative; no braiding exists");
  if (mode == MonoidMode::ideal_quantale) return from_quantale(ideal_quantale(m), std::move(name));
  const int k = m.size();
  std::vector<Morphism> mors;
  for (int i = 0; i < k; ++i) mors.push_back({i, 0, 0, m.labels[i]});
  MonoidalData d;
  d.unit = 0;
  d.tensor_obj = {0};
  d.tensor_mor = m.mult;
  d.braiding = {m.unit};
  MonoidalCategory out;
  out.name = std::move(name);
  out.cat = FinCategory({"*"}, std::move(mors), {m.unit}, m.mult);
  out.mon = std::move(d);
  return out;
}

}  // namespace ttw
