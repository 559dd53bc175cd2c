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

#include "ttw/orderkit.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "ttw/errors.hpp"
#include "ttw/limits.hpp"

namespace ttw {

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

FinPoset::FinPoset(std::vector<std::string> labels, std::vector<char> leq)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), leq_(std::move(leq)) {
  if (leq_.size() != static_cast<std::size_t>(n_) * n_)
    throw StructuralError("poset relation has wrong size");
  for (auto& c : leq_) c = c ? 1 : 0;
}

FinPoset FinPoset::from_pairs(std::vector<std::string> labels,
                              const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(labels.size());
  std::vector<char> r(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) r[i * n + i] = 1;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw StructuralError("poset pair out of range");
    r[a * n + b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i * n + k])
        for (int j = 0; j < n; ++j)
          if (r[k * n + j]) r[i * n + j] = 1;
  return FinPoset(std::move(labels), std::move(r));
}

FinPoset FinPoset::chain(std::vector<std::string> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<char> r(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) r[i * n + j] = 1;
  return FinPoset(std::move(labels), std::move(r));
}

std::optional<int> FinPoset::index_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

ViolationList FinPoset::check() const {
  ViolationList out;
  for (int a = 0; a < n_; ++a)
    if (!leq(a, a)) out.push_back({"reflexivity", {a}});
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (leq(a, b) && leq(b, a)) out.push_back({"antisymmetry", {a, b}});
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (leq(a, b))
        for (int c = 0; c < n_; ++c)
          if (leq(b, c) && !leq(a, c)) out.push_back({"transitivity", {a, b, c}});
  return out;
}

std::optional<int> FinPoset::join(int a, int b) const {
  const int e[2] = {a, b};
  return join_of(e);
}

std::optional<int> FinPoset::meet(int a, int b) const {
  const int e[2] = {a, b};
  return meet_of(e);
}

std::optional<int> FinPoset::join_of(std::span<const int> elems) const {
  std::vector<int> ub;
  for (int c = 0; c < n_; ++c)
    if (std::all_of(elems.begin(), elems.end(), [&](int x) { return leq(x, c); })) ub.push_back(c);
  for (int c : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](int d) { return leq(c, d); })) return c;
  return std::nullopt;
}

std::optional<int> FinPoset::meet_of(std::span<const int> elems) const {
  std::vector<int> lb;
  for (int c = 0; c < n_; ++c)
    if (std::all_of(elems.begin(), elems.end(), [&](int x) { return leq(c, x); })) lb.push_back(c);
  for (int c : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](int d) { return leq(d, c); })) return c;
  return std::nullopt;
}

std::optional<int> FinPoset::bottom() const { return join_of({}); }
std::optional<int> FinPoset::top() const { return meet_of({}); }

Mask FinPoset::down_closure(Mask m) const {
  Mask out = 0;
  for (int b = 0; b < n_; ++b)
    for (int a : mask_elements(m))
      if (leq(b, a)) {
        out |= mask_bit(b);
        break;
      }
  return out;
}

bool FinPoset::is_downset(Mask m) const { return down_closure(m) == m; }

bool FinPoset::is_directed(Mask m) const {
  if (m == 0) return false;
  auto el = mask_elements(m);
  for (int a : el)
    for (int b : el) {
      bool found = false;
      for (int c : el)
        if (leq(a, c) && leq(b, c)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!lt(a, b)) continue;
      bool between = false;
      for (int c = 0; c < n_ && !between; ++c) between = lt(a, c) && lt(c, b);
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

std::vector<int> FinPoset::linear_extension() const {
  std::vector<int> out;
  std::vector<char> placed(n_, 0);
  while (static_cast<int>(out.size()) < n_) {
    bool progress = false;
    for (int x = 0; x < n_; ++x) {
      if (placed[x]) continue;
      bool ready = true;
      for (int y = 0; y < n_ && ready; ++y) ready = placed[y] || !lt(y, x);
      if (ready) {
        placed[x] = 1;
        out.push_back(x);
        progress = true;
        break;
      }
    }
    if (!progress) throw StructuralError("relation has a cycle");
  }
  return out;
}

FinPoset FinPoset::restrict_to(const std::vector<int>& elems) const {
  const int m = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  std::vector<char> r(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    labels.push_back(labels_[elems[i]]);
    for (int j = 0; j < m; ++j) r[i * m + j] = leq(elems[i], elems[j]);
  }
  return FinPoset(std::move(labels), std::move(r));
}

// Semilattice ---------------------------------------------------------------

ViolationList Semilattice::check() const {
  ViolationList out = poset.check();
  const int n = size();
  if (meet_table.size() != static_cast<std::size_t>(n) * n) {
    out.push_back({"meet table size", {}});
    return out;
  }
  for (int v : meet_table)
    if (v < 0 || v >= n) {
      out.push_back({"meet table range", {v}});
      return out;
    }
  if (top < 0 || top >= n) {
    out.push_back({"top range", {top}});
    return out;
  }
  for (int a = 0; a < n; ++a) {
    if (meet(a, a) != a) out.push_back({"meet idempotence", {a}});
    if (meet(a, top) != a) out.push_back({"top unit", {a}});
    for (int b = 0; b < n; ++b) {
      if (meet(a, b) != meet(b, a)) out.push_back({"meet commutativity", {a, b}});
      if (poset.leq(a, b) != (meet(a, b) == a)) out.push_back({"order-meet agreement", {a, b}});
      for (int c = 0; c < n; ++c)
        if (meet(meet(a, b), c) != meet(a, meet(b, c)))
          out.push_back({"meet associativity", {a, b, c}});
    }
  }
  return out;
}

Semilattice Semilattice::from_poset(FinPoset p) {
  Semilattice s;
  const int n = p.size();
  auto t = p.top();
  if (!t) throw PreconditionError("poset has no top element");
  s.top = *t;
  s.meet_table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto m = p.meet(a, b);
      if (!m)
        throw PreconditionError("no meet of " + p.label(a) + " and " + p.label(b));
      s.meet_table[a * n + b] = *m;
    }
  s.poset = std::move(p);
  return s;
}

// Quantale ------------------------------------------------------------------

bool Quantale::is_commutative() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ViolationList Quantale::check() const {
  ViolationList out = poset.check();
  if (!out.empty()) return out;
  const int n = size();
  if (mult.size() != static_cast<std::size_t>(n) * n) {
    out.push_back({"mult table size", {}});
    return out;
  }
  for (int v : mult)
    if (v < 0 || v >= n) {
      out.push_back({"mult table range", {v}});
      return out;
    }
  if (unit < 0 || unit >= n) {
    out.push_back({"unit range", {unit}});
    return out;
  }
  if (!is_complete_lattice(poset)) {
    out.push_back({"complete lattice", {}});
    return out;
  }
  const int bot = *poset.bottom();
  for (int a = 0; a < n; ++a) {
    if (mul(a, unit) != a) out.push_back({"right unit", {a}});
    if (mul(unit, a) != a) out.push_back({"left unit", {a}});
    if (mul(a, bot) != bot) out.push_back({"right empty join", {a}});
    if (mul(bot, a) != bot) out.push_back({"left empty join", {a}});
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) out.push_back({"mult associativity", {a, b, c}});
        const int bc = *poset.join(b, c);
        if (mul(a, bc) != *poset.join(mul(a, b), mul(a, c)))
          out.push_back({"left distributivity", {a, b, c}});
        if (mul(bc, a) != *poset.join(mul(b, a), mul(c, a)))
          out.push_back({"right distributivity", {a, b, c}});
      }
  }
  return out;
}

Quantale Quantale::from_frame(const FinPoset& frame) {
  Quantale q;
  q.poset = frame;
  auto s = Semilattice::from_poset(frame);
  q.mult = s.meet_table;
  q.unit = s.top;
  return q;
}

// Monoid --------------------------------------------------------------------

bool Monoid::is_commutative() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ViolationList Monoid::check() const {
  ViolationList out;
  const int n = size();
  if (mult.size() != static_cast<std::size_t>(n) * n) {
    out.push_back({"mult table size", {}});
    return out;
  }
  for (int v : mult)
    if (v < 0 || v >= n) {
      out.push_back({"mult table range", {v}});
      return out;
    }
  if (unit < 0 || unit >= n) {
    out.push_back({"unit range", {unit}});
    return out;
  }
  for (int a = 0; a < n; ++a) {
    if (mul(a, unit) != a) out.push_back({"right unit", {a}});
    if (mul(unit, a) != a) out.push_back({"left unit", {a}});
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) out.push_back({"mult associativity", {a, b, c}});
  }
  return out;
}

// Downsets ------------------------------------------------------------------

std::optional<int> DownsetLattice::index_of(Mask m) const {
  for (int i = 0; i < size(); ++i)
    if (sets[i] == m) return i;
  return std::nullopt;
}

std::string mask_label(const FinPoset& base, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_elements(m)) {
    if (!first) out += ",";
    out += base.label(i);
    first = false;
  }
  return out + "}";
}

FinPoset DownsetLattice::as_poset() const {
  const int n = size();
  std::vector<std::string> labels;
  std::vector<char> r(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    labels.push_back(mask_label(base, sets[i]));
    for (int j = 0; j < n; ++j) r[i * n + j] = (sets[i] & ~sets[j]) == 0;
  }
  return FinPoset(std::move(labels), std::move(r));
}

std::vector<Mask> enumerate_downsets(const FinPoset& p) {
  if (p.size() > 64) throw CapExceeded("objects", p.size(), 64);
  const auto order = p.linear_extension();
  std::vector<Mask> below(p.size(), 0);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.lt(y, x)) below[x] |= mask_bit(y);
  std::vector<Mask> out;
  const long long cap = limits().max_downsets;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t k, Mask cur) {
    if (k == order.size()) {
      out.push_back(cur);
      check_cap("downsets", static_cast<long long>(out.size()), cap);
      return;
    }
    const int x = order[k];
    rec(k + 1, cur);
    if ((below[x] & ~cur) == 0) rec(k + 1, cur | mask_bit(x));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

namespace {

DownsetLattice make_lattice(const FinPoset& p, std::vector<Mask> sets) {
  DownsetLattice d;
  d.base = p;
  d.sets = std::move(sets);
  for (int x = 0; x < p.size(); ++x) {
    auto i = d.index_of(p.down_closure(mask_bit(x)));
    d.principal.push_back(i ? *i : -1);
  }
  return d;
}

}  // namespace

DownsetLattice downsets(const FinPoset& p) { return make_lattice(p, enumerate_downsets(p)); }

DownsetLattice downsets(const Semilattice& L) { return downsets(L.poset); }

DownsetLattice directed_downsets(const Semilattice& L, bool include_empty) {
  std::vector<Mask> keep;
  for (Mask m : enumerate_downsets(L.poset))
    if (m == 0 ? include_empty : L.poset.is_directed(m)) keep.push_back(m);
  return make_lattice(L.poset, std::move(keep));
}

DownsetLattice finitely_bounded_downsets(const Semilattice& L) {
  // A downset is finitely bounded when it is the closure of its maximal
  // elements; on a finite poset that filter keeps everything.
  std::vector<Mask> keep;
  for (Mask m : enumerate_downsets(L.poset)) {
    Mask maxima = 0;
    for (int a : mask_elements(m)) {
      bool maximal = true;
      for (int b : mask_elements(m)) maximal = maximal && !L.poset.lt(a, b);
      if (maximal) maxima |= mask_bit(a);
    }
    if (L.poset.down_closure(maxima) == m) keep.push_back(m);
  }
  return make_lattice(L.poset, std::move(keep));
}

Semilattice quantale_subunits(const Quantale& q) {
  if (!q.is_commutative()) throw PreconditionError("quantale is not commutative");
  std::vector<int> elems;
  for (int x = 0; x < q.size(); ++x)
    if (q.mul(x, x) == x && q.poset.leq(x, q.unit)) elems.push_back(x);
  FinPoset sub = q.poset.restrict_to(elems);
  Semilattice s;
  const int m = static_cast<int>(elems.size());
  s.meet_table.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int prod = q.mul(elems[i], elems[j]);
      auto it = std::find(elems.begin(), elems.end(), prod);
      if (it == elems.end()) throw ConsistencyError("product of idempotents left the set");
      s.meet_table[i * m + j] = static_cast<int>(it - elems.begin());
    }
  s.top = static_cast<int>(std::find(elems.begin(), elems.end(), q.unit) - elems.begin());
  s.poset = std::move(sub);
  if (!s.check().empty()) throw ConsistencyError("idempotents below the unit do not form a semilattice");
  if (!is_frame(s.poset)) throw ConsistencyError("idempotents below the unit do not form a frame");
  return s;
}

bool is_lattice(const FinPoset& p) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (!p.join(a, b) || !p.meet(a, b)) return false;
  return true;
}

bool is_complete_lattice(const FinPoset& p) {
  return p.size() > 0 && is_lattice(p) && p.bottom() && p.top();
}

bool is_distributive(const FinPoset& p) {
  if (!is_lattice(p)) return false;
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int lhs = *p.meet(a, *p.join(b, c));
        const int rhs = *p.join(*p.meet(a, b), *p.meet(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

// Every subset B (nonempty and directed only, when `directed_only`) has a
// join, and a ∧ ⋁B = ⋁{a ∧ b | b ∈ B}. Exhaustive up to 12 elements; beyond
// that, finite-join distributivity is checked through binary joins.
bool join_distributive(const FinPoset& p, bool directed_only) {
  const int n = p.size();
  if (n > 12) {
    if (directed_only) {
      // Finite directed sets have a maximum, so only the meets matter.
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!p.meet(a, b)) return false;
      return true;
    }
    return is_complete_lattice(p) && is_distributive(p);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!p.meet(a, b)) return false;
  if (!p.top()) return false;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (directed_only && !p.is_directed(m)) continue;
    auto el = mask_elements(m);
    auto j = p.join_of(el);
    if (!j) return false;
    for (int a = 0; a < n; ++a) {
      std::vector<int> meets;
      for (int b : el) meets.push_back(*p.meet(a, b));
      auto rhs = p.join_of(meets);
      if (!rhs || *rhs != *p.meet(a, *j)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_frame(const FinPoset& p) { return p.size() > 0 && join_distributive(p, false); }

bool is_preframe(const FinPoset& p) { return p.size() > 0 && join_distributive(p, true); }

Quantale ideal_quantale(const Monoid& m) {
  if (!m.check().empty()) throw PreconditionError("monoid laws fail");
  if (!m.is_commutative()) throw PreconditionError("monoid is not commutative");
  const int n = m.size();
  if (n > 16) throw CapExceeded("ideal_objects", n, 16);
  std::vector<Mask> ideals;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool closed = true;
    for (int x : mask_elements(s))
      for (int y = 0; y < n && closed; ++y) closed = mask_has(s, m.mul(y, x));
    if (closed) ideals.push_back(s);
  }
  std::sort(ideals.begin(), ideals.end(), [](Mask a, Mask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  const int k = static_cast<int>(ideals.size());
  std::vector<std::string> labels;
  std::vector<char> r(static_cast<std::size_t>(k) * k);
  auto label_of = [&](Mask s) {
    std::string out = "{";
    bool first = true;
    for (int x : mask_elements(s)) {
      if (!first) out += ",";
      out += m.labels[x];
      first = false;
    }
    return out + "}";
  };
  for (int i = 0; i < k; ++i) {
    labels.push_back(label_of(ideals[i]));
    for (int j = 0; j < k; ++j) r[i * k + j] = (ideals[i] & ~ideals[j]) == 0;
  }
  Quantale q;
  q.poset = FinPoset(std::move(labels), std::move(r));
  q.mult.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mask prod = 0;
      for (int x : mask_elements(ideals[i]))
        for (int y : mask_elements(ideals[j])) prod |= mask_bit(m.mul(x, y));
      auto it = std::find(ideals.begin(), ideals.end(), prod);
      if (it == ideals.end()) throw ConsistencyError("product of ideals is not an ideal");
      q.mult[i * k + j] = static_cast<int>(it - ideals.begin());
    }
  const Mask all = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  q.unit = static_cast<int>(std::find(ideals.begin(), ideals.end(), all) - ideals.begin());
  return q;
}

}  // namespace ttw
