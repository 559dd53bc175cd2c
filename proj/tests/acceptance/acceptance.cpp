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

// Acceptance run: one PASS/FAIL line per criterion with its wall time and
// budget. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ttw/daycat.hpp"
#include "ttw/document.hpp"
#include "ttw/fractions.hpp"
#include "ttw/restriction.hpp"
#include "ttw/subunits.hpp"
#include "ttw/support.hpp"

using namespace ttw;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

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

bool rejects(const MonoidalCategory& c, bool& with_witness) {
  try {
    const auto v = validate(c);
    with_witness = !v.empty() && !v.front().witness.empty();
    return !v.empty();
  } catch (const StructuralError&) {
    with_witness = false;
    return true;
  }
}

Outcome quantale_subunit_formula() {
  Outcome o;
  for (const auto& e : gallery()) {
    if (e.document.kind != "quantale" && e.document.kind != "monoid_ideals") continue;
    const Quantale q = e.document.kind == "quantale" ? document_quantale(e.document)
                                                     : ideal_quantale(document_monoid(e.document));
    const auto c = build(e.document);
    std::set<std::string> got;
    for (const auto& s : enumerate_subunits(c)) got.insert(c.cat.object_label(s.domain));
    const auto expect = quantale_subunits(q).poset.labels();
    o.require(got == std::set<std::string>(expect.begin(), expect.end()), e.name + ": subunit sets differ");
  }
  return o;
}

Outcome support_counterexample() {
  Outcome o;
  const auto c = gallery_category("q3");
  const auto l = subunit_semilattice(c);
  const int eps = *c.cat.morphism_index("eps->1");
  const auto a = canonical_support(c, l, eps);
  const auto b = canonical_support(c, l, c.tensor_mor(eps, eps));
  o.require(a.supp && l.lattice.poset.label(*a.supp) == "1", "supp(eps) is not 1");
  o.require(b.supp && l.lattice.poset.label(*b.supp) == "0", "supp(eps.eps) is not 0");
  if (o.ok) o.require(l.meet(*a.supp, *a.supp) != *b.supp, "supports multiply");
  return o;
}

Outcome order_lemma() {
  Outcome o;
  for (const auto& e : gallery()) {
    const auto c = build(e.document);
    const auto subs = enumerate_subunits(c);
    for (const auto& s : subs)
      for (const auto& t : subs) {
        const auto v = subunit_leq_both(c, s, t);
        o.require(v.by_factoring == v.by_invertibility, e.name + ": orders disagree");
      }
  }
  return o;
}

Outcome semilattice_laws() {
  Outcome o;
  for (const auto& e : gallery()) {
    const auto l = subunit_semilattice(build(e.document));
    const int n = l.size();
    bool ok = l.lattice.check().empty();
    for (int a = 0; a < n; ++a) {
      ok = ok && l.meet(a, a) == a && l.meet(a, l.top()) == a;
      for (int b = 0; b < n; ++b) {
        ok = ok && l.meet(a, b) == l.meet(b, a);
        for (int x = 0; x < n; ++x) ok = ok && l.meet(l.meet(a, b), x) == l.meet(a, l.meet(b, x));
      }
    }
    o.require(ok, e.name + ": semilattice law fails");
    if (e.document.kind == "semilattice") {
      const auto in = document_semilattice(e.document);
      o.require(in.poset == l.lattice.poset && in.meet_table == l.lattice.meet_table,
                e.name + ": semilattice input not returned");
    }
  }
  return o;
}

Outcome monad_comonad_laws() {
  Outcome o;
  for (const auto& e : gallery()) {
    const auto c = build(e.document);
    o.require(verify_graded_monad(c).holds, e.name + ": graded monad");
    o.require(verify_comonad_bijection(c).holds, e.name + ": comonad bijection");
    for (const auto& s : enumerate_subunits(c))
      o.require(check_comonad(c, restriction_comonad(c, s)).empty(), e.name + ": comonad laws");
  }
  return o;
}

Outcome ideal_bijection() {
  Outcome o;
  for (const auto& e : gallery()) {
    const auto c = build(e.document);
    o.require(tensor_ideals(c).size() == enumerate_subunits(c).size(), e.name + ": ideal count");
    o.require(verify_ideal_bijection(c).holds, e.name + ": round trip");
  }
  return o;
}

Outcome localisation() {
  Outcome o;
  for (const auto& e : gallery())
    o.require(is_simple(simple_quotient(build(e.document)).cat), e.name + ": Simple(C) not simple");
  for (const char* name : {"q3", "boolean2x2"}) {
    const auto c = gallery_category(name);
    for (const auto& s : enumerate_subunits(c))
      o.require(restriction_localisation_bijection(c, s, localise(c, sigma(c, {s}))).holds,
                std::string(name) + ": hom bijection");
  }
  return o;
}

Outcome join_hierarchy() {
  Outcome o;
  for (const char* name : {"boolean2x2", "b2", "c3", "q3"})
    o.require(is_locale_based(gallery_category(name)).holds, std::string(name) + " not locale-based");
  const auto m3 = gallery_category("m3");
  const auto r = has_universal_finite_joins(m3);
  o.require(!r.holds, "m3 has universal finite joins");
  o.require(r.square && commutes(m3.cat, *r.square) && !is_pushout(m3.cat, *r.square), "m3 witness not replayable");
  for (const auto& e : gallery()) {
    const auto c = build(e.document);
    const auto ch = check_characterisation(c);
    o.require(ch.holds == is_locale_based(c).holds && ch.cross_check_agrees, e.name + ": characterisation");
  }
  return o;
}

Outcome day_convolution() {
  Outcome o;
  int presheaves = 0;
  for (const char* name : {"b2", "c3"}) {
    const auto c = gallery_category(name);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto f = random_thin_presheaf(c, seed, 3);
      const auto u = day_unitors(c, f);
      o.require(is_invertible_nat(u.right_tensor.presheaf, f, u.rho) &&
                    is_invertible_nat(u.left_tensor.presheaf, f, u.lambda),
                std::string(name) + ": unitor not invertible");
      ++presheaves;
    }
  }
  o.require(presheaves >= 40, "too few presheaves");
  for (const char* name : {"b2", "c3", "q3"}) {
    const auto c = gallery_category(name);
    for (int a = 0; a < c.num_objects(); ++a)
      for (int b = 0; b < c.num_objects(); ++b)
        o.require(find_presheaf_iso(c, day_tensor(c, yoneda(c, a), yoneda(c, b)).presheaf,
                                    yoneda(c, c.tensor(a, b)))
                      .has_value(),
                  std::string(name) + ": Yoneda not monoidal");
  }
  return o;
}

Outcome completion() {
  Outcome o;
  for (const char* name : {"b2", "c3", "q3", "boolean2x2"}) {
    const auto c = gallery_category(name);
    const auto l = subunit_semilattice(c);
    const std::pair<Flavour, DownsetLattice> cases[] = {{Flavour::all, downsets(l.lattice)},
                                                        {Flavour::finite, finitely_bounded_downsets(l.lattice)},
                                                        {Flavour::directed, directed_downsets(l.lattice)}};
    for (const auto& [fl, expected] : cases) {
      const auto b = broad_category(c, fl);
      const auto isub = subunit_semilattice(b.cat);
      o.require(posets_isomorphic(isub.lattice.poset, expected.as_poset()),
                std::string(name) + "/" + to_string(fl) + ": ISub mismatch");
      if (fl == Flavour::all) o.require(is_locale_based(b.cat).holds, std::string(name) + ": completion not locale-based");
    }
  }
  return o;
}

Outcome non_topos() {
  Outcome o;
  o.require(!terminal_object(broad_category(gallery_category("z2"), Flavour::all).cat.cat).has_value(),
            "z2 completion has a terminal object");
  return o;
}

Outcome fault_sensitivity() {
  Outcome o;
  for (const auto& e : gallery()) {
    const auto c = build(e.document);
    // Category axioms: some single composition entry change is caught with a witness.
    bool caught = false;
    for (std::size_t i = 0; i < c.cat.compose_table().size() && !caught; ++i)
      for (int v = 0; v < c.num_morphisms() && !caught; ++v) {
        if (v == c.cat.compose_table()[i]) continue;
        auto table = c.cat.compose_table();
        table[i] = v;
        MonoidalCategory bad = c;
        bad.cat = FinCategory(c.cat.objects(), c.cat.morphisms(), c.cat.identity_table(), table);
        bool witness = false;
        caught = rejects(bad, witness) && witness;
      }
    o.require(caught, e.name + ": category validator");

    // Quantale or semilattice laws of the algebraic input.
    std::optional<Quantale> q;
    if (e.document.kind == "quantale") q = document_quantale(e.document);
    if (e.document.kind == "monoid" || e.document.kind == "monoid_ideals") q = ideal_quantale(document_monoid(e.document));
    if (e.document.kind == "semilattice" && is_frame(document_poset(e.document)))
      q = Quantale::from_frame(document_poset(e.document));
    if (q) {
      bool hit = false;
      for (std::size_t i = 0; i < q->mult.size() && !hit; ++i) {
        Quantale bad = *q;
        bad.mult[i] = (bad.mult[i] + 1) % bad.size();
        const auto v = bad.check();
        hit = !v.empty() && !v.front().witness.empty();
      }
      o.require(hit, e.name + ": quantale validator");
    } else {
      Semilattice bad = document_semilattice(e.document);
      bad.meet_table[1] = (bad.meet_table[1] + 1) % bad.size();
      const auto v = bad.check();
      o.require(!v.empty() && !v.front().witness.empty(), e.name + ": semilattice validator");
    }

    // Right-fraction conditions: drop one member of Σ.
    const auto sig = sigma(c, enumerate_subunits(c));
    bool frac = false;
    for (std::size_t i = 0; i < sig.members.size() && !frac; ++i) {
      SigmaClass bad = sig;
      bad.members.erase(bad.members.begin() + static_cast<std::ptrdiff_t>(i));
      bad.origin.erase(bad.origin.begin() + static_cast<std::ptrdiff_t>(i));
      const auto r = verify_right_fractions(c, bad);
      frac = !r.holds && !r.witness.empty();
    }
    o.require(frac, e.name + ": fraction validator");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "quantale subunit formula", 1, quantale_subunit_formula},
      {2, "support counterexample on q3", 1, support_counterexample},
      {3, "subunit order by factoring and by invertibility", 5, order_lemma},
      {4, "subunit semilattice laws", 5, semilattice_laws},
      {5, "graded monad and restriction comonad laws", 10, monad_comonad_laws},
      {6, "tensor ideals correspond to subunits", 30, ideal_bijection},
      {7, "simple quotient and restriction as localisation", 30, localisation},
      {8, "universal join hierarchy", 60, join_hierarchy},
      {9, "Day convolution unit and Yoneda", 60, day_convolution},
      {10, "broad completion subunits", 120, completion},
      {11, "z2 completion has no terminal object", 5, non_topos},
      {12, "validators reject single-entry corruptions", 10, fault_sensitivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget) {
      o.ok = false;
      o.note = "over time budget";
    }
    failed += !o.ok;
    std::printf("%s criterion %2d: %s (%.3f s, budget %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs,
                c.budget, o.ok ? "" : ": ", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
