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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttw/fincat.hpp"

namespace ttw {

struct Subunit {
  SubobjectClass cls;
  int mono = -1;         // canonical representative s: S → I
  int domain = -1;       // S
  int witness_iso = -1;  // inverse of s⊗S (a section, in split-epic mode)
};

struct SubunitOptions {
  /// Accept s when s⊗S is merely split epic instead of invertible.
  bool split_epic = false;
};

std::vector<Subunit> enumerate_subunits(const MonoidalCategory& c, SubunitOptions opt = {});

/// Index into `subs` of the subunit whose class contains the mono `f` into I.
std::optional<int> subunit_index_of(const MonoidalCategory& c, const std::vector<Subunit>& subs, int f);

struct OrderVerdict {
  bool by_factoring = false;
  bool by_invertibility = false;
};

/// s ≤ t computed by factoring and by invertibility of S⊗t.
OrderVerdict subunit_leq_both(const MonoidalCategory& c, const Subunit& s, const Subunit& t);
/// Throws ConsistencyError when the two methods disagree.
bool subunit_leq(const MonoidalCategory& c, const Subunit& s, const Subunit& t);
/// The inclusion i: S → T with t∘i = s.
std::optional<int> inclusion(const MonoidalCategory& c, const Subunit& s, const Subunit& t);

struct SubunitSemilattice {
  std::vector<Subunit> elements;
  /// Labels are the domain objects' labels.
  Semilattice lattice;

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int a, int b) const { return lattice.poset.leq(a, b); }
  int meet(int a, int b) const { return lattice.meet(a, b); }
  int top() const { return lattice.top; }
  std::optional<int> join(int a, int b) const { return lattice.poset.join(a, b); }
  std::optional<int> join_of(const std::vector<int>& xs) const { return lattice.poset.join_of(xs); }
  std::optional<int> index_of_label(const std::string& label) const {
    return lattice.poset.index_of(label);
  }
};

/// Throws PreconditionError naming a failing pair when C is not firm, and
/// ConsistencyError when the meet table does not satisfy the laws.
SubunitSemilattice subunit_semilattice(const MonoidalCategory& c);

PropertyReport is_firm(const MonoidalCategory& c);
PropertyReport is_stiff(const MonoidalCategory& c);
PropertyReport has_universal_finite_joins(const MonoidalCategory& c);
PropertyReport has_universal_directed_joins(const MonoidalCategory& c);
/// Checks the definition directly, then compares with the conjunction of the
/// finite and directed join properties (`cross_check_agrees`).
PropertyReport is_locale_based(const MonoidalCategory& c);
/// Colimit of D(U,X), monicity of colim D(U,I) → I and invertibility of
/// colim D(U,X) → colim D(U,I) ⊗ X for every idempotent U and object X.
/// `cross_check_agrees` compares the verdict with is_locale_based.
PropertyReport check_characterisation(const MonoidalCategory& c);

/// Subsets U of ISub closed under meets, as masks over semilattice indices.
std::vector<Mask> idempotent_families(const SubunitSemilattice& l);

/// D(U,X): nodes S⊗X for s ∈ U (in index order), an edge for every f with
/// (t⊗X)∘f = s⊗X other than identities.
DiagramSpec subunit_diagram(const MonoidalCategory& c, const SubunitSemilattice& l, Mask u, int x);

/// Square with corners S⊗T⊗X, T⊗X, S⊗X, X.
Square stiffness_square(const MonoidalCategory& c, const Subunit& s, const Subunit& t, int x);
/// Square with corners S⊗T⊗X, T⊗X, S⊗X, J⊗X where j = s ∨ t.
Square join_square(const MonoidalCategory& c, const Subunit& s, const Subunit& t, const Subunit& j,
                   int x);

}  // namespace ttw
