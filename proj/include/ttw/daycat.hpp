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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttw/fincat.hpp"
#include "ttw/orderkit.hpp"
#include "ttw/subunits.hpp"

namespace ttw {

/// Finite presheaf: values(A) = {0, ..., sizes[A]-1}; for f: A → B,
/// action[f] maps values(B) to values(A).
struct Presheaf {
  std::vector<int> sizes;
  std::vector<std::vector<int>> action;

  bool operator==(const Presheaf&) const = default;
};

/// Per-object component maps.
using NatTrans = std::vector<std::vector<int>>;

ViolationList check_presheaf(const MonoidalCategory& c, const Presheaf& f);

/// values(B) = C(B, A), listed in hom order; action by precomposition.
Presheaf yoneda(const MonoidalCategory& c, int a);
Presheaf unit_presheaf(const MonoidalCategory& c);

bool is_natural(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g, const NatTrans& t);
NatTrans identity_nat(const Presheaf& f);
NatTrans compose_nat(const NatTrans& g, const NatTrans& f);
bool is_invertible_nat(const Presheaf& f, const Presheaf& g, const NatTrans& t);
/// All natural transformations, capped by max_cocones.
std::vector<NatTrans> natural_transformations(const MonoidalCategory& c, const Presheaf& f,
                                              const Presheaf& g);
std::optional<NatTrans> find_presheaf_iso(const MonoidalCategory& c, const Presheaf& f,
                                          const Presheaf& g);

/// Random presheaf on a thin category, built from maps along the covers.
/// Retries until functorial; value sets have at most `max_values` elements.
Presheaf random_thin_presheaf(const MonoidalCategory& c, std::uint64_t seed, int max_values);

/// (h: A → B⊗C, x ∈ F(B), y ∈ G(C)); h is a morphism id.
struct DayTriple {
  int b = -1;
  int c = -1;
  int h = -1;
  int x = -1;
  int y = -1;

  bool operator==(const DayTriple&) const = default;
};

struct DayTensorResult {
  Presheaf presheaf;
  /// Per object: all triples, their class, and the least triple of each class.
  std::vector<std::vector<DayTriple>> triples;
  std::vector<std::vector<int>> class_of;
  std::vector<std::vector<int>> representative;
  /// Per object, index of the first triple with given (b, c), at b * N + c.
  std::vector<std::vector<int>> offsets;
  std::vector<int> left_sizes;
  std::vector<int> right_sizes;

  int class_index(const MonoidalCategory& c, int a, const DayTriple& t) const;
};

DayTensorResult day_tensor(const MonoidalCategory& c, const Presheaf& f, const Presheaf& g);
/// (h, x, y) ↦ (h, φ(x), ψ(y)); ConsistencyError if not well defined on classes.
NatTrans day_tensor_mor(const MonoidalCategory& c, const DayTensorResult& from, const DayTensorResult& to,
                        const NatTrans& phi, const NatTrans& psi);

struct DayUnitors {
  DayTensorResult right_tensor;  // F ⊗̂ Î
  DayTensorResult left_tensor;   // Î ⊗̂ F
  NatTrans rho;                  // F ⊗̂ Î ⇒ F
  NatTrans lambda;               // Î ⊗̂ F ⇒ F
};

/// ConsistencyError when a component is not well defined, natural or invertible.
DayUnitors day_unitors(const MonoidalCategory& c, const Presheaf& f);

/// Subfunctor of C(-, I): per object, sorted morphism ids.
struct Sieve {
  std::vector<std::vector<int>> members;

  bool operator==(const Sieve&) const = default;
  bool contains(int a, int f) const;
  bool subset_of(const Sieve& o) const;
};

/// All sieves on I, capped by max_sieves.
std::vector<Sieve> sieves(const MonoidalCategory& c);
Presheaf sieve_presheaf(const MonoidalCategory& c, const Sieve& s);
/// Every s ∈ S(A) is (x⊗y)∘h for exactly one class (h, x, y) of S ⊗̂ S.
bool sieve_is_subunit_by_factorisation(const MonoidalCategory& c, const Sieve& s);
/// The inclusion ι: S → Î has ι ⊗̂ S invertible.
bool sieve_is_subunit_by_tensor(const MonoidalCategory& c, const Sieve& s);
/// Sieves passing both tests; ConsistencyError when the tests disagree.
std::vector<Sieve> presheaf_subunits(const MonoidalCategory& c);
FinPoset sieve_poset(const MonoidalCategory& c, const std::vector<Sieve>& s);

enum class Flavour { finite, directed, all };
const char* to_string(Flavour f);
std::optional<Flavour> flavour_from_string(const std::string& s);

/// U is a downset of ISub (semilattice indices), X an object.
struct BroadSpec {
  Mask u = 0;
  int x = -1;

  bool operator==(const BroadSpec&) const = default;
};

/// The downsets allowed for a flavour, in DownsetLattice order.
DownsetLattice flavour_downsets(const SubunitSemilattice& l, Flavour f);
/// f: A → X restricting to some s ∈ U, per object, in hom order.
std::vector<std::vector<int>> broad_values(const MonoidalCategory& c, const SubunitSemilattice& l,
                                           const BroadSpec& b);
/// PreconditionError when C is not stiff or U is not a downset.
Presheaf broad_presheaf(const MonoidalCategory& c, const SubunitSemilattice& l, const BroadSpec& b);
/// ↓{s ∧ t | s ∈ U, t ∈ V}.
Mask tensor_families(const SubunitSemilattice& l, Mask u, Mask v);

/// [U,X] ⊗̂ [V,Y] → [U⊗V, X⊗Y], (h, f, g) ↦ (f⊗g)∘h, is well defined and bijective.
PropertyReport broad_tensor_lemma(const MonoidalCategory& c, const SubunitSemilattice& l, const BroadSpec& a,
                                  const BroadSpec& b);

struct BroadCategory {
  Flavour flavour = Flavour::all;
  SubunitSemilattice base;
  MonoidalCategory cat;
  std::vector<BroadSpec> specs;  // one per object
  /// Per morphism, cocone legs c_s: S⊗X → Y for s ∈ U in index order.
  std::vector<std::vector<int>> legs;
  /// A ↦ (ISub, A) and f ↦ (f∘(s⊗X))_s.
  std::vector<int> embed_obj;
  std::vector<int> embed_mor;

  std::optional<int> object_of(const BroadSpec& b) const;
  std::optional<int> morphism_of(int from, int to, const std::vector<int>& legs) const;
};

/// Objects (U, X) with U a downset of the flavour; morphisms are cocones over
/// D(U, X) whose legs restrict to V. PreconditionError when C is not stiff;
/// CapExceeded (broad_objects) on large inputs.
BroadCategory broad_category(const MonoidalCategory& c, Flavour f);

/// Hom-set of the broad category against natural transformations of the
/// presheaves, via α ↦ (α_{S⊗X}(s⊗X))_s.
PropertyReport broad_hom_matches_presheaf(const MonoidalCategory& c, const BroadCategory& b, int from, int to);

/// ISub of the broad category is the flavour's downset lattice, with U ↦ Û.
PropertyReport verify_broad_subunits(const BroadCategory& b);

/// Strict braided monoidal functor given on objects and morphisms.
struct MonoidalFunctor {
  std::vector<int> obj;
  std::vector<int> mor;
};

/// Functor laws, strict monoidality, braiding and subunit preservation.
ViolationList check_monoidal_functor(const MonoidalCategory& c, const MonoidalCategory& d,
                                     const MonoidalFunctor& f);

struct ExtendedFunctor {
  MonoidalFunctor functor;  // on the broad category
  /// ⋁F(U) as a subunit mono of D, per broad object.
  std::vector<int> join_mono;
  PropertyReport report;
};

/// F̄(U, X) = (⋁F(U)) ⊗ F(X), morphisms by mediating maps. PreconditionError
/// when F is not a strict monoidal subunit-preserving functor or D lacks a
/// needed join.
ExtendedFunctor extend_functor(const MonoidalCategory& c, const MonoidalCategory& d, const MonoidalFunctor& f,
                               Flavour flavour);

}  // namespace ttw
