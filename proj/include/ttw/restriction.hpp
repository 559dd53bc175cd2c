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
#include <vector>

#include "ttw/fincat.hpp"
#include "ttw/subunits.hpp"

namespace ttw {

/// Some g with f = (s⊗B)∘g, for f: A → B.
std::optional<int> restricts_to(const MonoidalCategory& c, int f, const Subunit& s);

struct ObjectRestriction {
  bool a_tensor_invertible = false;  // s⊗A is invertible
  bool b_iso_to_self = false;        // S⊗A ≅ A
  bool c_iso_to_some = false;        // S⊗B ≅ A for some B
  bool d_identity_restricts = false; // id_A restricts to s
};

/// Evaluates the four conditions separately; ConsistencyError if they differ.
ObjectRestriction object_restriction_equivalences(const MonoidalCategory& c, int a, const Subunit& s);

struct RestrictionCategory {
  Subunit subunit;
  /// Full subcategory on the objects A with s⊗A invertible.
  FullSubcategory sub;
  /// Coreflector A ↦ S⊗A, f ↦ S⊗f, as ambient indices.
  std::vector<int> coreflector_obj;
  std::vector<int> coreflector_mor;
  /// Bijection C(A,B) ≅ C|s(A, S⊗B) and its naturality.
  PropertyReport adjunction;
  /// Closure under ⊗, S as unit up to iso, coreflector strong monoidal.
  PropertyReport monoidal;
  /// The inclusion's unit comparison S → I is s itself, so the inclusion is
  /// strong monoidal only when s is invertible.
  bool inclusion_unit_invertible = false;
};

RestrictionCategory restriction_category(const MonoidalCategory& c, const Subunit& s);

/// Objects of E are all subunit monomorphisms (no quotient by equivalence).
struct GradedMonadData {
  std::vector<int> grades;  // morphism ids s: S → I
  /// E-morphisms f: s → t with s = t∘f, as (s index, t index, f).
  struct Arrow {
    int from = -1;
    int to = -1;
    int mor = -1;
  };
  std::vector<Arrow> arrows;
  /// Index of s⊗t in `grades`, or -1.
  std::vector<int> grade_tensor;
  int unit_grade = -1;
};

GradedMonadData graded_monad_data(const MonoidalCategory& c);
PropertyReport verify_graded_monad(const MonoidalCategory& c);

struct ComonadData {
  std::vector<int> f_obj;    // F(A)
  std::vector<int> f_mor;    // F(f)
  std::vector<int> delta;    // δ_A: F(A) → F(F(A))
  std::vector<int> epsilon;  // ε_A: F(A) → A
  std::vector<int> phi;      // φ_{A,B}: A⊗F(B) → F(A⊗B), N×N

  bool operator==(const ComonadData&) const = default;
};

ComonadData restriction_comonad(const MonoidalCategory& c, const Subunit& s);
/// Comonad, invertibility, strength and Frobenius laws.
ViolationList check_comonad(const MonoidalCategory& c, const ComonadData& f);
/// ε_I as a subunit. Rejects F (PreconditionError) when a law fails or F(I)⊗ε_I
/// is not invertible, computed both directly and through the δ/φ composite.
Subunit extract_subunit(const MonoidalCategory& c, const ComonadData& f);
PropertyReport verify_comonad_bijection(const MonoidalCategory& c);

struct TensorIdeal {
  std::vector<int> objects;
  /// Coreflection G(A) and counit ε_A: G(A) → A for every ambient A.
  std::vector<int> coreflector_obj;
  std::vector<int> counit;
};

/// Re-checks the four defining conditions of a candidate ideal.
bool is_tensor_ideal(const MonoidalCategory& c, const TensorIdeal& d);
std::vector<TensorIdeal> tensor_ideals(const MonoidalCategory& c);
PropertyReport verify_ideal_bijection(const MonoidalCategory& c);

/// f∘g and f⊗g restrict to s∧t whenever f restricts to s and g to t; and
/// retractions e∘m = id transfer restriction both ways.
PropertyReport restriction_composition_law(const MonoidalCategory& c);

}  // namespace ttw
