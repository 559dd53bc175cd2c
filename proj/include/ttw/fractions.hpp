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

#include <string>
#include <vector>

#include "ttw/fincat.hpp"
#include "ttw/subunits.hpp"

namespace ttw {

/// Morphism class generated by the s⊗A (for the given subunits) and the
/// identities, closed under composition and under tensoring with objects.
struct SigmaClass {
  std::vector<int> members;          // sorted morphism ids
  std::vector<std::string> origin;   // aligned with members
  std::vector<int> subunits;         // generating subunit monos

  bool contains(int f) const;
};

SigmaClass sigma(const MonoidalCategory& c, const std::vector<Subunit>& subunits);

/// Identities, composition closure, the Ore square and the cancellation
/// condition, all checked exhaustively.
PropertyReport verify_right_fractions(const MonoidalCategory& c, const SigmaClass& s);

/// The fraction n∘d^{-1}: A → B with d: P → A in Σ and n: P → B.
struct FractionSpan {
  int denominator = -1;
  int numerator = -1;

  auto operator<=>(const FractionSpan&) const = default;
};

struct LocalisedCategory {
  /// Same objects, tensor on objects and unit as C.
  MonoidalCategory cat;
  /// Least span of each class, by (denominator, numerator).
  std::vector<FractionSpan> representative;
  std::vector<std::vector<FractionSpan>> classes;
  /// Q on morphisms: f ↦ [(id, f)].
  std::vector<int> quotient;
  /// The one-step span relation was already an equivalence relation.
  bool relation_is_equivalence = true;
};

/// Throws PreconditionError when the fraction conditions fail.
LocalisedCategory localise(const MonoidalCategory& c, const SigmaClass& s);

/// Q is a strict monoidal functor inverting Σ; composition does not depend
/// on the chosen representatives.
PropertyReport verify_localisation(const MonoidalCategory& c, const SigmaClass& s,
                                   const LocalisedCategory& l);

/// Hom-sets of the localisation at {s⊗A} against C(S⊗A, S⊗B) through
/// [(d, n)] ↦ (S⊗n)∘(S⊗d)^{-1}.
PropertyReport restriction_localisation_bijection(const MonoidalCategory& c, const Subunit& s,
                                                  const LocalisedCategory& l);

bool is_simple(const MonoidalCategory& c);
/// Localisation at Σ for all subunits. PreconditionError when C is not firm.
LocalisedCategory simple_quotient(const MonoidalCategory& c);

}  // namespace ttw
