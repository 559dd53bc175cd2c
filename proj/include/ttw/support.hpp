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
#include <utility>
#include <vector>

#include "ttw/fincat.hpp"
#include "ttw/orderkit.hpp"
#include "ttw/subunits.hpp"

namespace ttw {

/// Subunits (semilattice indices) a morphism restricts to.
Mask restriction_set(const MonoidalCategory& c, const SubunitSemilattice& l, int f);

struct SupportResult {
  int morphism = -1;
  /// {s | f restricts to t implies s ≤ t}, over semilattice indices.
  Mask canonical = 0;
  /// Join of `canonical`; present when ISub has a bottom and all joins.
  std::optional<int> supp;
};

/// PreconditionError when C is not firm.
SupportResult canonical_support(const MonoidalCategory& c, int f);
SupportResult canonical_support(const MonoidalCategory& c, const SubunitSemilattice& l, int f);

struct SupportDatum {
  FinPoset target;                 // complete lattice L
  std::vector<int> on_subunits;    // ISub index → L
  std::vector<int> on_morphisms;   // F(f) = ⋀{F(s) | f restricts to s}
};

/// PreconditionError when L is not a complete lattice or h is not monotone.
SupportDatum support_datum_from_monotone(const MonoidalCategory& c, const SubunitSemilattice& l,
                                         const FinPoset& target, const std::vector<int>& h);
/// h = x ↦ ↓x into downsets of ISub.
SupportDatum canonical_datum(const MonoidalCategory& c, const SubunitSemilattice& l);

/// Defining formula, agreement on subunits, monotonicity along mors(C), the
/// object formula, f∘g and f⊗g below F(f) ∧ F(g), and the factoring
/// F(f) = ⋁{F(s) | s ∈ supp°(f)} through the canonical datum.
PropertyReport verify_support_laws(const MonoidalCategory& c, const SubunitSemilattice& l,
                                   const SupportDatum& d);

/// First pair (f, g) in id order with supp(f) ∧ supp(g) ≠ supp(f⊗g).
std::optional<std::pair<int, int>> support_not_monoidal(const MonoidalCategory& c);

}  // namespace ttw
