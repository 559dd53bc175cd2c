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

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttw/orderkit.hpp"
#include "ttw/report.hpp"

namespace ttw {

struct Morphism {
  int id = -1;
  int dom = -1;
  int cod = -1;
  std::string label;

  bool operator==(const Morphism&) const = default;
};

/// Finite category stored as dense tables. The constructor only sizes and
/// indexes the data; `validate` does the checking.
class FinCategory {
 public:
  FinCategory() = default;
  /// `compose[g * M + f]` is g∘f, or -1 when cod(f) != dom(g).
  FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
              std::vector<int> identity, std::vector<int> compose);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_label(int a) const { return objects_[a]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(int f) const { return morphisms_[f]; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int dom(int f) const { return morphisms_[f].dom; }
  int cod(int f) const { return morphisms_[f].cod; }
  int id(int a) const { return identity_[a]; }
  const std::vector<int>& identity_table() const { return identity_; }
  const std::vector<int>& compose_table() const { return compose_; }

  /// g∘f, or -1.
  int compose(int g, int f) const {
    return compose_[static_cast<std::size_t>(g) * num_morphisms() + f];
  }
  /// Composite of a path given last-first: compose_all({h, g, f}) = h∘g∘f.
  int compose_all(std::initializer_list<int> fs) const;

  const std::vector<int>& hom(int a, int b) const {
    return hom_[static_cast<std::size_t>(a) * num_objects() + b];
  }
  bool is_thin() const { return thin_; }

  std::optional<int> object_index(std::string_view label) const;
  std::optional<int> morphism_index(std::string_view label) const;

  bool operator==(const FinCategory& other) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::vector<int> compose_;
  std::vector<std::vector<int>> hom_;
  bool thin_ = true;
};

/// Strict monoidal structure: λ, ρ and α are identities, only σ carries data.
struct MonoidalData {
  int unit = -1;
  std::vector<int> tensor_obj;  // N×N
  std::vector<int> tensor_mor;  // M×M
  std::vector<int> braiding;    // N×N, σ_{A,B}: A⊗B → B⊗A

  bool operator==(const MonoidalData&) const = default;
};

/// A finite category together with its strict braided monoidal data.
struct MonoidalCategory {
  std::string name;
  FinCategory cat;
  MonoidalData mon;

  int unit() const { return mon.unit; }
  int num_objects() const { return cat.num_objects(); }
  int num_morphisms() const { return cat.num_morphisms(); }
  int id(int a) const { return cat.id(a); }
  int dom(int f) const { return cat.dom(f); }
  int cod(int f) const { return cat.cod(f); }
  int compose(int g, int f) const { return cat.compose(g, f); }
  int tensor(int a, int b) const {
    return mon.tensor_obj[static_cast<std::size_t>(a) * num_objects() + b];
  }
  int tensor_mor(int f, int g) const {
    return mon.tensor_mor[static_cast<std::size_t>(f) * num_morphisms() + g];
  }
  int braid(int a, int b) const {
    return mon.braiding[static_cast<std::size_t>(a) * num_objects() + b];
  }
  /// f ⊗ id_X
  int right_whisker(int f, int x) const { return tensor_mor(f, id(x)); }
  /// id_X ⊗ f
  int left_whisker(int x, int f) const { return tensor_mor(id(x), f); }

  bool operator==(const MonoidalCategory& o) const { return cat == o.cat && mon == o.mon; }
};

/// Throws StructuralError on malformed tables; otherwise lists every violated
/// axiom with a witness.
ViolationList validate(const FinCategory& c);
ViolationList validate(const FinCategory& c, const MonoidalData& m);
ViolationList validate(const MonoidalCategory& c);

bool is_mono(const FinCategory& c, int f);
/// Hom-set enumeration without the thin shortcut.
bool is_mono_generic(const FinCategory& c, int f);
bool is_epi(const FinCategory& c, int f);
std::optional<int> is_iso(const FinCategory& c, int f);
std::optional<int> is_iso_generic(const FinCategory& c, int f);
/// Some g with t∘g = s.
std::optional<int> factor_through(const FinCategory& c, int s, int t);
/// Some isomorphism a → b.
std::optional<int> find_iso(const FinCategory& c, int a, int b);

struct SubobjectClass {
  int representative = -1;
  std::vector<int> members;

  bool operator==(const SubobjectClass&) const = default;
};

/// Monos into `a` grouped by mutual factoring, sorted along the factoring
/// order (ties by representative id).
std::vector<SubobjectClass> subobjects(const FinCategory& c, int a);

struct DiagramEdge {
  int source = -1;
  int target = -1;
  int mor = -1;
};

struct DiagramSpec {
  std::vector<int> nodes;
  std::vector<DiagramEdge> edges;
};

struct Cocone {
  int apex = -1;
  std::vector<int> legs;

  bool operator==(const Cocone&) const = default;
};

/// Throws StructuralError if an edge does not match its nodes.
void check_diagram(const FinCategory& c, const DiagramSpec& d);
std::vector<Cocone> cocones_into(const FinCategory& c, const DiagramSpec& d, int apex);
bool is_colimit(const FinCategory& c, const DiagramSpec& d, const Cocone& cocone);
/// First colimiting cocone in object order, then cocone enumeration order.
std::optional<Cocone> colimit(const FinCategory& c, const DiagramSpec& d);
/// The unique m with m∘colim.legs[i] = other.legs[i]; absent when none or
/// several exist.
std::optional<int> mediating(const FinCategory& c, const Cocone& colim, const Cocone& other);

struct SquareObjects {
  int tl, tr, bl, br;
};
/// Throws StructuralError when the morphisms do not form a square.
SquareObjects square_objects(const FinCategory& c, const Square& s);
bool commutes(const FinCategory& c, const Square& s);
/// Both throw NonCommutingSquare when the square does not commute.
bool is_pullback(const FinCategory& c, const Square& s);
bool is_pushout(const FinCategory& c, const Square& s);

struct FullSubcategory {
  FinCategory cat;
  std::vector<int> objects;          // sub object -> ambient object
  std::vector<int> morphisms;        // sub morphism -> ambient morphism
  std::vector<int> object_index;     // ambient object -> sub object or -1
  std::vector<int> morphism_index;   // ambient morphism -> sub morphism or -1
};

/// Objects keep their order; morphisms are listed in ambient id order.
FullSubcategory full_subcategory(const FinCategory& c, const std::vector<int>& objects);

std::optional<int> initial_object(const FinCategory& c);
std::optional<int> terminal_object(const FinCategory& c);

/// Thin category on a poset; tensor given by a monotone table on elements.
/// Morphisms are the pairs x ≤ y in lexicographic order.
MonoidalCategory thin_category(const FinPoset& p, const std::vector<int>& mult, int unit,
                               std::string name = {});
/// Index of the morphism x → y in a category built by `thin_category`.
std::optional<int> thin_morphism(const FinCategory& c, int x, int y);

/// Rejects noncommutative quantales: the braiding would need ab ≅ ba.
MonoidalCategory from_quantale(const Quantale& q, std::string name = {});
MonoidalCategory from_semilattice(const Semilattice& l, std::string name = {});

enum class MonoidMode { one_object, ideal_quantale };
MonoidalCategory from_commutative_monoid(const Monoid& m, MonoidMode mode, std::string name = {});

}  // namespace ttw
