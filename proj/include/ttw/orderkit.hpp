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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttw/report.hpp"

namespace ttw {

/// Subset of a poset with at most 64 elements.
using Mask = std::uint64_t;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1U; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
std::vector<int> mask_elements(Mask m);

/// Finite partial order given by its full relation matrix.
class FinPoset {
 public:
  FinPoset() = default;
  /// `leq` is row-major, leq[a * n + b] != 0 iff a <= b.
  FinPoset(std::vector<std::string> labels, std::vector<char> leq);

  /// Reflexive-transitive closure of the given pairs (a, b) meaning a <= b.
  static FinPoset from_pairs(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& pairs);
  /// Chain 0 < 1 < ... < n-1.
  static FinPoset chain(std::vector<std::string> labels);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<char>& relation() const { return leq_; }
  std::optional<int> index_of(std::string_view label) const;

  /// Reflexivity, antisymmetry, transitivity.
  ViolationList check() const;

  std::optional<int> join(int a, int b) const;
  std::optional<int> meet(int a, int b) const;
  std::optional<int> join_of(std::span<const int> elems) const;
  std::optional<int> meet_of(std::span<const int> elems) const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  /// Downward closure of a subset.
  Mask down_closure(Mask m) const;
  bool is_downset(Mask m) const;
  bool is_directed(Mask m) const;

  /// Hasse cover pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  /// Elements ordered so that a < b implies a comes first; ties by index.
  std::vector<int> linear_extension() const;

  /// Induced sub-poset on `elems`, in the given order.
  FinPoset restrict_to(const std::vector<int>& elems) const;

  bool operator==(const FinPoset& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
};

/// Meet-semilattice with top.
struct Semilattice {
  FinPoset poset;
  std::vector<int> meet_table;
  int top = -1;

  int size() const { return poset.size(); }
  int meet(int a, int b) const { return meet_table[static_cast<std::size_t>(a) * size() + b]; }
  ViolationList check() const;

  /// Computes meets from the order; throws PreconditionError when a binary
  /// meet or the top is missing.
  static Semilattice from_poset(FinPoset p);
};

/// Finite quantale: complete lattice with an associative unital multiplication
/// that distributes over joins.
struct Quantale {
  FinPoset poset;
  std::vector<int> mult;
  int unit = -1;

  int size() const { return poset.size(); }
  int mul(int a, int b) const { return mult[static_cast<std::size_t>(a) * size() + b]; }
  bool is_commutative() const;
  ViolationList check() const;

  /// A frame viewed as a quantale (multiplication = meet, unit = top).
  static Quantale from_frame(const FinPoset& frame);
};

struct Monoid {
  std::vector<std::string> labels;
  std::vector<int> mult;
  int unit = 0;

  int size() const { return static_cast<int>(labels.size()); }
  int mul(int a, int b) const { return mult[static_cast<std::size_t>(a) * size() + b]; }
  bool is_commutative() const;
  ViolationList check() const;
};

/// A family of downsets of `base`, ordered by inclusion.
struct DownsetLattice {
  FinPoset base;
  std::vector<Mask> sets;
  /// principal[x] = index in `sets` of the downset generated by x, or -1 when
  /// that downset is not part of the family.
  std::vector<int> principal;

  int size() const { return static_cast<int>(sets.size()); }
  std::optional<int> index_of(Mask m) const;
  /// The inclusion order as a poset; labels list the members, e.g. "{0,a}".
  FinPoset as_poset() const;
};

std::string mask_label(const FinPoset& base, Mask m);

/// All downsets of a poset, sorted by (cardinality, mask).
std::vector<Mask> enumerate_downsets(const FinPoset& p);

DownsetLattice downsets(const FinPoset& p);
DownsetLattice downsets(const Semilattice& L);
/// Upward-directed downsets. The empty set is included by default, making the
/// result the free preframe with a bottom element.
DownsetLattice directed_downsets(const Semilattice& L, bool include_empty = true);
/// Downsets with finitely many maximal elements (every downset, on a finite
/// poset).
DownsetLattice finitely_bounded_downsets(const Semilattice& L);

/// { q | q*q = q <= unit } with multiplication as meet. Rejects noncommutative
/// quantales.
Semilattice quantale_subunits(const Quantale& q);

bool is_lattice(const FinPoset& p);
bool is_complete_lattice(const FinPoset& p);
bool is_distributive(const FinPoset& p);
bool is_frame(const FinPoset& p);
bool is_preframe(const FinPoset& p);

/// Ideals (subsets closed under multiplication by M) of a commutative monoid,
/// ordered by inclusion, with pointwise product and unit M.
Quantale ideal_quantale(const Monoid& m);

}  // namespace ttw
