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

#include <json.hpp>

#include "ttw/daycat.hpp"
#include "ttw/errors.hpp"
#include "ttw/fincat.hpp"
#include "ttw/orderkit.hpp"

namespace ttw {

using Json = nlohmann::ordered_json;

/// Document does not match the schema. `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Tables are well formed but break a category, monoidal or order axiom.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, ViolationList v) : Error(what), violations_(std::move(v)) {}
  const ViolationList& violations() const noexcept { return violations_; }

 private:
  ViolationList violations_;
};

inline constexpr const char* kSchemaVersion = "ttw/1";

/// kind ∈ {explicit, quantale, semilattice, monoid, monoid_ideals}.
struct CategoryDocument {
  std::string kind;
  std::string name;
  Json payload;  // the whole object, kind and name included

  bool operator==(const CategoryDocument& o) const {
    return kind == o.kind && name == o.name && payload == o.payload;
  }
};

/// Schema check only: shapes, sizes and label references.
CategoryDocument parse_document(const Json& j);
/// Also reports JSON syntax errors as SchemaError with the byte offset.
CategoryDocument parse_document_text(const std::string& text);
Json emit_document(const CategoryDocument& d);

/// Builds and validates; AxiomError on a law violation.
MonoidalCategory build(const CategoryDocument& d);

/// The algebraic inputs behind a shorthand document.
FinPoset document_poset(const CategoryDocument& d);
Semilattice document_semilattice(const CategoryDocument& d);
Quantale document_quantale(const CategoryDocument& d);
Monoid document_monoid(const CategoryDocument& d);

/// Explicit-tables document for an already built category.
CategoryDocument explicit_document(const MonoidalCategory& c);

/// {"values": {object: count}, "action": {morphism: [index, ...]}}. Identity
/// actions may be omitted. SchemaError on shape errors, AxiomError when the
/// action is not functorial.
Presheaf parse_presheaf(const Json& j, const MonoidalCategory& c);
Json presheaf_json(const MonoidalCategory& c, const Presheaf& p);

struct GalleryEntry {
  std::string name;
  std::string description;
  CategoryDocument document;
};

const std::vector<GalleryEntry>& gallery();
/// Throws UnknownName.
const GalleryEntry& gallery_entry(const std::string& name);
MonoidalCategory gallery_category(const std::string& name);

}  // namespace ttw
