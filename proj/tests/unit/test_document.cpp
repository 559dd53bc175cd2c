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

#include <doctest.h>

#include <algorithm>
#include <string>

#include "ttw/daycat.hpp"
#include "ttw/document.hpp"
#include "ttw/render.hpp"
#include "ttw/subunits.hpp"

using namespace ttw;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::string schema_path(const std::string& text) {
  try {
    build(parse_document_text(text));
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("gallery documents round-trip through emit and parse") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto text = emit_document(e.document).dump(2);
    CHECK(parse_document_text(text) == e.document);
  }
}

TEST_CASE("explicit tables round-trip and rebuild the same category") {
  for (const auto& e : gallery()) {
    CAPTURE(e.name);
    const auto c = build(e.document);
    const auto d = explicit_document(c);
    CHECK(d.kind == "explicit");
    const auto again = parse_document_text(emit_document(d).dump());
    CHECK(build(again) == c);
  }
}

TEST_CASE("semilattice shorthand for b2 equals explicit tables") {
  const auto c = gallery_category("b2");
  const std::string text = R"({
    "kind": "explicit", "name": "b2",
    "objects": ["0", "1"],
    "morphisms": [{"dom": 0, "cod": 0, "label": "id_0"},
                  {"dom": 0, "cod": 1, "label": "0->1"},
                  {"dom": 1, "cod": 1, "label": "id_1"}],
    "identity": [0, 2],
    "compose": [[0, null, null], [1, null, null], [null, 1, 2]],
    "unit": 1,
    "tensor_obj": [[0, 0], [0, 1]],
    "tensor_mor": [[0, 0, 0], [0, 1, 1], [0, 1, 2]],
    "braiding": [[0, 0], [0, 2]]
  })";
  CHECK(build(parse_document_text(text)) == c);
}

TEST_CASE("dangling morphism index reports its path") {
  auto j = emit_document(explicit_document(gallery_category("b2")));
  j["identity"][1] = 7;
  CHECK(schema_path(j.dump()) == "/identity/1");
}

TEST_CASE("schema errors carry a JSON pointer") {
  CHECK(schema_path(R"({"kind": "lattice", "elements": ["0"]})") == "/kind");
  CHECK(schema_path(R"({"kind": "semilattice", "elements": ["0", "1"], "leq": [["0", "2"]]})") == "/leq/0/1");
  CHECK(schema_path(R"({"kind": "quantale", "elements": ["0"], "mult": [["0"]]})") == "/unit");
  CHECK(schema_path("{ not json") == "");
}

TEST_CASE("axiom violations are not schema errors") {
  // Multiplication that is not monotone.
  const std::string text = R"({"kind": "quantale", "elements": ["0", "1"], "leq": [["0", "1"]],
                               "mult": [["1", "0"], ["0", "1"]], "unit": "1"})";
  CHECK_THROWS_AS(build(parse_document_text(text)), AxiomError);
}

TEST_CASE("presheaf documents") {
  const auto c = gallery_category("c3");
  const auto y = yoneda(c, 1);
  const auto j = presheaf_json(c, y);
  CHECK(parse_presheaf(j, c) == y);
  Json bad = j;
  bad["values"].erase("m");
  CHECK_THROWS_AS(parse_presheaf(bad, c), SchemaError);
  Json unknown = j;
  unknown["action"]["nope"] = Json::array();
  CHECK_THROWS_AS(parse_presheaf(unknown, c), SchemaError);
}

TEST_CASE("DOT for b2 has two nodes and one edge") {
  const auto dot = render_dot(subunit_semilattice(gallery_category("b2")).lattice.poset, "b2");
  CHECK(count(dot, "[label=") == 2);
  CHECK(count(dot, "->") == 1);
  CHECK(dot == render_dot(subunit_semilattice(gallery_category("b2")).lattice.poset, "b2"));
}

TEST_CASE("DOT of the downsets of a vee") {
  const auto vee = FinPoset::from_pairs({"a", "b", "t"}, {{0, 2}, {1, 2}});
  const auto d = downsets(vee).as_poset();
  const auto dot = render_dot(d, "vee");
  CHECK(count(dot, "[label=") == 5);
  CHECK(count(dot, "->") == static_cast<int>(d.covers().size()));
  CHECK(d.covers().size() == 5);
}

TEST_CASE("DOT of ISub(q3) is a two-element chain") {
  const auto dot = render_dot(subunit_semilattice(gallery_category("q3")).lattice.poset, "q3");
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(count(dot, "->") == 1);
}

TEST_CASE("labels with quotes are escaped") {
  const auto dot = render_dot(FinPoset::chain({"a\"b"}), "x");
  CHECK(dot.find("\"a\\\"b\"") != std::string::npos);
}

TEST_CASE("unknown gallery name") { CHECK_THROWS_AS(gallery_entry("nope"), UnknownName); }
