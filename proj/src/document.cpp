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

#include "ttw/document.hpp"

#include <map>
#include <set>

namespace ttw {
namespace {

const std::set<std::string> kKinds = {"explicit", "quantale", "semilattice", "monoid", "monoid_ideals"};

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) throw SchemaError(at(path, key), "missing field");
  return j.at(key);
}

std::vector<std::string> labels(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array of strings");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(at(path, i), "expected a string");
    if (!seen.insert(j[i].get<std::string>()).second) throw SchemaError(at(path, i), "duplicate label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

int label_ref(const Json& j, const std::string& path, const std::vector<std::string>& names) {
  if (!j.is_string()) throw SchemaError(path, "expected an element label");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == j.get<std::string>()) return static_cast<int>(i);
  throw SchemaError(path, "unknown element '" + j.get<std::string>() + "'");
}

int index_ref(const Json& j, const std::string& path, int bound, bool nullable = false) {
  if (nullable && j.is_null()) return -1;
  if (!j.is_number_integer()) throw SchemaError(path, nullable ? "expected an index or null" : "expected an index");
  const auto v = j.get<long long>();
  if (v < 0 || v >= bound) throw SchemaError(path, "index " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> label_table(const Json& j, const std::string& path, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  if (!j.is_array() || j.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " rows");
  std::vector<int> out;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw SchemaError(at(path, r), "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) out.push_back(label_ref(row[c], at(at(path, r), c), names));
  }
  return out;
}

std::vector<int> index_table(const Json& j, const std::string& path, std::size_t rows, std::size_t cols,
                             int bound, bool nullable = false) {
  if (!j.is_array() || j.size() != rows) throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
  std::vector<int> out;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw SchemaError(at(path, r), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) out.push_back(index_ref(row[c], at(at(path, r), c), bound, nullable));
  }
  return out;
}

std::vector<std::pair<int, int>> order_pairs(const Json& j, const std::vector<std::string>& names) {
  std::vector<std::pair<int, int>> out;
  if (!j.contains("leq")) return out;
  const auto& leq = j.at("leq");
  if (!leq.is_array()) throw SchemaError("/leq", "expected an array of pairs");
  for (std::size_t i = 0; i < leq.size(); ++i) {
    if (!leq[i].is_array() || leq[i].size() != 2) throw SchemaError(at("/leq", i), "expected a pair");
    out.emplace_back(label_ref(leq[i][0], at(at("/leq", i), 0), names),
                     label_ref(leq[i][1], at(at("/leq", i), 1), names));
  }
  return out;
}

struct Explicit {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identity, compose;
  MonoidalData mon;
};

Explicit read_explicit(const Json& j) {
  Explicit e;
  e.objects = labels(field(j, "", "objects"), "/objects");
  const int n = static_cast<int>(e.objects.size());
  const auto& ms = field(j, "", "morphisms");
  if (!ms.is_array() || ms.empty()) throw SchemaError("/morphisms", "expected a non-empty array");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string p = at("/morphisms", i);
    if (!ms[i].is_object()) throw SchemaError(p, "expected an object");
    Morphism m;
    m.id = static_cast<int>(i);
    m.dom = index_ref(field(ms[i], p, "dom"), at(p, "dom"), n);
    m.cod = index_ref(field(ms[i], p, "cod"), at(p, "cod"), n);
    if (ms[i].contains("label")) {
      if (!ms[i]["label"].is_string()) throw SchemaError(at(p, "label"), "expected a string");
      m.label = ms[i]["label"].get<std::string>();
    }
    e.morphisms.push_back(m);
  }
  const int m = static_cast<int>(e.morphisms.size());
  const auto& ids = field(j, "", "identity");
  if (!ids.is_array() || static_cast<int>(ids.size()) != n)
    throw SchemaError("/identity", "expected " + std::to_string(n) + " entries");
  for (int a = 0; a < n; ++a) e.identity.push_back(index_ref(ids[a], at("/identity", a), m));
  e.compose = index_table(field(j, "", "compose"), "/compose", m, m, m, true);
  e.mon.unit = index_ref(field(j, "", "unit"), "/unit", n);
  e.mon.tensor_obj = index_table(field(j, "", "tensor_obj"), "/tensor_obj", n, n, n);
  e.mon.tensor_mor = index_table(field(j, "", "tensor_mor"), "/tensor_mor", m, m, m);
  e.mon.braiding = index_table(field(j, "", "braiding"), "/braiding", n, n, m);
  return e;
}

void check_shorthand(const Json& j, const std::string& kind) {
  const auto names = labels(field(j, "", "elements"), "/elements");
  if (kind == "semilattice") {
    order_pairs(j, names);
    return;
  }
  if (kind == "quantale") order_pairs(j, names);
  label_table(field(j, "", "mult"), "/mult", names);
  label_ref(field(j, "", "unit"), "/unit", names);
}

}  // namespace

CategoryDocument parse_document(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  const auto& kind = field(j, "", "kind");
  if (!kind.is_string() || !kKinds.count(kind.get<std::string>()))
    throw SchemaError("/kind", "expected one of explicit, quantale, semilattice, monoid, monoid_ideals");
  CategoryDocument d;
  d.kind = kind.get<std::string>();
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("/name", "expected a string");
    d.name = j["name"].get<std::string>();
  }
  if (d.kind == "explicit") read_explicit(j);
  else check_shorthand(j, d.kind);
  d.payload = j;
  return d;
}

CategoryDocument parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_document(j);
}

Json emit_document(const CategoryDocument& d) { return d.payload; }

FinPoset document_poset(const CategoryDocument& d) {
  auto names = labels(field(d.payload, "", "elements"), "/elements");
  auto pairs = order_pairs(d.payload, names);
  FinPoset p = FinPoset::from_pairs(names, pairs);
  auto v = p.check();
  if (!v.empty()) throw AxiomError("order is not a partial order: " + v.front().to_string(), v);
  return p;
}

Semilattice document_semilattice(const CategoryDocument& d) {
  if (d.kind != "semilattice") throw PreconditionError("not a semilattice document");
  try {
    return Semilattice::from_poset(document_poset(d));
  } catch (const PreconditionError& e) {
    throw AxiomError(e.what(), {{"semilattice meets", {}}});
  }
}

Quantale document_quantale(const CategoryDocument& d) {
  if (d.kind != "quantale") throw PreconditionError("not a quantale document");
  const auto names = labels(d.payload.at("elements"), "/elements");
  Quantale q;
  q.poset = document_poset(d);
  q.mult = label_table(d.payload.at("mult"), "/mult", names);
  q.unit = label_ref(d.payload.at("unit"), "/unit", names);
  auto v = q.check();
  if (!v.empty()) throw AxiomError("quantale law fails: " + v.front().to_string(), v);
  return q;
}

Monoid document_monoid(const CategoryDocument& d) {
  if (d.kind != "monoid" && d.kind != "monoid_ideals") throw PreconditionError("not a monoid document");
  Monoid m;
  m.labels = labels(d.payload.at("elements"), "/elements");
  m.mult = label_table(d.payload.at("mult"), "/mult", m.labels);
  m.unit = label_ref(d.payload.at("unit"), "/unit", m.labels);
  auto v = m.check();
  if (!v.empty()) throw AxiomError("monoid law fails: " + v.front().to_string(), v);
  if (!m.is_commutative()) throw AxiomError("monoid is not commutative", {{"commutativity", {}}});
  return m;
}

MonoidalCategory build(const CategoryDocument& d) {
  MonoidalCategory c;
  if (d.kind == "explicit") {
    Explicit e = read_explicit(d.payload);
    c.cat = FinCategory(std::move(e.objects), std::move(e.morphisms), std::move(e.identity), std::move(e.compose));
    c.mon = std::move(e.mon);
  } else if (d.kind == "semilattice") {
    c = from_semilattice(document_semilattice(d));
  } else if (d.kind == "quantale") {
    const Quantale q = document_quantale(d);
    if (!q.is_commutative()) throw AxiomError("quantale is not commutative", {{"commutativity", {}}});
    c = from_quantale(q);
  } else {
    c = from_commutative_monoid(document_monoid(d),
                                d.kind == "monoid" ? MonoidMode::one_object : MonoidMode::ideal_quantale);
  }
  c.name = d.name;
  auto v = validate(c);
  if (!v.empty()) throw AxiomError("category axiom fails: " + v.front().to_string(), v);
  return c;
}

CategoryDocument explicit_document(const MonoidalCategory& c) {
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  Json j;
  j["kind"] = "explicit";
  j["name"] = c.name;
  j["objects"] = c.cat.objects();
  Json ms = Json::array();
  for (const auto& f : c.cat.morphisms()) ms.push_back({{"label", f.label}, {"dom", f.dom}, {"cod", f.cod}});
  j["morphisms"] = ms;
  j["identity"] = c.cat.identity_table();
  Json comp = Json::array();
  for (int g = 0; g < m; ++g) {
    Json row = Json::array();
    for (int f = 0; f < m; ++f) {
      const int gf = c.compose(g, f);
      row.push_back(gf < 0 ? Json(nullptr) : Json(gf));
    }
    comp.push_back(row);
  }
  j["compose"] = comp;
  j["unit"] = c.unit();
  auto square = [](const std::vector<int>& t, int k) {
    Json out = Json::array();
    for (int r = 0; r < k; ++r) out.push_back(std::vector<int>(t.begin() + r * k, t.begin() + (r + 1) * k));
    return out;
  };
  j["tensor_obj"] = square(c.mon.tensor_obj, n);
  j["tensor_mor"] = square(c.mon.tensor_mor, m);
  j["braiding"] = square(c.mon.braiding, n);
  return parse_document(j);
}

Presheaf parse_presheaf(const Json& j, const MonoidalCategory& c) {
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  const auto& values = field(j, "", "values");
  if (!values.is_object()) throw SchemaError("/values", "expected an object keyed by object label");
  Presheaf p;
  p.sizes.assign(c.num_objects(), -1);
  for (const auto& [key, v] : values.items()) {
    auto a = c.cat.object_index(key);
    if (!a) throw SchemaError(at("/values", key), "unknown object");
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(at("/values", key), "expected a count");
    p.sizes[*a] = static_cast<int>(v.get<long long>());
  }
  for (int a = 0; a < c.num_objects(); ++a)
    if (p.sizes[a] < 0) throw SchemaError(at("/values", c.cat.object_label(a)), "missing count");
  p.action.assign(c.num_morphisms(), {});
  std::vector<char> given(c.num_morphisms(), 0);
  if (j.contains("action")) {
    const auto& act = j.at("action");
    if (!act.is_object()) throw SchemaError("/action", "expected an object keyed by morphism label");
    for (const auto& [key, v] : act.items()) {
      const std::string path = at("/action", key);
      auto f = c.cat.morphism_index(key);
      if (!f) throw SchemaError(path, "unknown morphism");
      const int from = p.sizes[c.cod(*f)], to = p.sizes[c.dom(*f)];
      if (!v.is_array() || static_cast<int>(v.size()) != from)
        throw SchemaError(path, "expected " + std::to_string(from) + " entries");
      for (std::size_t i = 0; i < v.size(); ++i) p.action[*f].push_back(index_ref(v[i], at(path, i), to));
      given[*f] = 1;
    }
  }
  for (int a = 0; a < c.num_objects(); ++a) {
    const int id = c.id(a);
    if (given[id]) continue;
    for (int v = 0; v < p.sizes[a]; ++v) p.action[id].push_back(v);
    given[id] = 1;
  }
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (!given[f]) throw SchemaError(at("/action", c.cat.morphism(f).label), "missing action");
  auto v = check_presheaf(c, p);
  if (!v.empty()) throw AxiomError("presheaf law fails: " + v.front().to_string(), v);
  return p;
}

Json presheaf_json(const MonoidalCategory& c, const Presheaf& p) {
  Json j;
  Json values = Json::object();
  for (int a = 0; a < c.num_objects(); ++a) values[c.cat.object_label(a)] = p.sizes[a];
  Json act = Json::object();
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (f != c.id(c.dom(f))) act[c.cat.morphism(f).label] = p.action[f];
  j["values"] = values;
  j["action"] = act;
  return j;
}

// Gallery -------------------------------------------------------------------

namespace {

CategoryDocument doc(const char* text) { return parse_document_text(text); }

std::vector<GalleryEntry> make_gallery() {
  std::vector<GalleryEntry> g;
  g.push_back({"b2", "Boolean frame 0 <= 1 under meet", doc(R"({
    "kind": "semilattice", "name": "b2",
    "elements": ["0", "1"],
    "leq": [["0", "1"]]})")});
  g.push_back({"c3", "three-element chain 0 < m < 1 under meet", doc(R"({
    "kind": "semilattice", "name": "c3",
    "elements": ["0", "m", "1"],
    "leq": [["0", "m"], ["m", "1"]]})")});
  g.push_back({"q3", "quantale 0 <= eps <= 1 with eps*eps = 0", doc(R"({
    "kind": "quantale", "name": "q3",
    "elements": ["0", "eps", "1"],
    "leq": [["0", "eps"], ["eps", "1"]],
    "mult": [["0", "0", "0"], ["0", "0", "eps"], ["0", "eps", "1"]],
    "unit": "1"})")});
  g.push_back({"boolean2x2", "four-element Boolean lattice {0, a, b, 1} under meet", doc(R"({
    "kind": "semilattice", "name": "boolean2x2",
    "elements": ["0", "a", "b", "1"],
    "leq": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]})")});
  g.push_back({"m3", "nondistributive lattice M3 under meet", doc(R"({
    "kind": "semilattice", "name": "m3",
    "elements": ["0", "a", "b", "c", "1"],
    "leq": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "1"], ["b", "1"], ["c", "1"]]})")});
  g.push_back({"monoid_idem", "one-object category on the monoid {1, a} with a*a = a", doc(R"({
    "kind": "monoid", "name": "monoid_idem",
    "elements": ["1", "a"],
    "mult": [["1", "a"], ["a", "a"]],
    "unit": "1"})")});
  g.push_back({"z2", "one-object category on the group Z/2", doc(R"({
    "kind": "monoid", "name": "z2",
    "elements": ["e", "g"],
    "mult": [["e", "g"], ["g", "e"]],
    "unit": "e"})")});
  g.push_back({"ideals_10", "ideal quantale of the multiplicative monoid {1, 0}", doc(R"({
    "kind": "monoid_ideals", "name": "ideals_10",
    "elements": ["1", "0"],
    "mult": [["1", "0"], ["0", "0"]],
    "unit": "1"})")});
  return g;
}

}  // namespace

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> g = make_gallery();
  return g;
}

const GalleryEntry& gallery_entry(const std::string& name) {
  for (const auto& e : gallery())
    if (e.name == name) return e;
  throw UnknownName("unknown example '" + name + "'");
}

MonoidalCategory gallery_category(const std::string& name) { return build(gallery_entry(name).document); }

}  // namespace ttw
