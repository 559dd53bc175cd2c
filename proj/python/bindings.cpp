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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ttw/daycat.hpp"
#include "ttw/document.hpp"
#include "ttw/fractions.hpp"
#include "ttw/render.hpp"
#include "ttw/restriction.hpp"
#include "ttw/subunits.hpp"
#include "ttw/support.hpp"

namespace py = pybind11;
using namespace ttw;

namespace {

std::string check(const MonoidalCategory& c, const std::string& property) {
  PropertyReport r;
  if (property == "firm") r = is_firm(c);
  else if (property == "stiff") r = is_stiff(c);
  else if (property == "univ-finite") r = has_universal_finite_joins(c);
  else if (property == "univ-directed") r = has_universal_directed_joins(c);
  else if (property == "locale-based") r = is_locale_based(c);
  else if (property == "graded-monad") r = verify_graded_monad(c);
  else if (property == "comonads") r = verify_comonad_bijection(c);
  else if (property == "ideals") r = verify_ideal_bijection(c);
  else if (property == "characterisation") r = check_characterisation(c);
  else throw UnknownName("unknown property '" + property + "'");
  return report_json(c, r).dump();
}

std::vector<std::string> subunit_labels(const MonoidalCategory& c) {
  return subunit_semilattice(c).lattice.poset.labels();
}

py::object support(const MonoidalCategory& c, const std::string& morphism) {
  auto f = c.cat.morphism_index(morphism);
  if (!f) throw UnknownName("unknown morphism '" + morphism + "'");
  const auto l = subunit_semilattice(c);
  const auto r = canonical_support(c, l, *f);
  if (!r.supp) return py::none();
  return py::str(l.lattice.poset.label(*r.supp));
}

}  // namespace

PYBIND11_MODULE(_ttw, m) {
  m.doc() = "Subunits of finite braided monoidal categories";

  py::register_exception<SchemaError>(m, "SchemaError");
  py::register_exception<AxiomError>(m, "AxiomError");
  py::register_exception<UnknownName>(m, "UnknownName");
  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<PreconditionError>(m, "PreconditionError");

  py::class_<MonoidalCategory>(m, "Category")
      .def_readonly("name", &MonoidalCategory::name)
      .def_property_readonly("objects", [](const MonoidalCategory& c) { return c.cat.objects(); })
      .def_property_readonly("morphisms",
                             [](const MonoidalCategory& c) {
                               std::vector<std::string> out;
                               for (const auto& f : c.cat.morphisms()) out.push_back(f.label);
                               return out;
                             })
      .def("subunits", &subunit_labels)
      .def("check_json", &check, py::arg("property"))
      .def("support", &support, py::arg("morphism"))
      .def("is_simple", [](const MonoidalCategory& c) { return is_simple(c); })
      .def("simple_quotient", [](const MonoidalCategory& c) { return simple_quotient(c).cat; })
      .def("completion",
           [](const MonoidalCategory& c, const std::string& flavour) {
             auto f = flavour_from_string(flavour);
             if (!f) throw UnknownName("unknown flavour '" + flavour + "'");
             return broad_category(c, *f).cat;
           },
           py::arg("flavour") = "all")
      .def("has_terminal_object", [](const MonoidalCategory& c) { return terminal_object(c.cat).has_value(); })
      .def("subunit_dot", [](const MonoidalCategory& c) { return render_dot(subunit_semilattice(c).lattice.poset, c.name); })
      .def("to_json", [](const MonoidalCategory& c) { return emit_document(explicit_document(c)).dump(); })
      .def("__repr__", [](const MonoidalCategory& c) {
        return "<Category " + c.name + ": " + std::to_string(c.num_objects()) + " objects, " +
               std::to_string(c.num_morphisms()) + " morphisms>";
      });

  m.def("parse", [](const std::string& text) { return build(parse_document_text(text)); }, py::arg("text"));
  m.def("example", &gallery_category, py::arg("name"));
  m.def("example_json", [](const std::string& name) { return emit_document(gallery_entry(name).document).dump(); },
        py::arg("name"));
  m.def("example_names", [] {
    std::vector<std::string> out;
    for (const auto& e : gallery()) out.push_back(e.name);
    return out;
  });
}
