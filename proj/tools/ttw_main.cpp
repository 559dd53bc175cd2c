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

// ttw: command-line front end over the ttw library.
//
// Exit codes: 0 success (a failed property check is still a success),
// 1 usage, 2 schema or structural error, 3 axiom violation, 4 unknown name,
// 5 cap exceeded, 6 precondition not met, 70 internal inconsistency.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttw/daycat.hpp"
#include "ttw/document.hpp"
#include "ttw/fractions.hpp"
#include "ttw/limits.hpp"
#include "ttw/render.hpp"
#include "ttw/restriction.hpp"
#include "ttw/subunits.hpp"
#include "ttw/support.hpp"

namespace fs = std::filesystem;
using namespace ttw;

namespace {

constexpr const char* kReportSchema = "ttw-report/1";

struct Options {
  std::string format = "text";
  std::string dot_path;
  std::vector<std::string> caps;
  std::string file;
  std::string property;
  std::string subunit;
  bool simple = false;
  std::string morphism;
  std::string flavour;
  std::string left;
  std::string right;
  std::string example;
};

struct Output {
  Json result = Json::object();
  std::string text;
  std::string dot;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnknownName("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path that does not exist but names a gallery entry ("q3" or "q3.json")
// loads that entry.
MonoidalCategory load_category(const std::string& path) {
  if (!fs::exists(path)) {
    const std::string stem = fs::path(path).stem().string();
    for (const auto& e : gallery())
      if (e.name == stem) return build(e.document);
  }
  return build(parse_document_text(read_file(path)));
}

Presheaf load_presheaf(const std::string& path, const MonoidalCategory& c) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_presheaf(j, c);
}

// Atomic: write a sibling temp file, then rename over the target.
void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
  }
  fs::rename(tmp, path);
}

int resolve_subunit(const SubunitSemilattice& l, const std::string& name) {
  if (auto i = l.index_of_label(name)) return *i;
  std::string known;
  for (int i = 0; i < l.size(); ++i) known += (i ? ", " : "") + l.lattice.poset.label(i);
  throw UnknownName("unknown subunit '" + name + "' (known: " + known + ")");
}

// A morphism label, a numeric id, or an object label X standing for the
// unique morphism X → I.
int resolve_morphism(const MonoidalCategory& c, const std::string& name) {
  if (auto f = c.cat.morphism_index(name)) return *f;
  if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos) {
    const long long v = std::stoll(name);
    if (v < c.num_morphisms()) return static_cast<int>(v);
  }
  if (auto a = c.cat.object_index(name)) {
    const auto& h = c.cat.hom(*a, c.unit());
    if (h.size() == 1) return h.front();
    throw UnknownName("object '" + name + "' does not have a unique morphism to the unit");
  }
  throw UnknownName("unknown morphism '" + name + "'");
}

std::string mask_text(const SubunitSemilattice& l, Mask m) { return mask_label(l.lattice.poset, m); }

Json label_list(const SubunitSemilattice& l, Mask m) {
  Json out = Json::array();
  for (int i : mask_elements(m)) out.push_back(l.lattice.poset.label(i));
  return out;
}

Output cmd_subunits(const MonoidalCategory& c) {
  Output o;
  const auto l = subunit_semilattice(c);
  Json subs = Json::array();
  std::ostringstream t;
  t << c.name << ": " << l.size() << " subunits\n";
  for (int i = 0; i < l.size(); ++i) {
    const auto& s = l.elements[i];
    subs.push_back({{"label", l.lattice.poset.label(i)},
                    {"mono", c.cat.morphism(s.mono).label},
                    {"domain", c.cat.object_label(s.domain)}});
    t << "  " << l.lattice.poset.label(i) << "  via " << c.cat.morphism(s.mono).label << "\n";
  }
  Json covers = Json::array();
  for (auto [a, b] : l.lattice.poset.covers()) {
    covers.push_back({l.lattice.poset.label(a), l.lattice.poset.label(b)});
    t << "  " << l.lattice.poset.label(a) << " < " << l.lattice.poset.label(b) << "\n";
  }
  Json meets = Json::array();
  for (int a = 0; a < l.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < l.size(); ++b) row.push_back(l.lattice.poset.label(l.meet(a, b)));
    meets.push_back(row);
  }
  o.result = {{"subunits", subs}, {"covers", covers}, {"meet", meets}, {"top", l.lattice.poset.label(l.top())}};
  o.text = t.str();
  o.dot = render_dot(l.lattice.poset, c.name + "_isub");
  return o;
}

Output cmd_check(const MonoidalCategory& c, const std::string& property) {
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
  Output o;
  o.result = report_json(c, r);
  o.text = report_text(c, r) + "\n";
  return o;
}

Output cmd_restrict(const MonoidalCategory& c, const std::string& name) {
  const auto l = subunit_semilattice(c);
  const auto& s = l.elements[resolve_subunit(l, name)];
  const auto r = restriction_category(c, s);
  Output o;
  Json objs = Json::array();
  Json coreflector = Json::object();
  for (int a : r.sub.objects) objs.push_back(c.cat.object_label(a));
  for (int a = 0; a < c.num_objects(); ++a)
    coreflector[c.cat.object_label(a)] = c.cat.object_label(r.coreflector_obj[a]);
  o.result = {{"subunit", name},
              {"objects", objs},
              {"morphisms", r.sub.cat.num_morphisms()},
              {"coreflector", coreflector},
              {"adjunction", report_json(c, r.adjunction)},
              {"monoidal", report_json(c, r.monoidal)},
              {"inclusion_unit_invertible", r.inclusion_unit_invertible}};
  std::ostringstream t;
  t << "C|" << name << ": " << objs.size() << " objects, " << r.sub.cat.num_morphisms() << " morphisms\n  objects:";
  for (int a : r.sub.objects) t << " " << c.cat.object_label(a);
  t << "\n  " << report_text(c, r.adjunction) << "\n  " << report_text(c, r.monoidal) << "\n";
  o.text = t.str();
  return o;
}

Output cmd_localise(const MonoidalCategory& c, bool simple, const std::string& name) {
  if (simple && !name.empty()) throw std::invalid_argument("--simple and --subunit are exclusive");
  Output o;
  LocalisedCategory loc;
  Json extra = Json::object();
  std::ostringstream t;
  if (name.empty()) {
    loc = simple_quotient(c);
    extra["at"] = "all subunits";
  } else {
    const auto l = subunit_semilattice(c);
    const auto& s = l.elements[resolve_subunit(l, name)];
    const auto sig = sigma(c, {s});
    loc = localise(c, sig);
    const auto v = verify_localisation(c, sig, loc);
    const auto b = restriction_localisation_bijection(c, s, loc);
    extra["at"] = name;
    extra["localisation"] = report_json(loc.cat, v);
    extra["restriction_bijection"] = report_json(loc.cat, b);
    t << "  " << report_text(loc.cat, v) << "\n  " << report_text(loc.cat, b) << "\n";
  }
  Json mors = Json::array();
  for (const auto& m : loc.cat.cat.morphisms())
    mors.push_back({{"label", m.label},
                    {"dom", loc.cat.cat.object_label(m.dom)},
                    {"cod", loc.cat.cat.object_label(m.cod)}});
  const bool simple_result = is_simple(loc.cat);
  o.result = extra;
  o.result["objects"] = loc.cat.cat.objects();
  o.result["morphisms"] = mors;
  o.result["is_simple"] = simple_result;
  std::ostringstream head;
  head << "localisation of " << c.name << " at " << extra["at"].get<std::string>() << ": " << loc.cat.num_morphisms()
       << " morphisms (from " << c.num_morphisms() << "), " << (simple_result ? "simple" : "not simple") << "\n";
  o.text = head.str() + t.str();
  return o;
}

Output cmd_support(const MonoidalCategory& c, const std::string& name) {
  const int f = resolve_morphism(c, name);
  const auto l = subunit_semilattice(c);
  const auto r = canonical_support(c, l, f);
  const Mask rs = restriction_set(c, l, f);
  Output o;
  o.result = {{"morphism", c.cat.morphism(f).label},
              {"restricts_to", label_list(l, rs)},
              {"canonical", label_list(l, r.canonical)},
              {"supp", r.supp ? Json(l.lattice.poset.label(*r.supp)) : Json(nullptr)}};
  std::ostringstream t;
  t << "supp(" << c.cat.morphism(f).label << ") = " << (r.supp ? l.lattice.poset.label(*r.supp) : "undefined")
    << "\n  restricts to " << mask_text(l, rs) << "\n  canonical " << mask_text(l, r.canonical) << "\n";
  o.text = t.str();
  return o;
}

Output cmd_complete(const MonoidalCategory& c, const std::string& flavour_name) {
  const auto fl = flavour_from_string(flavour_name);
  if (!fl) throw UnknownName("unknown flavour '" + flavour_name + "'");
  const auto b = broad_category(c, *fl);
  const auto subs = verify_broad_subunits(b);
  const auto terminal = terminal_object(b.cat.cat);
  Output o;
  const auto isub = subunit_semilattice(b.cat);
  Json isub_labels = Json::array();
  for (int i = 0; i < isub.size(); ++i) isub_labels.push_back(isub.lattice.poset.label(i));
  o.result = {{"flavour", to_string(*fl)},
              {"objects", b.cat.cat.objects()},
              {"morphisms", b.cat.num_morphisms()},
              {"subunits", isub_labels},
              {"subunit_lattice", report_json(b.cat, subs)},
              {"terminal", terminal ? Json(b.cat.cat.object_label(*terminal)) : Json(nullptr)}};
  std::ostringstream t;
  t << to_string(*fl) << " completion of " << c.name << ": " << b.cat.num_objects() << " objects, "
    << b.cat.num_morphisms() << " morphisms, " << isub.size() << " subunits\n  " << report_text(b.cat, subs)
    << "\n  terminal object: " << (terminal ? b.cat.cat.object_label(*terminal) : "none") << "\n";
  o.text = t.str();
  o.dot = render_dot(isub.lattice.poset, c.name + "_" + to_string(*fl));
  return o;
}

Output cmd_day(const MonoidalCategory& c, const std::string& left, const std::string& right) {
  const Presheaf f = load_presheaf(left, c);
  const Presheaf g = load_presheaf(right, c);
  const auto d = day_tensor(c, f, g);
  Output o;
  o.result = {{"tensor", presheaf_json(c, d.presheaf)}};
  std::ostringstream t;
  t << "Day tensor:";
  for (int a = 0; a < c.num_objects(); ++a)
    t << " " << c.cat.object_label(a) << "=" << d.presheaf.sizes[a];
  t << "\n";
  o.text = t.str();
  return o;
}

int exit_code_for(const std::exception_ptr& ep, std::string& message) {
  try {
    std::rethrow_exception(ep);
  } catch (const SchemaError& e) {
    message = "schema error at " + (e.path().empty() ? std::string("/") : e.path()) + ": " + e.what();
    return 2;
  } catch (const StructuralError& e) {
    message = std::string("structural error: ") + e.what();
    return 2;
  } catch (const AxiomError& e) {
    message = std::string("axiom violation: ") + e.what();
    for (const auto& v : e.violations()) message += "\n  " + v.to_string();
    return 3;
  } catch (const UnknownName& e) {
    message = e.what();
    return 4;
  } catch (const CapExceeded& e) {
    message = std::string(e.what()) + "; raise it with --cap " + e.cap() + "=<n>";
    return 5;
  } catch (const PreconditionError& e) {
    message = std::string("precondition not met: ") + e.what();
    return 6;
  } catch (const std::invalid_argument& e) {
    message = e.what();
    return 1;
  } catch (const std::exception& e) {
    message = std::string("internal error: ") + e.what();
    return 70;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Subunits, restriction and support in finite braided monoidal categories"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--dot", opt.dot_path, "Write a Hasse diagram in DOT format");
  app.add_option("--cap", opt.caps, "Override an enumeration cap, name=n");

  auto* subunits = app.add_subcommand("subunits", "List the subunits and their semilattice");
  subunits->add_option("file", opt.file)->required();
  auto* check = app.add_subcommand("check", "Check a property");
  check->add_option("property", opt.property)
      ->required()
      ->check(CLI::IsMember({"firm", "stiff", "univ-finite", "univ-directed", "locale-based", "graded-monad",
                             "comonads", "ideals", "characterisation"}));
  check->add_option("file", opt.file)->required();
  auto* restrict = app.add_subcommand("restrict", "Restriction to a subunit");
  restrict->add_option("--subunit", opt.subunit)->required();
  restrict->add_option("file", opt.file)->required();
  auto* localise = app.add_subcommand("localise", "Localisation at subunits");
  auto* simple = localise->add_flag("--simple", opt.simple);
  localise->add_option("--subunit", opt.subunit)->excludes(simple);
  localise->add_option("file", opt.file)->required();
  auto* support = app.add_subcommand("support", "Support of a morphism");
  support->add_option("--morphism", opt.morphism)->required();
  support->add_option("file", opt.file)->required();
  auto* complete = app.add_subcommand("complete", "Broad completion");
  complete->add_option("--flavour", opt.flavour)->required()->check(CLI::IsMember({"finite", "directed", "all"}));
  complete->add_option("file", opt.file)->required();
  auto* day = app.add_subcommand("day", "Day convolution of two presheaves");
  day->add_option("--left", opt.left)->required();
  day->add_option("--right", opt.right)->required();
  day->add_option("file", opt.file)->required();
  auto* examples = app.add_subcommand("examples", "Builtin gallery");
  examples->require_subcommand(1);
  auto* ex_list = examples->add_subcommand("list", "List the gallery");
  auto* ex_emit = examples->add_subcommand("emit", "Print a gallery document");
  ex_emit->add_option("name", opt.example)->required();
  for (auto* sub : {subunits, check, restrict, localise, support, complete, day, examples, ex_list, ex_emit})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Limits lim = limits();
  for (const auto& c : opt.caps) {
    const auto eq = c.find('=');
    long long v = 0;
    bool ok = eq != std::string::npos;
    if (ok) {
      try {
        v = std::stoll(c.substr(eq + 1));
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || v <= 0) {
      std::cerr << "ttw: --cap expects name=n with n > 0, got '" << c << "'\n";
      return 1;
    }
    if (!set_limit_by_name(lim, c.substr(0, eq), v)) {
      std::cerr << "ttw: unknown cap '" << c.substr(0, eq) << "'\n";
      return 4;
    }
  }
  set_limits(lim);

  Json command = Json::array();
  for (int i = 1; i < argc; ++i) command.push_back(argv[i]);

  try {
    Output out;
    std::string category;
    bool raw_json = false;
    if (*examples) {
      if (*ex_list) {
        Json list = Json::array();
        std::ostringstream t;
        for (const auto& e : gallery()) {
          list.push_back({{"name", e.name}, {"kind", e.document.kind}, {"description", e.description}});
          t << e.name << "  " << e.description << "\n";
        }
        out.result = {{"examples", list}};
        out.text = t.str();
      } else {
        out.result = emit_document(gallery_entry(opt.example).document);
        raw_json = true;
      }
    } else {
      const MonoidalCategory c = load_category(opt.file);
      category = c.name;
      if (*subunits) out = cmd_subunits(c);
      else if (*check) out = cmd_check(c, opt.property);
      else if (*restrict) out = cmd_restrict(c, opt.subunit);
      else if (*localise) out = cmd_localise(c, opt.simple, opt.subunit);
      else if (*support) out = cmd_support(c, opt.morphism);
      else if (*complete) out = cmd_complete(c, opt.flavour);
      else if (*day) out = cmd_day(c, opt.left, opt.right);
    }

    std::string text;
    if (raw_json) {
      text = out.result.dump(2) + "\n";
    } else if (opt.format == "json") {
      Json report;
      report["schema"] = kReportSchema;
      report["command"] = command;
      if (!category.empty()) report["category"] = category;
      report["result"] = out.result;
      text = report.dump(2) + "\n";
    } else {
      text = out.text;
    }
    if (!opt.dot_path.empty()) {
      if (out.dot.empty()) {
        std::cerr << "ttw: this command has no diagram; --dot ignored\n";
      } else {
        write_atomically(opt.dot_path, out.dot);
      }
    }
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return 0;
  } catch (...) {
    std::string message;
    const int code = exit_code_for(std::current_exception(), message);
    std::cerr << "ttw: " << message << "\n";
    return code;
  }
}
