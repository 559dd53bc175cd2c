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

#include "ttw/render.hpp"

#include <sstream>

namespace ttw {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_dot(const FinPoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quoted(p.label(i)) << "];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

Json report_json(const MonoidalCategory& c, const PropertyReport& r) {
  Json j;
  j["property"] = r.property;
  j["holds"] = r.holds;
  if (!r.holds) {
    j["detail"] = r.detail;
    j["witness"] = r.witness;
  }
  if (r.square) {
    auto label = [&](int f) { return f >= 0 && f < c.num_morphisms() ? c.cat.morphism(f).label : std::string(); };
    j["square"] = {{"top", label(r.square->top)},
                   {"left", label(r.square->left)},
                   {"right", label(r.square->right)},
                   {"bottom", label(r.square->bottom)}};
  }
  j["cross_check_agrees"] = r.cross_check_agrees;
  return j;
}

std::string report_text(const MonoidalCategory& c, const PropertyReport& r) {
  std::ostringstream os;
  os << r.property << ": " << (r.holds ? "holds" : "fails");
  if (!r.holds && !r.detail.empty()) os << " (" << r.detail << ")";
  if (r.square) {
    const auto& s = *r.square;
    os << "\n  square: top " << c.cat.morphism(s.top).label << ", left " << c.cat.morphism(s.left).label
       << ", right " << c.cat.morphism(s.right).label << ", bottom " << c.cat.morphism(s.bottom).label;
  }
  if (!r.cross_check_agrees) os << "\n  warning: independent checks disagree";
  return os.str();
}

}  // namespace ttw
