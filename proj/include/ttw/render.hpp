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

#include "ttw/document.hpp"
#include "ttw/fincat.hpp"
#include "ttw/orderkit.hpp"

namespace ttw {

/// Hasse diagram: one node per element in index order, edges for covers only.
std::string render_dot(const FinPoset& p, const std::string& name = "poset");

/// Property verdict as JSON; square legs are given by morphism label.
Json report_json(const MonoidalCategory& c, const PropertyReport& r);
std::string report_text(const MonoidalCategory& c, const PropertyReport& r);

}  // namespace ttw
