// Copyright (C) 2026 The tame kernel developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAME_MAPS_MAP_HPP
#define TAME_MAPS_MAP_HPP

#include <optional>
#include <string>

#include "sets/setops.hpp"

namespace tame {

// A definable map carried by its graph: dom in R^m, cod in R^n, graph in
// R^(m+n) with the first m coordinates on the domain side.  Constructed
// through make_map, which decides that the graph is a total single-valued
// function from dom into cod.  The graph need not be continuous.
struct DefinableMap {
    DefinableSet dom;
    DefinableSet cod;
    DefinableSet graph;

    unsigned m() const { return dom.arity; }
    unsigned n() const { return cod.arity; }
};

// Decides graph containment, totality and single-valuedness; on failure
// throws NotAFunctionError naming the failed check, with a witness sample
// point where one exists.
DefinableMap make_map(Engine& eng, DefinableSet dom, DefinableSet cod, DefinableSet graph);

DefinableMap identity_map(const DefinableSet& a);
// Constant map onto the given point of the codomain.
DefinableMap constant_map(Engine& eng, const DefinableSet& dom, const DefinableSet& cod,
                          const std::vector<Rational>& value);
// Inclusion dom -> cod (dom must be a subset of cod; decided).
DefinableMap inclusion_map(Engine& eng, const DefinableSet& dom, const DefinableSet& cod);

// Map whose coordinates are polynomial terms of the domain variables.
DefinableMap term_map(Engine& eng, const DefinableSet& dom, const DefinableSet& cod,
                      const std::vector<Polynomial>& terms);

// Composition g after f; decides cod(f) subset of dom(g).
DefinableMap compose(Engine& eng, const DefinableMap& f, const DefinableMap& g);

DefinableSet image(Engine& eng, const DefinableMap& f);
DefinableSet image_of(Engine& eng, const DefinableMap& f, const DefinableSet& s);
DefinableSet preimage(Engine& eng, const DefinableMap& f, const DefinableSet& s);

bool is_injective(Engine& eng, const DefinableMap& f);
bool is_surjective(Engine& eng, const DefinableMap& f);

// Graphs equal as sets (with equal declared domains/codomains).
bool map_equal(Engine& eng, const DefinableMap& f, const DefinableMap& g);

// A witness point of a nonempty set, if the search stays within caps.
std::optional<std::vector<AlgebraicNumber>> find_witness(Engine& eng, const DefinableSet& a);

std::string map_to_text(const DefinableMap& f);
DefinableMap map_from_text(Engine& eng, const std::string& text);

} // namespace tame

#endif
