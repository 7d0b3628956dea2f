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

#ifndef TAME_MAPS_ANALYSIS_HPP
#define TAME_MAPS_ANALYSIS_HPP

#include "maps/map.hpp"

namespace tame {

// Continuity relative to the subspace topology of the domain.  Decided by a
// layered procedure: solved piecewise-rational form with the pasting lemma
// where the graph's syntax allows it, and the epsilon-delta sentence
// otherwise.
bool is_continuous(Engine& eng, const DefinableMap& f);

// The bounding homeomorphism c : R -> (-2, 2) applied coordinatewise to a
// set: { c(x) : x in S }.
DefinableSet c_transform(Engine& eng, const DefinableSet& s);
// c itself as a map R -> (-2, 2).
DefinableMap c_map(Engine& eng);

// Bounded-graph-closure square used to decide properness with one
// first-order sentence.
struct CompletionSquare {
    DefinableSet bounded_dom;   // image of dom under coordinatewise c
    DefinableSet bounded_cod;   // image of cod
    DefinableSet bounded_graph; // graph of the bounded map
    DefinableSet closure_graph; // its closure (a polytope)
    DefinableSet closure_cod;   // closure of the bounded codomain (a polytope)
    DefinableMap projection;    // closure_graph -> closure_cod
    bool dense_dom = false;     // horizontal maps are dense embeddings (decided)
    bool dense_cod = false;
};

CompletionSquare standard_completion(Engine& eng, const DefinableMap& f);

// The preimage of every definably compact set is definably compact;
// decided through the completion square (with the definably compact domain
// shortcut).  Requires a continuous map.
bool is_proper(Engine& eng, const DefinableMap& f);

// Injective and proper.
bool is_closed_embedding(Engine& eng, const DefinableMap& f);

// Finite family of proper maps into a common codomain, jointly surjective.
bool is_proper_cover(Engine& eng, const std::vector<DefinableMap>& family,
                     const DefinableSet& x);

// A definable (not necessarily continuous) section of a surjection, built
// from the canonical coordinatewise least-or-midpoint selector.
DefinableMap definable_choice_section(Engine& eng, const DefinableMap& f);

} // namespace tame

#endif
