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

#ifndef TAME_SETS_SETOPS_HPP
#define TAME_SETS_SETOPS_HPP

#include "cad/cad.hpp"

namespace tame {

struct SetReport {
    unsigned arity = 0;
    bool is_empty = false;
    bool is_closed = false;
    bool is_bounded = false;
    bool is_polytope = false;
    int dimension = -1;
    long euler = 0;
};

bool is_empty(Engine& eng, const DefinableSet& a);
bool is_subset(Engine& eng, const DefinableSet& a, const DefinableSet& b);
bool set_equal(Engine& eng, const DefinableSet& a, const DefinableSet& b);

// Topological closure / interior as quantifier-free sets.
DefinableSet closure(Engine& eng, const DefinableSet& a);
DefinableSet interior(Engine& eng, const DefinableSet& a);
// Interior of s within the ambient subset x:  s minus the closure of x - s.
DefinableSet relative_interior(Engine& eng, const DefinableSet& s, const DefinableSet& x);

bool is_closed(Engine& eng, const DefinableSet& a);
bool is_bounded(Engine& eng, const DefinableSet& a);
// Definably compact: closed and bounded.
bool is_polytope(Engine& eng, const DefinableSet& a);

int dimension(Engine& eng, const DefinableSet& a);
long euler_characteristic(Engine& eng, const DefinableSet& a);

SetReport set_report(Engine& eng, const DefinableSet& a);
std::string report_to_text(const SetReport& r);

} // namespace tame

#endif
