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

#ifndef TAME_CAD_PROJECTION_HPP
#define TAME_CAD_PROJECTION_HPP

#include <vector>

#include "core/config.hpp"
#include "poly/polyops.hpp"

namespace tame {

// Per-level polynomial data for a cylindrical decomposition of R^nvars.
// levels[k] describes level k+1: polynomials in variables 0..k whose top
// variable is exactly k (constants and lower-level polynomials sink down).
struct ProjectionTower {
    unsigned nvars = 0;
    // Signature polynomials: the inputs (and, when augmented, their
    // derivative chains); the atoms of solution formulas come from these.
    std::vector<std::vector<Polynomial>> sig;
    // Pairwise-coprime squarefree bases, one per level; the decomposition is
    // sign-invariant for these, hence for every signature polynomial.
    std::vector<std::vector<Polynomial>> basis;
};

// Builds the tower: factorizes the inputs, projects level by level with the
// chosen operator, and (optionally) closes each level's signature set under
// derivation by the level variable so that sign vectors identify cells.
ProjectionTower build_projection_tower(const std::vector<Polynomial>& inputs, unsigned nvars,
                                       ProjectionMode mode, bool thom_augment);

// One projection step: polynomials with top variable v are projected to
// polynomials in the variables below v.
std::vector<Polynomial> project_level(const std::vector<Polynomial>& level_basis, unsigned v,
                                      ProjectionMode mode);

} // namespace tame

#endif
