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

#ifndef TAME_CAD_LIFTING_HPP
#define TAME_CAD_LIFTING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cad/projection.hpp"
#include "realalg/algebraic.hpp"
#include "realalg/number_field.hpp"

namespace tame {

// Signals that a reduced-projection run hit a nullified polynomial over a
// cell, so its validity guarantee is void; the engine retries with the full
// operator.
struct WellOrientednessFailure {};

// Stack of roots and sector samples of the level polynomials over a point.
struct Stack {
    std::vector<AlgebraicNumber> points;
    std::vector<bool> is_section;
};

// Callbacks for the cell traversal.  `sectors[k]` is true when coordinate
// k+1 of the cell ranges over a sector (an interval), so the cell dimension
// is the number of true flags.  `word` is the 1-based stack index path.
struct WalkHooks {
    // Called when entering every cell, before its children are built.
    std::function<void(unsigned level, const std::vector<AlgebraicNumber>& path,
                       const std::vector<bool>& sectors)>
        enter;
    // Called at full-level cells; the return value is folded upward.
    std::function<bool(const std::vector<AlgebraicNumber>& path,
                       const std::vector<bool>& sectors, const std::vector<unsigned>& word)>
        leaf;
    // Fold seed and combiner per internal level.
    std::function<bool(unsigned level)> init;
    std::function<bool(unsigned level, bool acc, bool child)> combine;
};

// Depth-first traversal of the cells of a cylindrical decomposition.  The
// tree is never materialized: the walker carries the sample path, sector
// flags and index word, and reports cells through the hooks.
class Walker {
public:
    Walker(const ProjectionTower& tower, const KernelConfig& cfg);

    bool walk(const WalkHooks& hooks);

    std::uint64_t cell_count() const { return cells_; }

private:
    bool walk_rec(unsigned level, const WalkHooks& hooks);

    Stack build_stack(const std::vector<AlgebraicNumber>& path, unsigned level_index);

    struct LevelPoly {
        const Polynomial* f;
        std::vector<Polynomial> coeffs; // dense in the level variable
    };

    const ProjectionTower& tower_;
    std::vector<std::vector<LevelPoly>> level_polys_;
    const KernelConfig& cfg_;
    std::uint64_t cells_ = 0;
    std::vector<AlgebraicNumber> path_;
    std::vector<bool> sectors_;
    std::vector<unsigned> word_;
};

} // namespace tame

#endif
