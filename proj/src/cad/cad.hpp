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

#ifndef TAME_CAD_CAD_HPP
#define TAME_CAD_CAD_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/config.hpp"
#include "logic/set.hpp"
#include "logic/simplify.hpp"

namespace tame {

// One piece of the canonical description of a one-variable definable set:
// either a singleton or an open interval (endpoints may be infinite).
struct LinePiece {
    bool is_point = false;
    AlgebraicNumber point;
    std::optional<AlgebraicNumber> lo, hi; // nullopt encodes -oo / +oo
};

struct CellInfo {
    std::vector<unsigned> index_word;
    unsigned dimension = 0;
    std::vector<AlgebraicNumber> sample;
    std::vector<bool> truth; // one flag per tracked input formula
};

// External view of a cylindrical decomposition.
struct CellDecomposition {
    unsigned arity = 0;
    std::vector<unsigned> variable_order; // order[k] = input variable at level k+1
    std::vector<CellInfo> cells;          // full-level cells, deterministic order
};

// Decision and quantifier-elimination engine for the ordered field of real
// algebraic numbers, built on cylindrical decomposition.  Thread safe; the
// result caches are shared and mutex guarded.
class Engine {
public:
    explicit Engine(KernelConfig cfg = {});

    const KernelConfig& config() const { return cfg_; }

    // Exact truth of a sentence (no free variables).
    bool decide(const Formula& sentence);

    // Quantifier-free equivalent over the real algebraic numbers (and every
    // real closed field, by model completeness).
    Formula qe(const Formula& f);

    // Ensures a set's formula is quantifier-free.
    DefinableSet qe_set(const DefinableSet& a);

    // Canonical point/interval description of a one-variable set.
    std::vector<LinePiece> describe_line(const DefinableSet& a);

    // Sign-invariant decomposition adapted to the given same-arity sets,
    // with per-cell truth flags.
    CellDecomposition build_cad(const std::vector<DefinableSet>& sets);

    // Dimension (-1 for empty) and o-minimal Euler characteristic, computed
    // from a decomposition adapted to the set.
    int dimension(const DefinableSet& a);
    long euler_characteristic(const DefinableSet& a);

private:
    struct RunResult {
        bool truth = false;      // for sentences
        Formula formula;         // for QE with free variables
    };

    RunResult run(const Formula& f, bool want_formula, bool allow_blockwise = true);
    Formula qe_blockwise(Formula f);
    // Structural recursion: boolean combinations of quantified subformulas
    // are eliminated independently, so each decomposition stays small.
    Formula qe_rec(const Formula& f);
    bool decide_rec(const Formula& f);

    KernelConfig cfg_;
    std::mutex mu_;
    std::unordered_map<std::string, bool> decide_cache_;
    std::unordered_map<std::string, Formula> qe_cache_;
};

} // namespace tame

#endif
