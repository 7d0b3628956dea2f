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

#ifndef TAME_CORE_CONFIG_HPP
#define TAME_CORE_CONFIG_HPP

#include <cstdint>
#include <vector>

namespace tame {

enum class ProjectionMode {
    // Complete classical projection set (coefficients, principal subresultant
    // coefficients of reducta pairs).  Valid unconditionally.
    Full,
    // Reduced projection (leading coefficients, discriminants, resultants).
    // Used only while the well-orientedness check passes; on failure the
    // engine falls back to the full operator and rebuilds.
    Reduced,
};

struct KernelConfig {
    // Hard caps; exceeding any of them raises ResourceLimitError instead of
    // degrading precision.
    unsigned max_variables = 8;        // free + bound variables in one elimination
    unsigned max_total_degree = 8;     // per input atom
    std::uint64_t max_cells = 2000000; // lifted cells per decomposition
    unsigned max_realization_dim = 2;
    unsigned max_realization_simplices = 8;

    // Reduced is the default: with the nullification check and automatic
    // fallback to the full operator it is unconditionally sound, and the
    // full operator's subresultant cascade is far too slow for the sizes
    // this kernel targets.
    ProjectionMode projection = ProjectionMode::Reduced;

    // Optional variable-order override for decompositions: a permutation of
    // the free variables (empty = as written).
    std::vector<unsigned> variable_order;

    std::uint64_t probe_seed = 1;

    bool parallel_lifting = true;
};

} // namespace tame

#endif
