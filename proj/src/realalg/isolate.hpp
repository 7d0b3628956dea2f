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

#ifndef TAME_REALALG_ISOLATE_HPP
#define TAME_REALALG_ISOLATE_HPP

#include <vector>

#include "core/rational.hpp"

namespace tame {

// One isolated real root of a squarefree integer polynomial: either an exact
// rational value or an open interval (lo, hi) containing exactly one root,
// with neither endpoint a root.
struct IsolatedRoot {
    bool exact = false;
    Rational value;        // when exact
    Rational lo, hi;       // when not exact
};

// Isolates all real roots of the squarefree polynomial with the given
// integer coefficients (index = degree), in increasing order.
// Uses Descartes' rule of signs on Moebius-transformed polynomials with
// interval bisection.
std::vector<IsolatedRoot> isolate_squarefree(const std::vector<Integer>& coeffs);

} // namespace tame

#endif
