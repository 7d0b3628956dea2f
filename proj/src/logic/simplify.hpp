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

#ifndef TAME_LOGIC_SIMPLIFY_HPP
#define TAME_LOGIC_SIMPLIFY_HPP

#include "logic/formula.hpp"

namespace tame {

// Semantics-preserving light simplification: negation normal form, constant
// folding, flattening, sign-set merging of atoms over a common polynomial,
// quantifier miniscoping, and substitution of solved linear equations with
// constant coefficients.
Formula simplify(const Formula& f);

// Aggressive solved-form elimination used before decompositions: in
// addition to the above, existential variables with linear occurrences are
// eliminated by substitution, splitting into cases on the sign of the
// (parametric) coefficient when necessary.  Bound variables are renamed
// apart from `fresh_from` upward.
Formula eliminate_solved(const Formula& f, unsigned fresh_from);

// Substitute v := num/den into f, clearing denominators sign-safely.
// Callers guarantee den != 0 on the relevant branch and that v is not bound
// inside f.
Formula substitute_rational(const Formula& f, unsigned v, const Polynomial& num,
                            const Polynomial& den);

} // namespace tame

#endif
