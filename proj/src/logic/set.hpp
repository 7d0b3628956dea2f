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

#ifndef TAME_LOGIC_SET_HPP
#define TAME_LOGIC_SET_HPP

#include <string>
#include <vector>

#include "logic/formula.hpp"

namespace tame {

// A definable subset of R^n: an arity together with a first-order formula
// whose free variables lie below the arity.  Arity zero is allowed; the
// formula is then a sentence and the set is the one-point space or empty.
struct DefinableSet {
    unsigned arity = 0;
    Formula formula = f_false();
};

// Validates the free-variable condition.
DefinableSet make_set(unsigned arity, Formula f);

DefinableSet universe_set(unsigned arity);
DefinableSet empty_set(unsigned arity);
// The singleton {point}.
DefinableSet point_set(const std::vector<Rational>& point);

DefinableSet set_complement(const DefinableSet& a);
DefinableSet set_union(const DefinableSet& a, const DefinableSet& b);
DefinableSet set_intersection(const DefinableSet& a, const DefinableSet& b);
DefinableSet set_difference(const DefinableSet& a, const DefinableSet& b);
// R^m x R^n with b's variables shifted above a's.
DefinableSet set_product(const DefinableSet& a, const DefinableSet& b);
// Coordinate permutation: new coordinate i is old coordinate perm[i].
DefinableSet set_permute(const DefinableSet& a, const std::vector<unsigned>& perm);
// Existential projection dropping the last k coordinates.
DefinableSet set_project_trailing(const DefinableSet& a, unsigned k);

// The topological closure as a quantified formula (to be simplified by
// quantifier elimination downstream): y in cl(X) iff for every e > 0 some
// x in X has |x_i - y_i| < e in every coordinate.
DefinableSet closure_formula(const DefinableSet& a);

// Substitute the given polynomial terms (in ambient variables `arity_out`)
// for a set's coordinates: the result is { y : a(t_1(y), ..., t_n(y)) }.
Formula formula_at_terms(const DefinableSet& a, const std::vector<Polynomial>& terms,
                         unsigned fresh_from);

std::string set_to_text(const DefinableSet& a);
DefinableSet set_from_text(const std::string& text);

} // namespace tame

#endif
