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

#ifndef TAME_LOGIC_FORMULA_HPP
#define TAME_LOGIC_FORMULA_HPP

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "poly/polynomial.hpp"
#include "realalg/algebraic.hpp"

namespace tame {

// Relations of normalized atoms p REL 0.  Strict/weak greater-than are
// rewritten to less-than of the negated polynomial at construction.
enum class Rel { eq, neq, lt, le };

Rel negate_rel(Rel r);
std::string rel_symbol(Rel r);

enum class FKind { True, False, Atom, Not, And, Or, Exists, Forall };

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

class FormulaNode {
public:
    FKind kind;
    Polynomial poly; // Atom
    Rel rel = Rel::eq;
    std::vector<Formula> kids; // Not: 1, And/Or: n, Exists/Forall: 1
    unsigned var = 0;          // quantified variable index

    std::size_t hash() const { return hash_; }

    // Cached structural hash; set once by f_make.
    std::size_t hash_ = 0;
};

// Constructors; they perform cheap local normalization (constant folding,
// flattening of nested conjunctions/disjunctions, atom canonicalization).
Formula f_true();
Formula f_false();
Formula f_atom(Polynomial p, Rel rel);
// Convenience: lhs REL rhs.
Formula f_cmp(const Polynomial& lhs, Rel rel, const Polynomial& rhs);
Formula f_gt(const Polynomial& lhs, const Polynomial& rhs);
Formula f_ge(const Polynomial& lhs, const Polynomial& rhs);
Formula f_not(const Formula& f);
Formula f_and(std::vector<Formula> fs);
Formula f_or(std::vector<Formula> fs);
Formula f_and(const Formula& a, const Formula& b);
Formula f_or(const Formula& a, const Formula& b);
Formula f_implies(const Formula& a, const Formula& b);
Formula f_iff(const Formula& a, const Formula& b);
Formula f_exists(unsigned var, const Formula& f);
Formula f_forall(unsigned var, const Formula& f);
Formula f_exists_many(const std::vector<unsigned>& vars, Formula f);
Formula f_forall_many(const std::vector<unsigned>& vars, Formula f);

bool f_equal(const Formula& a, const Formula& b);

bool is_quantifier_free(const Formula& f);
bool is_constant_formula(const Formula& f);

// Free variables.
std::set<unsigned> free_vars(const Formula& f);
// All variables including bound ones.
unsigned var_bound_all(const Formula& f);

// Evaluate a quantifier-free formula at an exact point (index = variable).
// Throws QuantifierPresentError on quantified input.
bool evaluate(const Formula& f, std::span<const AlgebraicNumber> point);

// Substitute polynomial terms for free variables: occurrences of variable v
// become subst[v] when subst[v] is set.  Bound variables must not appear in
// any substituted term (callers rename bound variables apart first).
Formula substitute(const Formula& f,
                   const std::vector<std::pair<unsigned, Polynomial>>& subst);

// Rename free variables via image (variable i -> image[i]); bound variables
// are renamed to fresh indices beyond `fresh_from`.
Formula rename_free(const Formula& f, const std::vector<unsigned>& image,
                    unsigned fresh_from);

// Rewrite so every bound variable is a distinct index >= fresh_from.
Formula rename_bound_apart(const Formula& f, unsigned fresh_from);

// Negation normal form: negations pushed to atoms (which absorb them).
Formula to_nnf(const Formula& f);

// Stable text rendering in the external grammar.
std::string to_text(const Formula& f);

} // namespace tame

#endif
