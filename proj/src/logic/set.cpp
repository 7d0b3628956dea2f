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

#include "logic/set.hpp"

#include <sstream>

#include "core/error.hpp"
#include "logic/parser.hpp"

namespace tame {

DefinableSet make_set(unsigned arity, Formula f) {
    for (unsigned v : free_vars(f))
        if (v >= arity)
            throw ArityMismatchError("formula uses x" + std::to_string(v + 1) +
                                     " beyond arity " + std::to_string(arity));
    return DefinableSet{arity, std::move(f)};
}

DefinableSet universe_set(unsigned arity) { return DefinableSet{arity, f_true()}; }
DefinableSet empty_set(unsigned arity) { return DefinableSet{arity, f_false()}; }

DefinableSet point_set(const std::vector<Rational>& point) {
    std::vector<Formula> eqs;
    for (std::size_t i = 0; i < point.size(); ++i)
        eqs.push_back(f_cmp(Polynomial::variable(static_cast<unsigned>(i)), Rel::eq,
                            Polynomial::constant(point[i])));
    return DefinableSet{static_cast<unsigned>(point.size()), f_and(std::move(eqs))};
}

namespace {

void require_same_arity(const DefinableSet& a, const DefinableSet& b) {
    if (a.arity != b.arity)
        throw ArityMismatchError("arities differ: " + std::to_string(a.arity) + " vs " +
                                 std::to_string(b.arity));
}

} // namespace

DefinableSet set_complement(const DefinableSet& a) {
    return DefinableSet{a.arity, f_not(a.formula)};
}

DefinableSet set_union(const DefinableSet& a, const DefinableSet& b) {
    require_same_arity(a, b);
    return DefinableSet{a.arity, f_or(a.formula, b.formula)};
}

DefinableSet set_intersection(const DefinableSet& a, const DefinableSet& b) {
    require_same_arity(a, b);
    return DefinableSet{a.arity, f_and(a.formula, b.formula)};
}

DefinableSet set_difference(const DefinableSet& a, const DefinableSet& b) {
    require_same_arity(a, b);
    return DefinableSet{a.arity, f_and(a.formula, f_not(b.formula))};
}

DefinableSet set_product(const DefinableSet& a, const DefinableSet& b) {
    std::vector<unsigned> image(b.arity);
    for (unsigned i = 0; i < b.arity; ++i) image[i] = i + a.arity;
    Formula bf = rename_free(b.formula, image, a.arity + b.arity);
    return DefinableSet{a.arity + b.arity, f_and(a.formula, bf)};
}

DefinableSet set_permute(const DefinableSet& a, const std::vector<unsigned>& perm) {
    if (perm.size() != a.arity) throw ArityMismatchError("permutation length mismatch");
    // new coordinate i is old coordinate perm[i]: old variable perm[i] must
    // become new variable i.
    std::vector<unsigned> image(a.arity, 0);
    for (unsigned i = 0; i < a.arity; ++i) image[perm[i]] = i;
    return DefinableSet{a.arity, rename_free(a.formula, image, a.arity)};
}

DefinableSet set_project_trailing(const DefinableSet& a, unsigned k) {
    if (k > a.arity) throw ArityMismatchError("cannot project away more than the arity");
    Formula f = a.formula;
    std::vector<unsigned> vars;
    for (unsigned i = a.arity - k; i < a.arity; ++i) vars.push_back(i);
    return DefinableSet{a.arity - k, f_exists_many(vars, f)};
}

DefinableSet closure_formula(const DefinableSet& a) {
    const unsigned n = a.arity;
    if (n == 0) return a;
    const unsigned eps = n;
    std::vector<unsigned> ximage(n);
    std::vector<unsigned> xvars(n);
    for (unsigned i = 0; i < n; ++i) {
        ximage[i] = n + 1 + i;
        xvars[i] = n + 1 + i;
    }
    Formula inner = rename_free(a.formula, ximage, 2 * n + 1);
    std::vector<Formula> close = {inner};
    for (unsigned i = 0; i < n; ++i) {
        Polynomial diff = Polynomial::variable(n + 1 + i) - Polynomial::variable(i);
        Polynomial e = Polynomial::variable(eps);
        close.push_back(f_atom(diff - e, Rel::lt));
        close.push_back(f_atom(-diff - e, Rel::lt));
    }
    Formula body = f_exists_many(xvars, f_and(std::move(close)));
    Formula quantified =
        f_forall(eps, f_or(f_atom(Polynomial::variable(eps), Rel::le), body));
    return DefinableSet{n, quantified};
}

Formula formula_at_terms(const DefinableSet& a, const std::vector<Polynomial>& terms,
                         unsigned fresh_from) {
    if (terms.size() != a.arity) throw ArityMismatchError("term vector length mismatch");
    // Move the coordinates to a scratch range first so that substitution is
    // simultaneous even when the terms mention low variable indices.
    Formula f = rename_bound_apart(a.formula, fresh_from);
    const unsigned scratch = fresh_from + var_bound_all(f) + 8;
    std::vector<unsigned> scratch_image(a.arity);
    for (unsigned i = 0; i < a.arity; ++i) scratch_image[i] = scratch + i;
    f = rename_free(f, scratch_image, scratch + a.arity);
    std::vector<std::pair<unsigned, Polynomial>> subst;
    for (unsigned i = 0; i < a.arity; ++i) subst.emplace_back(scratch + i, terms[i]);
    return substitute(f, subst);
}

std::string set_to_text(const DefinableSet& a) {
    std::ostringstream os;
    os << "arity " << a.arity << "\n" << to_text(a.formula) << "\n";
    return os.str();
}

DefinableSet set_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    is >> word;
    if (word != "arity") throw SyntaxError("expected 'arity'", 0);
    unsigned arity = 0;
    if (!(is >> arity)) throw SyntaxError("expected arity value", 5);
    std::string rest, line;
    std::getline(is, line); // rest of the arity line
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        rest += line;
        rest += " ";
    }
    return make_set(arity, parse_formula(rest));
}

} // namespace tame
