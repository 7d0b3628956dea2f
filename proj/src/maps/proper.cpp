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

#include "core/error.hpp"
#include "maps/analysis.hpp"

namespace tame {

namespace {

std::vector<unsigned> var_range(unsigned from, unsigned count) {
    std::vector<unsigned> v(count);
    for (unsigned i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

struct Branch {
    Formula cond;   // on the transformed coordinate
    Polynomial num; // original coordinate = num / den of the transformed one
    Polynomial den;
};

// The three branches of c^{-1} in the transformed coordinate v:
//   (-2,-1): x = -1/(v+2),  [-1,1]: x = v,  (1,2): x = 1/(2-v).
std::vector<Branch> c_inverse_branches(unsigned v) {
    Polynomial t = Polynomial::variable(v);
    Polynomial one = Polynomial::constant(Rational(1));
    std::vector<Branch> out;
    out.push_back({f_and(f_gt(t, Polynomial::constant(Rational(-2))),
                         f_cmp(t, Rel::lt, Polynomial::constant(Rational(-1)))),
                   -one, t + Polynomial::constant(Rational(2))});
    out.push_back({f_and(f_ge(t, Polynomial::constant(Rational(-1))),
                         f_cmp(t, Rel::le, Polynomial::constant(Rational(1)))),
                   t, one});
    out.push_back({f_and(f_gt(t, Polynomial::constant(Rational(1))),
                         f_cmp(t, Rel::lt, Polynomial::constant(Rational(2)))),
                   one, Polynomial::constant(Rational(2)) - t});
    return out;
}

} // namespace

DefinableSet c_transform(Engine&, const DefinableSet& s) {
    const unsigned n = s.arity;
    if (n == 0) return s;
    // Enumerate branch assignments coordinate by coordinate, folding the
    // substitutions left to right.
    std::vector<Formula> disjuncts;
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        Formula body = s.formula;
        std::vector<Formula> conds;
        for (unsigned i = 0; i < n; ++i) {
            Branch b = c_inverse_branches(i)[choice[i]];
            conds.push_back(b.cond);
            body = substitute_rational(body, i, b.num, b.den);
        }
        conds.push_back(body);
        disjuncts.push_back(f_and(std::move(conds)));
        // Next assignment.
        unsigned i = 0;
        for (; i < n; ++i) {
            if (++choice[i] < 3) break;
            choice[i] = 0;
        }
        if (i == n) break;
    }
    return DefinableSet{n, simplify(f_or(std::move(disjuncts)))};
}

DefinableMap c_map(Engine& eng) {
    Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
    Polynomial one = Polynomial::constant(Rational(1));
    Formula left = f_and(f_cmp(x, Rel::lt, Polynomial::constant(Rational(-1))),
                         f_cmp(y * x + Polynomial::constant(Rational(2)) * x + one, Rel::eq,
                               Polynomial::zero()));
    Formula mid = f_and({f_ge(x, Polynomial::constant(Rational(-1))),
                         f_cmp(x, Rel::le, one), f_cmp(y, Rel::eq, x)});
    Formula right = f_and(f_gt(x, one),
                          f_cmp(y * x - Polynomial::constant(Rational(2)) * x + one, Rel::eq,
                                Polynomial::zero()));
    DefinableSet dom = universe_set(1);
    DefinableSet cod{1, f_and(f_gt(Polynomial::variable(0), Polynomial::constant(Rational(-2))),
                              f_cmp(Polynomial::variable(0), Rel::lt,
                                    Polynomial::constant(Rational(2))))};
    DefinableSet graph{2, f_or({left, mid, right})};
    return make_map(eng, dom, cod, graph);
}

CompletionSquare standard_completion(Engine& eng, const DefinableMap& f) {
    if (!is_continuous(eng, f))
        throw PreconditionError("standard completion requires a continuous map");
    const unsigned m = f.m(), n = f.n();
    CompletionSquare sq;
    sq.bounded_dom = c_transform(eng, f.dom);
    sq.bounded_cod = c_transform(eng, f.cod);
    sq.bounded_graph = c_transform(eng, f.graph);

    // The graph of a continuous map on a definably compact domain is itself
    // definably compact (the image of the domain under (id, f)), and c is a
    // homeomorphism onto its image, so nothing is added by the closure.
    if (is_polytope(eng, f.dom)) {
        sq.closure_graph = sq.bounded_graph;
        sq.dense_dom = true;
    } else {
        sq.closure_graph = closure(eng, sq.bounded_graph);
        sq.dense_dom = set_equal(eng, closure(eng, sq.bounded_graph), sq.closure_graph);
    }
    if (is_polytope(eng, f.cod)) {
        sq.closure_cod = sq.bounded_cod;
        sq.dense_cod = true;
    } else {
        sq.closure_cod = closure(eng, sq.bounded_cod);
        sq.dense_cod = set_equal(eng, closure(eng, sq.bounded_cod), sq.closure_cod);
    }

    // Projection onto the codomain block of coordinates.
    {
        std::vector<Formula> eqs;
        std::vector<unsigned> img(n);
        for (unsigned j = 0; j < n; ++j) img[j] = (m + n) + j;
        Formula clg = sq.closure_graph.formula;
        eqs.push_back(clg);
        for (unsigned j = 0; j < n; ++j)
            eqs.push_back(f_cmp(Polynomial::variable(m + n + j), Rel::eq,
                                Polynomial::variable(m + j)));
        DefinableSet graph{m + n + n, f_and(std::move(eqs))};
        sq.projection = DefinableMap{sq.closure_graph, sq.closure_cod, std::move(graph)};
    }
    return sq;
}

bool is_proper(Engine& eng, const DefinableMap& f) {
    if (!is_continuous(eng, f))
        throw PreconditionError("is_proper requires a continuous map");
    // Any continuous definable map with definably compact domain is proper.
    if (is_polytope(eng, f.dom)) return true;

    CompletionSquare sq = standard_completion(eng, f);
    const unsigned m = f.m(), n = f.n();
    // Pullback condition: a point of the closed bounded graph whose codomain
    // part lies in the bounded codomain already lies in the bounded graph.
    std::vector<unsigned> img(n);
    for (unsigned j = 0; j < n; ++j) img[j] = m + j;
    Formula cod_part = rename_free(sq.bounded_cod.formula, img, m + n);
    Formula sentence = f_forall_many(
        var_range(0, m + n),
        f_implies(f_and(sq.closure_graph.formula, cod_part), sq.bounded_graph.formula));
    return eng.decide(sentence);
}

bool is_closed_embedding(Engine& eng, const DefinableMap& f) {
    return is_injective(eng, f) && is_proper(eng, f);
}

bool is_proper_cover(Engine& eng, const std::vector<DefinableMap>& family,
                     const DefinableSet& x) {
    if (family.empty()) return is_empty(eng, x);
    for (const auto& f : family) {
        if (f.cod.arity != x.arity || !set_equal(eng, f.cod, x))
            throw PreconditionError("cover members must share the codomain");
    }
    for (const auto& f : family)
        if (!is_proper(eng, f)) return false;
    DefinableSet un = empty_set(x.arity);
    for (const auto& f : family) un = set_union(un, image(eng, f));
    return set_equal(eng, un, x);
}

} // namespace tame
