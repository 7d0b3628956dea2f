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

Polynomial var(unsigned v) { return Polynomial::variable(v); }

// The canonical point of the nonempty set S = { t : psi(t) }, as a formula
// in bvar (with psi's parameters free): the least element when one exists;
// otherwise a + min(delta, 1)/2 past the finite infimum a, where delta is
// the length of the inward interval; for sets unbounded below, one unit
// below the supremum of the full lower tail, and 0 for the whole line.
Formula canonical_selector(const Formula& psi, unsigned tvar, unsigned bvar, unsigned fresh) {
    auto psi_at = [&](unsigned v) {
        return substitute(rename_bound_apart(psi, fresh + 16), {{tvar, var(v)}});
    };
    const unsigned t = fresh, a = fresh + 1, u = fresh + 2, c = fresh + 3, d = fresh + 4;

    Formula is_lb_a = f_forall(t, f_implies(psi_at(t), f_ge(var(t), var(a))));
    Formula is_lb_u = f_forall(t, f_implies(psi_at(t), f_ge(var(t), var(u))));
    Formula has_least = f_exists(a, f_and(psi_at(a), is_lb_a));

    // Clause 1: b is the least element.
    Formula least_clause =
        f_and(psi_at(bvar), f_forall(t, f_implies(psi_at(t), f_ge(var(t), var(bvar)))));

    // IsInf(a): greatest lower bound.
    Formula is_inf = f_and(is_lb_a, f_forall(u, f_implies(is_lb_u, f_ge(var(a), var(u)))));

    // TailAll(a): everything beyond a belongs to S.
    Formula tail_all = f_forall(t, f_implies(f_gt(var(t), var(a)), psi_at(t)));
    // GapSup(a, d): d = sup{ u > 0 : (a, a+u) inside S }, finite.
    Formula in_up_to_d = f_forall(
        t, f_implies(f_and(f_gt(var(t), var(a)), f_cmp(var(t), Rel::lt, var(a) + var(d))),
                     psi_at(t)));
    Formula miss_beyond = f_forall(
        u, f_implies(f_gt(var(u), var(d)),
                     f_exists(t, f_and({f_gt(var(t), var(a)),
                                        f_cmp(var(t), Rel::lt, var(a) + var(u)),
                                        f_not(psi_at(t))}))));
    Polynomial twob = Polynomial::constant(Rational(2)) * (var(bvar) - var(a));
    Formula pick_half = f_cmp(twob, Rel::eq, Polynomial::constant(Rational(1)));
    Formula pick_d = f_cmp(twob, Rel::eq, var(d));
    Formula gap_clause = f_exists(
        a, f_and(is_inf,
                 f_or(f_and(tail_all, pick_half),
                      f_exists(d, f_and({f_gt(var(d), Polynomial::zero()), in_up_to_d,
                                         miss_beyond,
                                         f_or(f_and(f_ge(var(d), Polynomial::constant(Rational(1))),
                                                    pick_half),
                                              f_and(f_cmp(var(d), Rel::lt,
                                                          Polynomial::constant(Rational(1))),
                                                    pick_d))})))));

    Formula bounded_below = f_exists(a, is_lb_a);

    // Unbounded below: the whole line, or one unit below the tail supremum.
    Formula whole_line = f_forall(t, psi_at(t));
    Formula pick_zero = f_cmp(var(bvar), Rel::eq, Polynomial::zero());
    Formula tail_to_c = f_forall(t, f_implies(f_cmp(var(t), Rel::lt, var(c)), psi_at(t)));
    Formula tail_to_u = f_forall(t, f_implies(f_cmp(var(t), Rel::lt, var(u)), psi_at(t)));
    Formula c_is_sup = f_and(tail_to_c, f_forall(u, f_implies(tail_to_u, f_ge(var(c), var(u)))));
    Formula pick_c_minus_1 =
        f_cmp(var(bvar) - var(c) + Polynomial::constant(Rational(1)), Rel::eq,
              Polynomial::zero());
    Formula unbounded_clause =
        f_or(f_and(whole_line, pick_zero),
             f_and(f_not(whole_line), f_exists(c, f_and(c_is_sup, pick_c_minus_1))));

    return f_or({f_and(has_least, least_clause),
                 f_and({f_not(has_least), bounded_below, gap_clause}),
                 f_and(f_not(bounded_below), unbounded_clause)});
}

} // namespace

DefinableMap definable_choice_section(Engine& eng, const DefinableMap& f) {
    if (!is_surjective(eng, f))
        throw NotSurjectiveError("definable choice requires a surjective map");
    const unsigned m = f.m(), n = f.n();

    // Section graph variables: y at 0..n-1, section outputs b at n..n+m-1.
    std::vector<Formula> parts = {rename_free(f.cod.formula, {}, n + m + 8)};
    for (unsigned i = 0; i < m; ++i) {
        // psi_i(t) over parameters (y, b_0..b_{i-1}):
        //   exists trailing x's with the graph at (b_0..b_{i-1}, t, x_rest, y).
        const unsigned tvar = n + m;
        const unsigned trailing0 = n + m + 1;
        std::vector<unsigned> img(m + n);
        for (unsigned k = 0; k < m; ++k) {
            if (k < i)
                img[k] = n + k; // already-chosen section outputs
            else if (k == i)
                img[k] = tvar;
            else
                img[k] = trailing0 + (k - i - 1);
        }
        for (unsigned j = 0; j < n; ++j) img[m + j] = j;
        Formula body = rename_free(f.graph.formula, img, trailing0 + m);
        Formula psi = f_exists_many(var_range(trailing0, m - i - 1), body);
        Formula sel = canonical_selector(psi, tvar, n + i, trailing0 + m + 4);
        parts.push_back(eng.qe(sel));
    }
    DefinableSet graph{n + m, simplify(f_and(std::move(parts)))};
    DefinableMap g = make_map(eng, f.cod, f.dom, std::move(graph));

    // Section property: f(g(y)) = y, decided via graph containment.
    std::vector<unsigned> flip(n + m);
    for (unsigned j = 0; j < n; ++j) flip[j] = m + j;
    for (unsigned k = 0; k < m; ++k) flip[n + k] = k;
    Formula g_as_f_graph = rename_free(g.graph.formula, flip, n + m + 8);
    Formula section_ok =
        f_forall_many(var_range(0, n + m), f_implies(g_as_f_graph, f.graph.formula));
    if (!eng.decide(section_ok))
        throw CertificationFailedError("canonical section fails the section identity");
    return g;
}

} // namespace tame
