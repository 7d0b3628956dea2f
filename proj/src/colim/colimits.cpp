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

#include "colim/colimits.hpp"

#include "core/error.hpp"
#include "real/simplex.hpp"

namespace tame {

namespace {

std::vector<unsigned> var_range(unsigned from, unsigned count) {
    std::vector<unsigned> v(count);
    for (unsigned i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

Polynomial var(unsigned v) { return Polynomial::variable(v); }

} // namespace

Coproduct coproduct(Engine& eng, const std::vector<DefinableSet>& parts) {
    unsigned maxa = 0;
    for (const auto& p : parts) maxa = std::max(maxa, p.arity);
    const unsigned arity = 1 + maxa;
    Coproduct out;
    std::vector<Formula> disjuncts;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        std::vector<unsigned> img(p.arity);
        for (unsigned k = 0; k < p.arity; ++k) img[k] = 1 + k;
        std::vector<Formula> conj = {
            f_cmp(var(0), Rel::eq, Polynomial::constant(Rational(static_cast<long>(i + 1)))),
            rename_free(p.formula, img, arity + 1)};
        for (unsigned k = p.arity; k < maxa; ++k)
            conj.push_back(f_cmp(var(1 + k), Rel::eq, Polynomial::zero()));
        disjuncts.push_back(f_and(std::move(conj)));
    }
    out.space = DefinableSet{arity, simplify(f_or(std::move(disjuncts)))};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        std::vector<Polynomial> terms;
        terms.push_back(Polynomial::constant(Rational(static_cast<long>(i + 1))));
        for (unsigned k = 0; k < p.arity; ++k) terms.push_back(var(k));
        for (unsigned k = p.arity; k < maxa; ++k) terms.push_back(Polynomial::zero());
        out.injections.push_back(term_map(eng, p, out.space, terms));
    }
    return out;
}

bool closed_glue_verify(Engine& eng, const DefinableSet& x, const DefinableSet& v1,
                        const DefinableSet& v2) {
    if (!is_subset(eng, v1, x) || !is_subset(eng, v2, x))
        throw PreconditionError("glue pieces must be subsets of the ambient set");
    auto closed_in_x = [&](const DefinableSet& v) {
        DefinableSet cl = closure(eng, v);
        return is_subset(eng, set_intersection(cl, x), v);
    };
    if (!closed_in_x(v1) || !closed_in_x(v2)) return false;
    return set_equal(eng, set_union(v1, v2), x);
}

DefinableMap chebyshev_distance_map(Engine& eng, const DefinableSet& over,
                                    const DefinableSet& a) {
    if (over.arity != a.arity) throw ArityMismatchError("distance needs matching arities");
    const unsigned n = a.arity;
    const unsigned dv = n;       // distance value
    const unsigned a0 = n + 1;   // quantified point of a
    const unsigned ev = a0 + n;  // epsilon
    std::vector<unsigned> aimg(n);
    for (unsigned i = 0; i < n; ++i) aimg[i] = a0 + i;
    Formula a_at = rename_free(a.formula, aimg, ev + 1);

    // max_i |b_i - q_i| >= d   <=>   some coordinate difference reaches d.
    std::vector<Formula> far;
    for (unsigned i = 0; i < n; ++i) {
        far.push_back(f_ge(var(i) - var(a0 + i), var(dv)));
        far.push_back(f_ge(var(a0 + i) - var(i), var(dv)));
    }
    Formula lower = f_forall_many(var_range(a0, n), f_implies(a_at, f_or(far)));

    std::vector<Formula> near;
    for (unsigned i = 0; i < n; ++i) {
        near.push_back(f_cmp(var(i) - var(a0 + i) - var(dv) - var(ev), Rel::lt,
                             Polynomial::zero()));
        near.push_back(f_cmp(var(a0 + i) - var(i) - var(dv) - var(ev), Rel::lt,
                             Polynomial::zero()));
    }
    Formula approx = f_forall(
        ev, f_or(f_atom(var(ev), Rel::le),
                 f_exists_many(var_range(a0, n), f_and(a_at, f_and(near)))));

    Formula graph_f = f_and({over.formula, f_ge(var(dv), Polynomial::zero()), lower, approx});
    DefinableSet graph = eng.qe_set(DefinableSet{n + 1, graph_f});
    DefinableSet cod{1, f_ge(var(0), Polynomial::zero())};
    return make_map(eng, over, cod, graph);
}

PushoutCertificate distinguished_square_checks(Engine& eng, const DefinableMap& j,
                                               const DefinableMap& f, const DefinableMap& jprime,
                                               const DefinableMap& fprime) {
    const unsigned na = j.m();
    if (f.m() != na) throw ArityMismatchError("j and f must share their domain");
    const unsigned nb = j.n();
    const unsigned nx = f.n();
    const unsigned ny = jprime.n();
    if (fprime.m() != nb || jprime.m() != nx || fprime.n() != ny)
        throw ArityMismatchError("square shape mismatch");
    if (!set_equal(eng, jprime.cod, fprime.cod))
        throw PreconditionError("square legs must share the codomain");

    // Commutativity: f'(j(a)) = j'(f(a)).
    {
        // Variables: a, b, x, y, y'.
        const unsigned a0 = 0, b0 = na, x0 = na + nb, y0 = x0 + nx, y1 = y0 + ny;
        const unsigned total = y1 + ny;
        auto rg = [&](const DefinableSet& g, unsigned in0, unsigned inn, unsigned out0) {
            std::vector<unsigned> img(g.arity);
            for (unsigned i = 0; i < g.arity; ++i)
                img[i] = i < inn ? in0 + i : out0 + (i - inn);
            return rename_free(g.formula, img, total + 4);
        };
        Formula hyp = f_and({rg(j.graph, a0, na, b0), rg(f.graph, a0, na, x0),
                             rg(fprime.graph, b0, nb, y0), rg(jprime.graph, x0, nx, y1)});
        std::vector<Formula> same;
        for (unsigned i = 0; i < ny; ++i)
            same.push_back(f_cmp(var(y0 + i), Rel::eq, var(y1 + i)));
        Formula commutes =
            f_forall_many(var_range(0, total), f_implies(hyp, f_and(std::move(same))));
        if (!eng.decide(commutes))
            throw PreconditionError("square does not commute");
    }

    PushoutCertificate cert;
    cert.jprime_closed_embedding = is_closed_embedding(eng, jprime);
    cert.fprime_proper = is_proper(eng, fprime);

    DefinableSet jA = image(eng, j);
    DefinableSet jpX = image(eng, jprime);

    // Pullback: the comparison of A with the fiber product of (f', j') over Y
    // is a bijection.  Injectivity follows from j's, surjectivity is the
    // sentence below.
    {
        bool inj = is_injective(eng, j);
        const unsigned b0 = 0, x0 = nb, y0 = nb + nx, a0 = y0 + ny;
        const unsigned total = a0 + na;
        auto rg = [&](const DefinableSet& g, unsigned in0, unsigned inn, unsigned out0) {
            std::vector<unsigned> img(g.arity);
            for (unsigned i = 0; i < g.arity; ++i)
                img[i] = i < inn ? in0 + i : out0 + (i - inn);
            return rename_free(g.formula, img, total + 4);
        };
        Formula hyp = f_and(rg(fprime.graph, b0, nb, y0), rg(jprime.graph, x0, nx, y0));
        Formula wit = f_exists_many(
            var_range(a0, na), f_and(rg(j.graph, a0, na, b0), rg(f.graph, a0, na, x0)));
        Formula onto = f_forall_many(var_range(0, y0 + ny), f_implies(hyp, wit));
        cert.pullback = inj && eng.decide(onto);
    }

    // Joint surjectivity.
    {
        const unsigned y0 = 0, x0 = ny, b0 = ny + nx;
        auto rg = [&](const DefinableSet& g, unsigned in0, unsigned inn, unsigned out0) {
            std::vector<unsigned> img(g.arity);
            for (unsigned i = 0; i < g.arity; ++i)
                img[i] = i < inn ? in0 + i : out0 + (i - inn);
            return rename_free(g.formula, img, b0 + nb + 4);
        };
        Formula from_x = f_exists_many(var_range(x0, nx), rg(jprime.graph, x0, nx, y0));
        Formula from_b = f_exists_many(var_range(b0, nb), rg(fprime.graph, b0, nb, y0));
        Formula sent = f_forall_many(
            var_range(y0, ny),
            f_implies(jprime.cod.formula, f_or(from_x, from_b)));
        cert.jointly_surjective = eng.decide(sent);
    }

    // f' restricted to B - j(A) is a bijection onto Y - j'(X).
    {
        DefinableSet boff = set_difference(fprime.dom, jA);
        DefinableSet yoff = set_difference(fprime.cod, jpX);
        // into: values of f' on boff avoid j'(X)
        const unsigned b0 = 0, y0 = nb;
        auto rg = [&](const DefinableSet& g, unsigned in0, unsigned inn, unsigned out0) {
            std::vector<unsigned> img(g.arity);
            for (unsigned i = 0; i < g.arity; ++i)
                img[i] = i < inn ? in0 + i : out0 + (i - inn);
            return rename_free(g.formula, img, b0 + nb + ny + nb + 4);
        };
        std::vector<unsigned> yimg(ny);
        for (unsigned i = 0; i < ny; ++i) yimg[i] = y0 + i;
        Formula into = f_forall_many(
            var_range(0, nb + ny),
            f_implies(f_and(boff.formula, rg(fprime.graph, b0, nb, y0)),
                      rename_free(yoff.formula, yimg, nb + ny + 4)));
        // injective on boff
        const unsigned b1 = nb + ny;
        std::vector<unsigned> bimg(nb);
        for (unsigned i = 0; i < nb; ++i) bimg[i] = b1 + i;
        Formula second = rg(fprime.graph, b1, nb, y0);
        std::vector<Formula> same;
        for (unsigned i = 0; i < nb; ++i) same.push_back(f_cmp(var(i), Rel::eq, var(b1 + i)));
        Formula inj = f_forall_many(
            var_range(0, b1 + nb),
            f_implies(f_and({boff.formula, rename_free(boff.formula, bimg, b1 + nb + 4),
                             rg(fprime.graph, b0, nb, y0), second}),
                      f_and(std::move(same))));
        // onto yoff
        Formula onto = f_forall_many(
            var_range(nb, ny),
            f_implies(rename_free(yoff.formula, yimg, nb + ny + 4),
                      f_exists_many(var_range(0, nb),
                                    f_and(boff.formula, rg(fprime.graph, b0, nb, y0)))));
        cert.off_locus_bijection = eng.decide(into) && eng.decide(inj) && eng.decide(onto);
    }
    return cert;
}

bool verify_distinguished_square(Engine& eng, const DefinableMap& j, const DefinableMap& f,
                                 const DefinableMap& jprime, const DefinableMap& fprime) {
    return distinguished_square_checks(eng, j, f, jprime, fprime).all();
}

bool verify_proper_quotient(Engine& eng, const DefinableMap& q, const DefinableSet& e) {
    if (e.arity != 2 * q.m()) throw ArityMismatchError("kernel pair lives in X x X");
    if (!is_surjective(eng, q)) return false;
    if (!is_proper(eng, q)) return false;
    // Kernel pair: pairs with a common image point.
    const unsigned m = q.m(), n = q.n();
    std::vector<unsigned> img2(m + n);
    for (unsigned i = 0; i < m; ++i) img2[i] = m + i;
    for (unsigned i = 0; i < n; ++i) img2[m + i] = 2 * m + i;
    Formula first = rename_free(q.graph.formula, {}, 2 * m + n + 4);
    {
        std::vector<unsigned> img1(m + n);
        for (unsigned i = 0; i < m; ++i) img1[i] = i;
        for (unsigned i = 0; i < n; ++i) img1[m + i] = 2 * m + i;
        first = rename_free(q.graph.formula, img1, 2 * m + n + 4);
    }
    Formula second = rename_free(q.graph.formula, img2, 2 * m + n + 4);
    Formula kp = f_exists_many(var_range(2 * m, n), f_and(first, second));
    DefinableSet kernel = eng.qe_set(DefinableSet{2 * m, kp});
    return set_equal(eng, kernel, e);
}

} // namespace tame
