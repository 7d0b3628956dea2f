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

#include "maps/map.hpp"

#include <sstream>

#include "core/error.hpp"

namespace tame {

namespace {

std::vector<unsigned> var_range(unsigned from, unsigned count) {
    std::vector<unsigned> v(count);
    for (unsigned i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

std::string witness_text(Engine& eng, const DefinableSet& a) {
    auto w = find_witness(eng, a);
    if (!w) return "";
    std::string s = " at (";
    for (std::size_t i = 0; i < w->size(); ++i) {
        if (i) s += ", ";
        s += (*w)[i].decimal(4);
    }
    s += ")";
    return s;
}

} // namespace

std::optional<std::vector<AlgebraicNumber>> find_witness(Engine& eng, const DefinableSet& a) {
    try {
        CellDecomposition cad = eng.build_cad({a});
        for (const auto& c : cad.cells)
            if (c.truth[0]) return c.sample;
    } catch (const Error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

DefinableMap make_map(Engine& eng, DefinableSet dom, DefinableSet cod, DefinableSet graph) {
    const unsigned m = dom.arity, n = cod.arity;
    if (graph.arity != m + n)
        throw ArityMismatchError("graph arity must be dom arity + cod arity");

    DefinableSet product = set_product(dom, cod);
    if (!is_subset(eng, graph, product)) {
        DefinableSet bad = set_difference(graph, product);
        throw NotAFunctionError("graph is not contained in dom x cod" + witness_text(eng, bad));
    }
    // Totality.
    {
        Formula exist_y = f_exists_many(var_range(m, n), graph.formula);
        Formula total = f_forall_many(var_range(0, m), f_implies(dom.formula, exist_y));
        if (!eng.decide(total)) {
            DefinableSet bad{m, f_and(dom.formula, f_not(exist_y))};
            throw NotAFunctionError("graph is not total on dom" + witness_text(eng, bad));
        }
    }
    // Single-valuedness: rename a second output tuple above m+n.
    {
        std::vector<unsigned> image(m + n);
        for (unsigned i = 0; i < m; ++i) image[i] = i;
        for (unsigned i = 0; i < n; ++i) image[m + i] = m + n + i;
        Formula second = rename_free(graph.formula, image, 2 * (m + n));
        std::vector<Formula> same;
        for (unsigned i = 0; i < n; ++i)
            same.push_back(f_cmp(Polynomial::variable(m + i), Rel::eq,
                                 Polynomial::variable(m + n + i)));
        Formula sv = f_forall_many(
            var_range(0, m + 2 * n),
            f_implies(f_and(graph.formula, second), f_and(std::move(same))));
        if (!eng.decide(sv))
            throw NotAFunctionError("graph is not single-valued");
    }
    return DefinableMap{std::move(dom), std::move(cod), std::move(graph)};
}

DefinableMap identity_map(const DefinableSet& a) {
    const unsigned m = a.arity;
    std::vector<Formula> eqs = {a.formula};
    for (unsigned i = 0; i < m; ++i)
        eqs.push_back(f_cmp(Polynomial::variable(i), Rel::eq, Polynomial::variable(m + i)));
    return DefinableMap{a, a, DefinableSet{2 * m, f_and(std::move(eqs))}};
}

DefinableMap constant_map(Engine& eng, const DefinableSet& dom, const DefinableSet& cod,
                          const std::vector<Rational>& value) {
    if (value.size() != cod.arity) throw ArityMismatchError("constant value arity mismatch");
    std::vector<Polynomial> terms;
    for (const auto& v : value) terms.push_back(Polynomial::constant(v));
    return term_map(eng, dom, cod, terms);
}

DefinableMap inclusion_map(Engine& eng, const DefinableSet& dom, const DefinableSet& cod) {
    if (dom.arity != cod.arity) throw ArityMismatchError("inclusion needs equal arities");
    if (!is_subset(eng, dom, cod))
        throw PreconditionError("inclusion requires dom to be a subset of cod");
    const unsigned m = dom.arity;
    std::vector<Formula> eqs = {dom.formula};
    for (unsigned i = 0; i < m; ++i)
        eqs.push_back(f_cmp(Polynomial::variable(i), Rel::eq, Polynomial::variable(m + i)));
    return DefinableMap{dom, cod, DefinableSet{2 * m, f_and(std::move(eqs))}};
}

DefinableMap term_map(Engine& eng, const DefinableSet& dom, const DefinableSet& cod,
                      const std::vector<Polynomial>& terms) {
    if (terms.size() != cod.arity) throw ArityMismatchError("term count must match cod arity");
    const unsigned m = dom.arity;
    for (const auto& t : terms)
        if (t.var_bound() > m) throw ArityMismatchError("terms may only use domain variables");
    std::vector<Formula> eqs = {dom.formula};
    for (unsigned i = 0; i < terms.size(); ++i)
        eqs.push_back(f_cmp(Polynomial::variable(m + i), Rel::eq, terms[i]));
    DefinableSet graph{m + cod.arity, f_and(std::move(eqs))};
    // Values must land in cod; decided through make_map's containment check.
    return make_map(eng, dom, cod, std::move(graph));
}

DefinableMap compose(Engine& eng, const DefinableMap& f, const DefinableMap& g) {
    if (f.n() != g.m()) throw DomainMismatchError("compose: middle arities differ");
    if (!is_subset(eng, f.cod, g.dom))
        throw DomainMismatchError("compose requires cod(f) inside dom(g)");
    const unsigned m = f.m(), k = f.n(), n = g.n();
    // Graph(x, z) = exists y: f(x, y) and g(y, z); the middle tuple is
    // renamed above everything.
    std::vector<unsigned> fimg(m + k), gimg(k + n);
    for (unsigned i = 0; i < m; ++i) fimg[i] = i;
    for (unsigned i = 0; i < k; ++i) fimg[m + i] = m + n + i;
    for (unsigned i = 0; i < k; ++i) gimg[i] = m + n + i;
    for (unsigned i = 0; i < n; ++i) gimg[k + i] = m + i;
    const unsigned fresh = m + n + k;
    Formula ff = rename_free(f.graph.formula, fimg, fresh);
    Formula gg = rename_free(g.graph.formula, gimg, fresh);
    Formula body = f_exists_many(var_range(m + n, k), f_and(ff, gg));
    DefinableSet graph = eng.qe_set(DefinableSet{m + n, body});
    return DefinableMap{f.dom, g.cod, std::move(graph)};
}

DefinableSet image(Engine& eng, const DefinableMap& f) {
    Formula body = f_exists_many(var_range(0, f.m()), f.graph.formula);
    // Shift output coordinates down to 0..n-1.
    std::vector<unsigned> img(f.m() + f.n());
    for (unsigned i = 0; i < f.m(); ++i) img[i] = f.n() + i;
    for (unsigned i = 0; i < f.n(); ++i) img[f.m() + i] = i;
    Formula shifted = rename_free(f.graph.formula, img, f.m() + f.n());
    Formula ex = f_exists_many(var_range(f.n(), f.m()), shifted);
    (void)body;
    return eng.qe_set(DefinableSet{f.n(), ex});
}

DefinableSet image_of(Engine& eng, const DefinableMap& f, const DefinableSet& s) {
    if (s.arity != f.m()) throw ArityMismatchError("image_of needs a subset of the domain");
    std::vector<unsigned> img(f.m() + f.n());
    for (unsigned i = 0; i < f.m(); ++i) img[i] = f.n() + i;
    for (unsigned i = 0; i < f.n(); ++i) img[f.m() + i] = i;
    Formula shifted = rename_free(f.graph.formula, img, f.m() + f.n());
    std::vector<unsigned> simg(f.m());
    for (unsigned i = 0; i < f.m(); ++i) simg[i] = f.n() + i;
    Formula sf = rename_free(s.formula, simg, f.m() + f.n());
    Formula ex = f_exists_many(var_range(f.n(), f.m()), f_and(shifted, sf));
    return eng.qe_set(DefinableSet{f.n(), ex});
}

DefinableSet preimage(Engine& eng, const DefinableMap& f, const DefinableSet& s) {
    if (s.arity != f.n()) throw ArityMismatchError("preimage needs a subset of the codomain");
    std::vector<unsigned> simg(f.n());
    for (unsigned i = 0; i < f.n(); ++i) simg[i] = f.m() + i;
    Formula sf = rename_free(s.formula, simg, f.m() + f.n());
    Formula ex = f_exists_many(var_range(f.m(), f.n()), f_and(f.graph.formula, sf));
    return eng.qe_set(DefinableSet{f.m(), ex});
}

bool is_injective(Engine& eng, const DefinableMap& f) {
    const unsigned m = f.m(), n = f.n();
    // Two input tuples with a common output tuple.
    std::vector<unsigned> img(m + n);
    for (unsigned i = 0; i < m; ++i) img[i] = m + n + i;
    for (unsigned i = 0; i < n; ++i) img[m + i] = m + i;
    Formula second = rename_free(f.graph.formula, img, 2 * m + n);
    std::vector<Formula> same;
    for (unsigned i = 0; i < m; ++i)
        same.push_back(
            f_cmp(Polynomial::variable(i), Rel::eq, Polynomial::variable(m + n + i)));
    Formula sentence = f_forall_many(
        var_range(0, 2 * m + n),
        f_implies(f_and(f.graph.formula, second), f_and(std::move(same))));
    return eng.decide(sentence);
}

bool is_surjective(Engine& eng, const DefinableMap& f) {
    return is_subset(eng, f.cod, image(eng, f));
}

bool map_equal(Engine& eng, const DefinableMap& f, const DefinableMap& g) {
    if (f.m() != g.m() || f.n() != g.n()) return false;
    return set_equal(eng, f.dom, g.dom) && set_equal(eng, f.graph, g.graph);
}

std::string map_to_text(const DefinableMap& f) {
    std::ostringstream os;
    os << "dom\n" << set_to_text(f.dom) << "cod\n" << set_to_text(f.cod) << "graph\n"
       << set_to_text(f.graph);
    return os.str();
}

DefinableMap map_from_text(Engine& eng, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string section;
    std::string dom_text, cod_text, graph_text;
    while (std::getline(is, line)) {
        if (line == "dom" || line == "cod" || line == "graph") {
            section = line;
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        if (section == "dom")
            dom_text += line + "\n";
        else if (section == "cod")
            cod_text += line + "\n";
        else if (section == "graph")
            graph_text += line + "\n";
        else
            throw SyntaxError("map file must start with a dom/cod/graph stanza", 0);
    }
    if (dom_text.empty() || cod_text.empty() || graph_text.empty())
        throw SyntaxError("map file needs dom, cod and graph stanzas", 0);
    return make_map(eng, set_from_text(dom_text), set_from_text(cod_text),
                    set_from_text(graph_text));
}

} // namespace tame
