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

#include "real/simplex.hpp"

#include <cassert>

namespace tame {

namespace {

Polynomial var(unsigned v) { return Polynomial::variable(v); }

} // namespace

DefinableSet simplex_polytope(unsigned n) {
    if (n == 0) return DefinableSet{0, f_true()};
    std::vector<Formula> conds;
    conds.push_back(f_ge(var(0), Polynomial::zero()));
    for (unsigned i = 0; i + 1 < n; ++i) conds.push_back(f_ge(var(i + 1), var(i)));
    conds.push_back(f_cmp(var(n - 1), Rel::le, Polynomial::constant(Rational(1))));
    return DefinableSet{n, f_and(std::move(conds))};
}

std::vector<Rational> simplex_vertex(unsigned n, unsigned i) {
    assert(i <= n);
    std::vector<Rational> v(n, Rational(0));
    for (unsigned k = 0; k < i; ++k) v[n - 1 - k] = Rational(1);
    return v;
}

std::vector<Rational> simplex_barycenter(unsigned n) {
    std::vector<Rational> v(n);
    for (unsigned k = 0; k < n; ++k) v[k] = Rational(static_cast<long>(k + 1), n + 1);
    return v;
}

DefinableSet simplex_face(unsigned n, const std::vector<unsigned>& vertices) {
    // The barycentric coordinate of vertex i is the step t_{n-i+1} - t_{n-i}
    // (with t_0 = 0, t_{n+1} = 1); the face keeps exactly the steps at the
    // chosen vertices, so the complementary steps vanish.
    std::vector<bool> keep(n + 1, false);
    for (unsigned i : vertices) {
        assert(i <= n);
        keep[i] = true;
    }
    std::vector<Formula> conds = {simplex_polytope(n).formula};
    auto t = [&](unsigned k) { // t_k with boundary conventions, 0-based var k-1
        if (k == 0) return Polynomial::zero();
        if (k == n + 1) return Polynomial::constant(Rational(1));
        return var(k - 1);
    };
    for (unsigned i = 0; i <= n; ++i) {
        if (keep[i]) continue;
        // lambda_i = t_{n-i+1} - t_{n-i} = 0
        conds.push_back(f_cmp(t(n - i + 1) - t(n - i), Rel::eq, Polynomial::zero()));
    }
    return DefinableSet{n, f_and(std::move(conds))};
}

DefinableSet simplex_boundary(unsigned n) {
    assert(n >= 1);
    std::vector<Formula> facets;
    for (unsigned omit = 0; omit <= n; ++omit) {
        std::vector<unsigned> verts;
        for (unsigned i = 0; i <= n; ++i)
            if (i != omit) verts.push_back(i);
        facets.push_back(simplex_face(n, verts).formula);
    }
    return DefinableSet{n, simplify(f_or(std::move(facets)))};
}

} // namespace tame
