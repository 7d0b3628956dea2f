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

#include "cad/projection.hpp"

#include <map>

namespace tame {

namespace {

// Reducta chain of f in v: f, red(f), red^2(f), ... while the degree in v
// stays positive.
std::vector<Polynomial> reducta_chain(const Polynomial& f, unsigned v) {
    std::vector<Polynomial> out;
    Polynomial g = f;
    while (!g.is_zero() && g.degree(v) >= 1) {
        out.push_back(g);
        g = g.reductum_in(v);
    }
    return out;
}

void push_nonconstant(std::vector<Polynomial>& out, const Polynomial& p) {
    if (!p.is_zero() && !p.is_constant()) out.push_back(p);
}

void push_psc_chain(std::vector<Polynomial>& out, const Polynomial& a, const Polynomial& b,
                    unsigned v) {
    for (const Polynomial& c : principal_subresultant_coeffs(a, b, v)) push_nonconstant(out, c);
}

} // namespace

std::vector<Polynomial> project_level(const std::vector<Polynomial>& level_basis, unsigned v,
                                      ProjectionMode mode) {
    std::vector<Polynomial> out;
    if (mode == ProjectionMode::Full) {
        // Classical conservative operator: all coefficients, principal
        // subresultant coefficients of every reductum against its own
        // derivative, and of all reducta pairs across distinct inputs.
        for (const Polynomial& f : level_basis) {
            for (const Polynomial& c : f.coeffs_in(v)) push_nonconstant(out, c);
            for (const Polynomial& g : reducta_chain(f, v)) {
                if (g.degree(v) >= 2) push_psc_chain(out, g, g.derivative(v), v);
            }
        }
        for (std::size_t i = 0; i < level_basis.size(); ++i)
            for (std::size_t j = i + 1; j < level_basis.size(); ++j)
                for (const Polynomial& g : reducta_chain(level_basis[i], v))
                    for (const Polynomial& h : reducta_chain(level_basis[j], v))
                        push_psc_chain(out, g, h, v);
    } else {
        // Reduced operator: leading coefficients (continuing down only
        // until a nonzero constant coefficient guarantees the fiber degree
        // can never collapse), discriminants and pairwise resultants.
        // Valid only while no basis polynomial vanishes identically over a
        // lifted cell; the engine watches for that and falls back to the
        // full operator.
        for (const Polynomial& f : level_basis) {
            const auto cs = f.coeffs_in(v);
            for (std::size_t k = cs.size(); k-- > 0;) {
                if (cs[k].is_zero()) continue;
                if (cs[k].is_constant()) break; // degree can drop no further
                out.push_back(cs[k]);
            }
            if (f.degree(v) >= 2) push_nonconstant(out, discriminant(f, v));
        }
        for (std::size_t i = 0; i < level_basis.size(); ++i)
            for (std::size_t j = i + 1; j < level_basis.size(); ++j)
                push_nonconstant(out, resultant(level_basis[i], level_basis[j], v));
    }
    return out;
}

ProjectionTower build_projection_tower(const std::vector<Polynomial>& inputs, unsigned nvars,
                                       ProjectionMode mode, bool thom_augment) {
    ProjectionTower t;
    t.nvars = nvars;
    t.sig.assign(nvars, {});
    t.basis.assign(nvars, {});
    if (nvars == 0) return t;

    // Distribute inputs by top variable.
    auto level_of = [](const Polynomial& p) { return p.var_bound(); }; // 1-based level
    std::vector<std::vector<Polynomial>> pending(nvars + 1);
    for (const Polynomial& p : inputs) {
        if (p.is_zero() || p.is_constant()) continue;
        pending[level_of(p)].push_back(p);
    }

    for (unsigned level = nvars; level >= 1; --level) {
        std::vector<Polynomial> sig = pending[level];
        if (thom_augment) {
            // Close under derivation by the level variable; the decomposition
            // then realizes Thom's lemma level by level, making cells
            // describable by sign conditions.
            std::vector<Polynomial> chain = sig;
            for (std::size_t i = 0; i < chain.size(); ++i) {
                Polynomial d = chain[i].derivative(level - 1);
                if (!d.is_zero() && !d.is_constant()) chain.push_back(d);
            }
            sig = std::move(chain);
        }
        t.sig[level - 1] = sig;
        t.basis[level - 1] = coprime_squarefree_basis(sig);
        if (level == 1) break;
        // Some basis/signature members may not actually use the level
        // variable after refinement; sink them.
        std::vector<Polynomial> here;
        for (const Polynomial& b : t.basis[level - 1]) {
            if (b.var_bound() == level)
                here.push_back(b);
            else
                pending[b.var_bound()].push_back(b);
        }
        t.basis[level - 1] = here;
        std::vector<Polynomial> sunk_sig;
        for (const Polynomial& s : t.sig[level - 1]) {
            if (s.var_bound() == level)
                sunk_sig.push_back(s);
            else
                pending[s.var_bound()].push_back(s);
        }
        t.sig[level - 1] = sunk_sig;
        for (const Polynomial& p : project_level(t.basis[level - 1], level - 1, mode)) {
            if (p.is_zero() || p.is_constant()) continue;
            pending[level_of(p)].push_back(p);
        }
    }
    // Degenerate inputs of level 0 were dropped; level-1 signature keeps the
    // univariate inputs.
    return t;
}

} // namespace tame
