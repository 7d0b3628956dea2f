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

#include <optional>

#include "core/error.hpp"
#include "maps/analysis.hpp"

namespace tame {

namespace {

std::vector<unsigned> var_range(unsigned from, unsigned count) {
    std::vector<unsigned> v(count);
    for (unsigned i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

// One branch of a piecewise-rational reading of a graph: on the x-condition,
// output j equals num[j]/den[j] with den[j] nonvanishing (checked later).
struct RationalPiece {
    Formula xcond = f_true();
    std::vector<Polynomial> num, den;
};

bool uses_any_var_at_or_above(const Polynomial& p, unsigned from) {
    return p.var_bound() > from;
}

// Attempts to read a disjunct as a solved rational piece: every output
// variable is pinned by a linear equation whose coefficients only involve
// domain variables (after substituting previously solved outputs).
std::optional<RationalPiece> solve_piece(const Formula& disjunct, unsigned m, unsigned n) {
    RationalPiece piece;
    piece.num.assign(n, Polynomial::zero());
    piece.den.assign(n, Polynomial::constant(Rational(1)));
    std::vector<bool> solved(n, false);
    Formula work = disjunct;
    for (unsigned pass = 0; pass <= n; ++pass) {
        bool progress = false;
        std::vector<Formula> kids =
            work->kind == FKind::And ? work->kids : std::vector<Formula>{work};
        for (unsigned j = 0; j < n; ++j) {
            if (solved[j]) continue;
            const unsigned v = m + j;
            for (const Formula& k : kids) {
                if (k->kind != FKind::Atom || k->rel != Rel::eq) continue;
                if (k->poly.degree(v) != 1) continue;
                auto cs = k->poly.coeffs_in(v);
                // Both parts must be free of every still-unsolved output.
                bool clean = true;
                for (unsigned jj = 0; jj < n && clean; ++jj) {
                    if (solved[jj]) continue;
                    if (cs[0].uses_var(m + jj) || cs[1].uses_var(m + jj)) clean = false;
                }
                if (!clean || uses_any_var_at_or_above(cs[1], m) ||
                    uses_any_var_at_or_above(cs[0], m))
                    continue;
                piece.den[j] = cs[1];
                piece.num[j] = -cs[0];
                solved[j] = true;
                work = simplify(substitute_rational(work, v, piece.num[j], piece.den[j]));
                progress = true;
                break;
            }
            if (progress) break;
        }
        if (!progress) break;
    }
    for (unsigned j = 0; j < n; ++j)
        if (!solved[j]) return std::nullopt;
    if (!free_vars(work).empty() && *free_vars(work).rbegin() >= m)
        return std::nullopt; // residue still mentions outputs
    piece.xcond = work;
    return piece;
}

} // namespace

bool is_continuous(Engine& eng, const DefinableMap& f) {
    const unsigned m = f.m(), n = f.n();
    if (n == 0 || m == 0) return true; // maps from a point or into the point

    // Solved piecewise-rational reading.
    Formula g = simplify(f.graph.formula);
    std::vector<Formula> disjuncts =
        g->kind == FKind::Or ? g->kids : std::vector<Formula>{g};
    std::vector<RationalPiece> pieces;
    bool all_solved = true;
    for (const Formula& d : disjuncts) {
        auto piece = solve_piece(d, m, n);
        if (!piece) {
            all_solved = false;
            break;
        }
        pieces.push_back(std::move(*piece));
    }

    if (all_solved) {
        // Denominators must be nonvanishing on each piece.
        bool dens_ok = true;
        for (const auto& p : pieces) {
            for (unsigned j = 0; j < n && dens_ok; ++j) {
                if (p.den[j].is_constant()) {
                    if (sign(p.den[j].constant_value()) == 0) dens_ok = false;
                    continue;
                }
                Formula nz = f_forall_many(
                    var_range(0, m),
                    f_implies(f_and(f.dom.formula, p.xcond), f_atom(p.den[j], Rel::neq)));
                if (!eng.decide(nz)) dens_ok = false;
            }
            if (!dens_ok) break;
        }
        // The pieces must cover the domain.
        bool covers = false;
        if (dens_ok) {
            std::vector<Formula> conds;
            for (const auto& p : pieces) conds.push_back(p.xcond);
            covers = eng.decide(
                f_forall_many(var_range(0, m), f_implies(f.dom.formula, f_or(conds))));
        }
        if (dens_ok && covers) {
            if (pieces.size() == 1) {
                // A rational map with nonvanishing denominator is continuous.
                return true;
            }
            // Pasting lemma: continuous on finitely many relatively closed
            // pieces that cover the domain and agree on overlaps.
            bool pastes = true;
            for (const auto& p : pieces) {
                DefinableSet dset{m, simplify(f_and(f.dom.formula, p.xcond))};
                DefinableSet cl = closure(eng, dset);
                if (!is_subset(eng, set_intersection(cl, f.dom), dset)) {
                    pastes = false;
                    break;
                }
            }
            for (std::size_t i = 0; i < pieces.size() && pastes; ++i)
                for (std::size_t j = i + 1; j < pieces.size() && pastes; ++j)
                    for (unsigned k = 0; k < n && pastes; ++k) {
                        Formula agree = f_cmp(pieces[i].num[k] * pieces[j].den[k], Rel::eq,
                                              pieces[j].num[k] * pieces[i].den[k]);
                        Formula sentence = f_forall_many(
                            var_range(0, m),
                            f_implies(f_and({f.dom.formula, pieces[i].xcond,
                                             pieces[j].xcond}),
                                      agree));
                        if (!eng.decide(sentence)) pastes = false;
                    }
            if (pastes) return true;
        }
    }

    // Exact epsilon-delta sentence, relative to the subspace topology of the
    // domain; box neighbourhoods keep every added atom linear.
    const unsigned eps = 2 * (m + n), delta = eps + 1;
    std::vector<unsigned> img(m + n);
    for (unsigned i = 0; i < m; ++i) img[i] = m + n + i;
    for (unsigned j = 0; j < n; ++j) img[m + j] = m + n + m + j;
    Formula second = rename_free(f.graph.formula, img, delta + 1);

    auto abs_lt = [](unsigned a, unsigned b, unsigned bound) {
        Polynomial d = Polynomial::variable(a) - Polynomial::variable(b);
        Polynomial e = Polynomial::variable(bound);
        return f_and(f_atom(d - e, Rel::lt), f_atom(-d - e, Rel::lt));
    };
    std::vector<Formula> xclose, yclose;
    for (unsigned i = 0; i < m; ++i) xclose.push_back(abs_lt(i, m + n + i, delta));
    for (unsigned j = 0; j < n; ++j) yclose.push_back(abs_lt(m + j, m + n + m + j, eps));

    Formula inner = f_forall_many(
        var_range(m + n, m + n),
        f_implies(f_and(second, f_and(xclose)), f_and(yclose)));
    Formula has_delta =
        f_exists(delta, f_and(f_atom(-Polynomial::variable(delta), Rel::lt), inner));
    Formula all_eps =
        f_forall(eps, f_or(f_atom(Polynomial::variable(eps), Rel::le), has_delta));
    Formula sentence =
        f_forall_many(var_range(0, m + n), f_implies(f.graph.formula, all_eps));
    return eng.decide(sentence);
}

} // namespace tame
