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

#include "cad/cad.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

#include "cad/lifting.hpp"
#include "cad/projection.hpp"
#include "core/error.hpp"

namespace tame {

namespace {

// Prenex normal form of an NNF formula with bound variables renamed apart.
struct Prenexed {
    std::vector<std::pair<bool, unsigned>> prefix; // (exists?, var), outermost first
    Formula matrix;
};

Prenexed to_prenex(const Formula& f) {
    switch (f->kind) {
        case FKind::Exists:
        case FKind::Forall: {
            Prenexed inner = to_prenex(f->kids[0]);
            inner.prefix.insert(inner.prefix.begin(), {f->kind == FKind::Exists, f->var});
            return inner;
        }
        case FKind::And:
        case FKind::Or: {
            Prenexed out;
            std::vector<Formula> mats;
            for (const auto& k : f->kids) {
                Prenexed sub = to_prenex(k);
                out.prefix.insert(out.prefix.end(), sub.prefix.begin(), sub.prefix.end());
                mats.push_back(sub.matrix);
            }
            out.matrix = f->kind == FKind::And ? f_and(std::move(mats)) : f_or(std::move(mats));
            return out;
        }
        default: return Prenexed{{}, f};
    }
}

void collect_atom_polys(const Formula& f, std::vector<Polynomial>& out) {
    if (f->kind == FKind::Atom) {
        out.push_back(f->poly);
        return;
    }
    for (const auto& k : f->kids) collect_atom_polys(k, out);
}

// Fast path: every coordinate rational.
bool eval_at_rational(const Formula& f, const std::vector<Rational>& pt) {
    switch (f->kind) {
        case FKind::True: return true;
        case FKind::False: return false;
        case FKind::Atom: {
            int s = sign(f->poly.evaluate(pt));
            switch (f->rel) {
                case Rel::eq: return s == 0;
                case Rel::neq: return s != 0;
                case Rel::lt: return s < 0;
                case Rel::le: return s <= 0;
            }
            return false;
        }
        case FKind::Not: return !eval_at_rational(f->kids[0], pt);
        case FKind::And:
            for (const auto& k : f->kids)
                if (!eval_at_rational(k, pt)) return false;
            return true;
        case FKind::Or:
            for (const auto& k : f->kids)
                if (eval_at_rational(k, pt)) return true;
            return false;
        default: throw QuantifierPresentError();
    }
}

bool sample_all_rational(const std::vector<AlgebraicNumber>& sample) {
    for (const auto& a : sample)
        if (!a.is_rational()) return false;
    return true;
}

bool eval_at_point(const Formula& f, PrimitivePoint& pt) {
    switch (f->kind) {
        case FKind::True: return true;
        case FKind::False: return false;
        case FKind::Atom: {
            int s = pt.sign_of(f->poly);
            switch (f->rel) {
                case Rel::eq: return s == 0;
                case Rel::neq: return s != 0;
                case Rel::lt: return s < 0;
                case Rel::le: return s <= 0;
            }
            return false;
        }
        case FKind::Not: return !eval_at_point(f->kids[0], pt);
        case FKind::And:
            for (const auto& k : f->kids)
                if (!eval_at_point(k, pt)) return false;
            return true;
        case FKind::Or:
            for (const auto& k : f->kids)
                if (eval_at_point(k, pt)) return true;
            return false;
        default: throw QuantifierPresentError();
    }
}

bool eval_cell_truth(const Formula& f, const std::vector<AlgebraicNumber>& sample) {
    if (sample_all_rational(sample)) {
        std::vector<Rational> pt;
        pt.reserve(sample.size());
        for (const auto& a : sample) pt.push_back(a.rational_value());
        return eval_at_rational(f, pt);
    }
    PrimitivePoint pt(sample);
    return eval_at_point(f, pt);
}

void enforce_degree_cap(const std::vector<Polynomial>& polys, const KernelConfig& cfg) {
    for (const auto& p : polys)
        if (p.total_degree() > cfg.max_total_degree)
            throw ResourceLimitError("input degree " + std::to_string(p.total_degree()) +
                                     " exceeds cap " + std::to_string(cfg.max_total_degree));
}

} // namespace

Engine::Engine(KernelConfig cfg) : cfg_(std::move(cfg)) {}

Engine::RunResult Engine::run(const Formula& input, bool want_formula, bool allow_blockwise) {
    // Aggressive but exact preprocessing.
    const unsigned fresh0 = var_bound_all(input) + 1;
    Formula f = eliminate_solved(input, fresh0);
    if (is_constant_formula(f)) return {f->kind == FKind::True, f};
    if (want_formula && is_quantifier_free(f)) return {false, f};

    Formula nnf = rename_bound_apart(to_nnf(f), var_bound_all(f) + 1);
    Prenexed pre = to_prenex(nnf);

    // Level layout: free variables in ascending order (or the configured
    // order), then the quantifier prefix.
    const std::set<unsigned> fv = free_vars(nnf);
    std::vector<unsigned> free_list(fv.begin(), fv.end());
    if (!cfg_.variable_order.empty() && cfg_.variable_order.size() == free_list.size()) {
        std::vector<unsigned> reordered;
        for (unsigned idx : cfg_.variable_order) {
            if (idx >= free_list.size()) throw PreconditionError("variable order out of range");
            reordered.push_back(free_list[idx]);
        }
        free_list = reordered;
    }
    const unsigned m = static_cast<unsigned>(free_list.size());
    const unsigned nvars = m + static_cast<unsigned>(pre.prefix.size());
    if (nvars > cfg_.max_variables) {
        if (allow_blockwise && !pre.prefix.empty()) {
            // Block-wise elimination keeps each decomposition small.
            Formula blockwise = qe_blockwise(f);
            if (is_constant_formula(blockwise))
                return {blockwise->kind == FKind::True, blockwise};
            if (is_quantifier_free(blockwise)) return {false, blockwise};
        }
        throw ResourceLimitError("variable count " + std::to_string(nvars) + " exceeds cap " +
                                 std::to_string(cfg_.max_variables));
    }

    // Rename into level coordinates.
    std::vector<unsigned> image;
    auto ensure_image = [&](unsigned v, unsigned level) {
        if (image.size() <= v) image.resize(v + 1, ~0u);
        image[v] = level;
    };
    for (unsigned k = 0; k < m; ++k) ensure_image(free_list[k], k);
    for (unsigned k = 0; k < pre.prefix.size(); ++k) ensure_image(pre.prefix[k].second, m + k);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] == ~0u) image[i] = static_cast<unsigned>(i);
    Formula matrix = rename_free(pre.matrix, image, nvars + 1);

    std::vector<Polynomial> polys;
    collect_atom_polys(matrix, polys);
    enforce_degree_cap(polys, cfg_);

    bool thom = false;
    ProjectionMode mode = cfg_.projection;
    while (true) {
        ProjectionTower tower = build_projection_tower(polys, nvars, mode, thom);
        Walker walker(tower, cfg_);

        auto fold_init = [&](unsigned level) -> bool {
            if (level < m) return false;
            return !pre.prefix[level - m].first; // exists: false, forall: true
        };
        auto fold_combine = [&](unsigned level, bool acc, bool child) -> bool {
            if (level >= m) return pre.prefix[level - m].first ? (acc || child) : (acc && child);
            return acc;
        };

        try {
            if (m == 0) {
                WalkHooks h;
                h.leaf = [&](const std::vector<AlgebraicNumber>& path, const std::vector<bool>&,
                             const std::vector<unsigned>&) { return eval_cell_truth(matrix, path); };
                h.init = fold_init;
                h.combine = fold_combine;
                const bool t = walker.walk(h);
                return {t, t ? f_true() : f_false()};
            }

            struct Row {
                std::vector<AlgebraicNumber> sample;
                bool truth = false;
            };
            std::vector<Row> rows;
            WalkHooks h;
            h.enter = [&](unsigned level, const std::vector<AlgebraicNumber>& path,
                          const std::vector<bool>&) {
                if (level == m) rows.push_back(Row{path, false});
            };
            h.leaf = [&](const std::vector<AlgebraicNumber>& path, const std::vector<bool>&,
                         const std::vector<unsigned>&) { return eval_cell_truth(matrix, path); };
            h.init = fold_init;
            h.combine = [&](unsigned level, bool acc, bool child) -> bool {
                if (level >= m) return pre.prefix[level - m].first ? (acc || child) : (acc && child);
                if (level == m - 1) rows.back().truth = child;
                return acc;
            };
            walker.walk(h);

            bool any_true = false, any_false = false;
            for (auto& r : rows) (r.truth ? any_true : any_false) = true;
            if (!any_true) return {false, f_false()};
            if (!any_false) return {false, f_true()};

            // Signature polynomials of the free levels.
            std::vector<const Polynomial*> sig;
            for (unsigned k = 0; k < m; ++k)
                for (const auto& sp : tower.sig[k]) sig.push_back(&sp);

            // Distinct sign vectors with truth flags (1 = true, 2 = false).
            std::map<std::string, int> seen;
            for (const auto& r : rows) {
                std::string key;
                key.reserve(sig.size());
                if (sample_all_rational(r.sample)) {
                    std::vector<Rational> pt;
                    pt.reserve(r.sample.size());
                    for (const auto& a : r.sample) pt.push_back(a.rational_value());
                    for (const Polynomial* sp : sig)
                        key.push_back(static_cast<char>('1' + sign(sp->evaluate(pt))));
                } else {
                    PrimitivePoint pt(r.sample);
                    for (const Polynomial* sp : sig)
                        key.push_back(static_cast<char>('1' + pt.sign_of(*sp)));
                }
                seen[key] |= r.truth ? 1 : 2;
            }
            bool separated = true;
            for (const auto& [vec, flags] : seen)
                if (flags == 3) separated = false;
            if (!separated) {
                if (!thom) {
                    thom = true;
                    continue;
                }
                throw Error("sign vectors fail to separate cells after augmentation");
            }

            // Greedy column pruning over the distinct vectors.
            std::vector<std::pair<std::string, int>> distinct(seen.begin(), seen.end());
            std::vector<std::size_t> kept(sig.size());
            for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
            for (std::size_t drop_pos = kept.size(); drop_pos-- > 0;) {
                std::vector<std::size_t> trial;
                for (std::size_t t = 0; t < kept.size(); ++t)
                    if (t != drop_pos) trial.push_back(kept[t]);
                std::map<std::string, int> groups;
                for (const auto& [vec, flags] : distinct) {
                    std::string key;
                    key.reserve(trial.size());
                    for (std::size_t k : trial) key.push_back(vec[k]);
                    groups[key] |= flags;
                }
                bool ok = true;
                for (const auto& [k, fl] : groups)
                    if (fl == 3) ok = false;
                if (ok) kept = std::move(trial);
            }

            std::map<std::string, bool> emitted;
            std::vector<Formula> disjuncts;
            for (const auto& [vec, flags] : distinct) {
                if (!(flags & 1)) continue;
                std::string key;
                key.reserve(kept.size());
                for (std::size_t k : kept) key.push_back(vec[k]);
                if (emitted[key]) continue;
                emitted[key] = true;
                std::vector<Formula> conj;
                for (std::size_t j = 0; j < kept.size(); ++j) {
                    const Polynomial& sp = *sig[kept[j]];
                    const int s = key[j] - '1';
                    if (s == 0)
                        conj.push_back(f_atom(sp, Rel::eq));
                    else if (s < 0)
                        conj.push_back(f_atom(sp, Rel::lt));
                    else
                        conj.push_back(f_atom(-sp, Rel::lt));
                }
                disjuncts.push_back(f_and(std::move(conj)));
            }
            Formula result = f_or(std::move(disjuncts));

            // Back to the caller's variable names.
            std::vector<unsigned> back(nvars, 0);
            for (unsigned k = 0; k < m; ++k) back[k] = free_list[k];
            for (unsigned k = m; k < nvars; ++k) back[k] = k;
            result = rename_free(result, back, nvars + 1);
            return {false, simplify(result)};
        } catch (const WellOrientednessFailure&) {
            mode = ProjectionMode::Full;
            continue;
        }
    }
}

Formula Engine::qe_blockwise(Formula f) {
    // Repeatedly eliminate an innermost quantified subformula whose body is
    // quantifier-free, each with its own small decomposition.
    while (!is_quantifier_free(f)) {
        // Find an innermost quantified node.
        Formula target;
        std::function<void(const Formula&)> find = [&](const Formula& g) {
            if (target) return;
            for (const auto& k : g->kids) find(k);
            if (target) return;
            if ((g->kind == FKind::Exists || g->kind == FKind::Forall) &&
                is_quantifier_free(g->kids[0]))
                target = g;
        };
        find(f);
        if (!target) throw ResourceLimitError("cannot order quantifier blocks for elimination");
        RunResult sub = run(target, true, false);
        Formula replacement = sub.formula;
        // Replace the node structurally.
        std::function<Formula(const Formula&)> replace = [&](const Formula& g) -> Formula {
            if (f_equal(g, target)) return replacement;
            switch (g->kind) {
                case FKind::Not: return f_not(replace(g->kids[0]));
                case FKind::And:
                case FKind::Or: {
                    std::vector<Formula> ks;
                    for (const auto& k : g->kids) ks.push_back(replace(k));
                    return g->kind == FKind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
                }
                case FKind::Exists: return f_exists(g->var, replace(g->kids[0]));
                case FKind::Forall: return f_forall(g->var, replace(g->kids[0]));
                default: return g;
            }
        };
        f = simplify(replace(f));
    }
    return f;
}

Formula Engine::qe_rec(const Formula& f) {
    switch (f->kind) {
        case FKind::True:
        case FKind::False:
        case FKind::Atom: return f;
        case FKind::Not: return qe_rec(to_nnf(f));
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> ks;
            for (const auto& k : f->kids) ks.push_back(qe_rec(k));
            return f->kind == FKind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
        }
        case FKind::Exists:
        case FKind::Forall: {
            // Collect the contiguous quantifier prefix.
            std::vector<std::pair<FKind, unsigned>> prefix;
            Formula body = f;
            while (body->kind == FKind::Exists || body->kind == FKind::Forall) {
                prefix.emplace_back(body->kind, body->var);
                body = body->kids[0];
            }
            if (!is_quantifier_free(body)) body = qe_rec(body);
            Formula whole = body;
            for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
                whole = it->first == FKind::Exists ? f_exists(it->second, whole)
                                                   : f_forall(it->second, whole);
            const std::string key = to_text(whole);
            {
                std::lock_guard<std::mutex> g(mu_);
                auto it = qe_cache_.find(key);
                if (it != qe_cache_.end()) return it->second;
            }
            Formula out = run(whole, true).formula;
            {
                std::lock_guard<std::mutex> g(mu_);
                qe_cache_.emplace(key, out);
            }
            return out;
        }
    }
    return f;
}

bool Engine::decide_rec(const Formula& f) {
    switch (f->kind) {
        case FKind::True: return true;
        case FKind::False: return false;
        case FKind::Not: return !decide_rec(f->kids[0]);
        case FKind::And:
            for (const auto& k : f->kids)
                if (!decide_rec(k)) return false;
            return true;
        case FKind::Or:
            for (const auto& k : f->kids)
                if (decide_rec(k)) return true;
            return false;
        case FKind::Atom:
            // A sentence atom is constant and was folded already.
            throw PreconditionError("atom with free variables in a sentence");
        case FKind::Exists:
        case FKind::Forall: {
            std::vector<std::pair<FKind, unsigned>> prefix;
            Formula body = f;
            while (body->kind == FKind::Exists || body->kind == FKind::Forall) {
                prefix.emplace_back(body->kind, body->var);
                body = body->kids[0];
            }
            Formula whole = f;
            if (!is_quantifier_free(body)) {
                body = qe_rec(body);
                whole = body;
                for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
                    whole = it->first == FKind::Exists ? f_exists(it->second, whole)
                                                       : f_forall(it->second, whole);
            }
            const std::string key = to_text(whole);
            {
                std::lock_guard<std::mutex> g(mu_);
                auto it = decide_cache_.find(key);
                if (it != decide_cache_.end()) return it->second;
            }
            bool t = run(whole, false).truth;
            {
                std::lock_guard<std::mutex> g(mu_);
                decide_cache_.emplace(key, t);
            }
            return t;
        }
    }
    return false;
}

bool Engine::decide(const Formula& sentence) {
    if (!free_vars(sentence).empty())
        throw PreconditionError("decide requires a sentence without free variables");
    const std::string key = to_text(sentence);
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = decide_cache_.find(key);
        if (it != decide_cache_.end()) return it->second;
    }
    const unsigned fresh0 = var_bound_all(sentence) + 1;
    Formula f = eliminate_solved(sentence, fresh0);
    bool t = decide_rec(f);
    {
        std::lock_guard<std::mutex> g(mu_);
        decide_cache_.emplace(key, t);
    }
    return t;
}

Formula Engine::qe(const Formula& f) {
    const std::string key = to_text(f);
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = qe_cache_.find(key);
        if (it != qe_cache_.end()) return it->second;
    }
    const unsigned fresh0 = var_bound_all(f) + 1;
    Formula out = simplify(qe_rec(eliminate_solved(f, fresh0)));
    {
        std::lock_guard<std::mutex> g(mu_);
        qe_cache_.emplace(key, out);
    }
    return out;
}

DefinableSet Engine::qe_set(const DefinableSet& a) {
    if (is_quantifier_free(a.formula)) return a;
    return DefinableSet{a.arity, qe(a.formula)};
}

CellDecomposition Engine::build_cad(const std::vector<DefinableSet>& sets) {
    if (sets.empty()) throw PreconditionError("build_cad needs at least one set");
    const unsigned n = sets[0].arity;
    for (const auto& s : sets)
        if (s.arity != n) throw ArityMismatchError("build_cad inputs must share their arity");
    if (n > cfg_.max_variables)
        throw ResourceLimitError("arity exceeds variable cap");

    std::vector<Formula> formulas;
    for (const auto& s : sets) formulas.push_back(qe_set(s).formula);

    std::vector<Polynomial> polys;
    for (const auto& f : formulas) collect_atom_polys(f, polys);
    enforce_degree_cap(polys, cfg_);

    // Optional variable-order override, as a relabeling there and back.
    std::vector<unsigned> order(n);
    for (unsigned i = 0; i < n; ++i) order[i] = i;
    if (!cfg_.variable_order.empty()) {
        if (cfg_.variable_order.size() != n)
            throw PreconditionError("variable order must cover the arity");
        order = cfg_.variable_order;
        std::vector<unsigned> image(n);
        for (unsigned level = 0; level < n; ++level) image[order[level]] = level;
        for (auto& f : formulas) f = rename_free(f, image, n + 1);
        polys.clear();
        for (const auto& f : formulas) collect_atom_polys(f, polys);
    }

    ProjectionMode mode = cfg_.projection;
    while (true) {
        ProjectionTower tower = build_projection_tower(polys, n, mode, false);
        Walker walker(tower, cfg_);
        CellDecomposition out;
        out.arity = n;
        out.variable_order = order;
        WalkHooks h;
        h.leaf = [&](const std::vector<AlgebraicNumber>& path, const std::vector<bool>& sectors,
                     const std::vector<unsigned>& word) {
            CellInfo info;
            info.index_word = word;
            info.dimension = 0;
            for (bool s : sectors) info.dimension += s ? 1 : 0;
            info.sample = path;
            for (const auto& f : formulas) info.truth.push_back(eval_cell_truth(f, path));
            out.cells.push_back(std::move(info));
            return false;
        };
        try {
            walker.walk(h);
        } catch (const WellOrientednessFailure&) {
            mode = ProjectionMode::Full;
            continue;
        }
        return out;
    }
}

int Engine::dimension(const DefinableSet& a) {
    if (a.arity == 0) return decide(a.formula) ? 0 : -1;
    CellDecomposition cad = build_cad({a});
    int dim = -1;
    for (const auto& c : cad.cells)
        if (c.truth[0]) dim = std::max(dim, static_cast<int>(c.dimension));
    return dim;
}

long Engine::euler_characteristic(const DefinableSet& a) {
    if (a.arity == 0) return decide(a.formula) ? 1 : 0;
    CellDecomposition cad = build_cad({a});
    long chi = 0;
    for (const auto& c : cad.cells)
        if (c.truth[0]) chi += (c.dimension % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<LinePiece> Engine::describe_line(const DefinableSet& a) {
    if (a.arity != 1) throw ArityMismatchError("describe_line needs arity 1");
    CellDecomposition cad = build_cad({a});
    // Cells alternate sector/section; reconstruct roots from section cells.
    std::vector<AlgebraicNumber> roots;
    for (const auto& c : cad.cells)
        if (c.index_word[0] % 2 == 0) roots.push_back(c.sample[0]);
    std::vector<LinePiece> out;
    const std::size_t cells = cad.cells.size();
    std::size_t i = 0;
    while (i < cells) {
        if (!cad.cells[i].truth[0]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < cells && cad.cells[j + 1].truth[0]) ++j;
        // Run [i, j]; 0-based cell k is a section iff k is odd.
        const bool left_closed = (i % 2 == 1);
        const bool right_closed = (j % 2 == 1);
        if (i == j && left_closed) {
            LinePiece p;
            p.is_point = true;
            p.point = roots[i / 2];
            out.push_back(p);
            i = j + 1;
            continue;
        }
        if (left_closed) {
            LinePiece p;
            p.is_point = true;
            p.point = roots[i / 2];
            out.push_back(p);
        }
        const std::size_t first_sector = left_closed ? i + 1 : i;
        const std::size_t last_sector = right_closed ? j - 1 : j;
        LinePiece iv;
        iv.is_point = false;
        if (first_sector > 0) iv.lo = roots[first_sector / 2 - 1];
        if (last_sector + 1 < cells) iv.hi = roots[last_sector / 2];
        out.push_back(iv);
        if (right_closed) {
            LinePiece p;
            p.is_point = true;
            p.point = roots[j / 2];
            out.push_back(p);
        }
        i = j + 1;
    }
    return out;
}

} // namespace tame
