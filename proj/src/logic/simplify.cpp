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

#include "logic/simplify.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace tame {

namespace {

// Sign sets over {-1, 0, +1}; bit 0: negative, bit 1: zero, bit 2: positive.
constexpr unsigned kNeg = 1, kZero = 2, kPos = 4, kAll = 7;

unsigned rel_to_mask(Rel r) {
    switch (r) {
        case Rel::eq: return kZero;
        case Rel::neq: return kNeg | kPos;
        case Rel::lt: return kNeg;
        case Rel::le: return kNeg | kZero;
    }
    return kAll;
}

unsigned mirror_mask(unsigned m) {
    unsigned out = m & kZero;
    if (m & kNeg) out |= kPos;
    if (m & kPos) out |= kNeg;
    return out;
}

// Canonical key: positive-leading-coefficient primitive polynomial.  Returns
// the key and whether the atom's polynomial had to be negated to match.
std::pair<Polynomial, bool> atom_key(const Polynomial& p) {
    Polynomial prim = p.primitive_rational();
    // primitive_rational normalizes to a positive leading coefficient.
    const bool flipped = sign(p.terms().front().second) < 0;
    return {std::move(prim), flipped};
}

Formula mask_to_formula(const Polynomial& key, unsigned mask) {
    switch (mask & kAll) {
        case 0: return f_false();
        case kNeg: return f_atom(key, Rel::lt);
        case kZero: return f_atom(key, Rel::eq);
        case kPos: return f_atom(-key, Rel::lt);
        case kNeg | kZero: return f_atom(key, Rel::le);
        case kZero | kPos: return f_atom(-key, Rel::le);
        case kNeg | kPos: return f_atom(key, Rel::neq);
        default: return f_true();
    }
}

struct PolyKeyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        if (a.hash() != b.hash()) return a.hash() < b.hash();
        if (a == b) return false;
        // Rare hash collision: fall back to term-wise comparison.
        const auto &ta = a.terms(), &tb = b.terms();
        if (ta.size() != tb.size()) return ta.size() < tb.size();
        for (std::size_t i = 0; i < ta.size(); ++i) {
            if (!(ta[i].first == tb[i].first)) return ta[i].first < tb[i].first;
            if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
        }
        return false;
    }
};

// Merge atoms over a common polynomial inside an n-ary connective.
Formula merge_atoms(FKind kind, const std::vector<Formula>& kids) {
    const bool conj = kind == FKind::And;
    std::map<Polynomial, unsigned, PolyKeyLess> masks;
    std::vector<Formula> others;
    std::vector<Polynomial> order;
    for (const auto& k : kids) {
        if (k->kind != FKind::Atom) {
            others.push_back(k);
            continue;
        }
        auto [key, flipped] = atom_key(k->poly);
        unsigned m = rel_to_mask(k->rel);
        if (flipped) m = mirror_mask(m);
        auto it = masks.find(key);
        if (it == masks.end()) {
            masks.emplace(key, m);
            order.push_back(key);
        } else {
            it->second = conj ? (it->second & m) : (it->second | m);
        }
    }
    std::vector<Formula> out;
    for (const auto& key : order) out.push_back(mask_to_formula(key, masks.at(key)));
    out.insert(out.end(), others.begin(), others.end());
    return conj ? f_and(std::move(out)) : f_or(std::move(out));
}

std::vector<Formula> children_of(const Formula& f, FKind kind) {
    if (f->kind == kind) return f->kids;
    return {f};
}

Formula simplify_rec(const Formula& f);

// Shared handling for both quantifiers after the body is simplified.
Formula simplify_quantifier(FKind kind, unsigned var, const Formula& body) {
    const bool exists = kind == FKind::Exists;
    if (!free_vars(body).contains(var)) return body;

    // Distribute an existential over a disjunction (dually for universal).
    if (body->kind == (exists ? FKind::Or : FKind::And)) {
        std::vector<Formula> parts;
        for (const auto& k : body->kids)
            parts.push_back(simplify_quantifier(kind, var, k));
        return exists ? f_or(std::move(parts)) : f_and(std::move(parts));
    }

    // Miniscope: pull out the parts not using the variable.
    if (body->kind == (exists ? FKind::And : FKind::Or)) {
        std::vector<Formula> with, without;
        for (const auto& k : body->kids)
            (free_vars(k).contains(var) ? with : without).push_back(k);
        if (!without.empty()) {
            Formula inner = exists ? f_and(with) : f_or(with);
            Formula q = simplify_quantifier(kind, var, inner);
            without.push_back(q);
            return exists ? f_and(std::move(without)) : f_or(std::move(without));
        }
        // Distribute toward the quantifier-friendly normal form when that
        // may decouple the variable:  A v (B ^ C)  under a universal
        // becomes (A v B) ^ (A v C), and dually for an existential.  Kept
        // small by a size bound.
        if (body->kids.size() <= 8) {
            const FKind inner_kind = exists ? FKind::Or : FKind::And;
            for (std::size_t i = 0; i < body->kids.size(); ++i) {
                const Formula& k = body->kids[i];
                if (k->kind != inner_kind || k->kids.size() > 8) continue;
                std::vector<Formula> others;
                for (std::size_t j = 0; j < body->kids.size(); ++j)
                    if (j != i) others.push_back(body->kids[j]);
                std::vector<Formula> parts;
                for (const auto& piece : k->kids) {
                    std::vector<Formula> one = others;
                    one.push_back(piece);
                    parts.push_back(exists ? f_and(std::move(one)) : f_or(std::move(one)));
                }
                Formula distributed = exists ? f_or(std::move(parts)) : f_and(std::move(parts));
                return simplify_quantifier(kind, var, simplify_rec(distributed));
            }
        }
    }

    // Solved linear equation with nonzero constant coefficient.
    // Exists: (c v + r = 0) /\ rest  ->  rest[v := -r/c]
    // Forall: (c v + r != 0) \/ rest ->  rest[v := -r/c]
    {
        std::vector<Formula> kids = children_of(body, exists ? FKind::And : FKind::Or);
        const Rel key_rel = exists ? Rel::eq : Rel::neq;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const Formula& k = kids[i];
            if (k->kind != FKind::Atom || k->rel != key_rel) continue;
            if (k->poly.degree(var) != 1) continue;
            auto cs = k->poly.coeffs_in(var);
            if (!cs[1].is_constant()) continue;
            const Rational c = cs[1].constant_value();
            Polynomial term = cs[0] * Rational(Rational(-1) / c);
            std::vector<Formula> rest;
            for (std::size_t j = 0; j < kids.size(); ++j)
                if (j != i) rest.push_back(kids[j]);
            Formula rest_f = exists ? f_and(std::move(rest)) : f_or(std::move(rest));
            Formula substituted = substitute(rest_f, {{var, term}});
            return simplify_rec(substituted);
        }
    }

    return exists ? f_exists(var, body) : f_forall(var, body);
}

Formula simplify_rec(const Formula& f) {
    switch (f->kind) {
        case FKind::True:
        case FKind::False:
        case FKind::Atom: return f;
        case FKind::Not: {
            // NNF pushed negations to atoms already; this only remains above
            // quantifier-free non-atoms after folding, so re-normalize.
            return simplify_rec(to_nnf(f));
        }
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> kids;
            kids.reserve(f->kids.size());
            for (const auto& k : f->kids) kids.push_back(simplify_rec(k));
            Formula merged = merge_atoms(f->kind, kids);
            return merged;
        }
        case FKind::Exists:
        case FKind::Forall: {
            Formula body = simplify_rec(f->kids[0]);
            return simplify_quantifier(f->kind, f->var, body);
        }
    }
    return f;
}

} // namespace

Formula simplify(const Formula& f) { return simplify_rec(to_nnf(f)); }

Formula substitute_rational(const Formula& f, unsigned v, const Polynomial& num,
                            const Polynomial& den) {
    if (den.is_constant()) {
        Polynomial term = num * Rational(Rational(1) / den.constant_value());
        return substitute(f, {{v, term}});
    }
    switch (f->kind) {
        case FKind::True:
        case FKind::False: return f;
        case FKind::Atom: {
            const unsigned d = f->poly.degree(v);
            if (d == 0) return f;
            // q(v := num/den) * den^d, with one extra factor of den when d is
            // odd so that order relations stay sign-correct (den != 0 on the
            // guarded branch, so an even power is positive).
            auto cs = f->poly.coeffs_in(v);
            Polynomial acc;
            Polynomial num_pow = Polynomial::constant(Rational(1));
            std::vector<Polynomial> den_pows(d + 1);
            den_pows[0] = Polynomial::constant(Rational(1));
            for (unsigned k = 1; k <= d; ++k) den_pows[k] = den_pows[k - 1] * den;
            for (unsigned k = 0; k <= d; ++k) {
                acc = acc + cs[k] * num_pow * den_pows[d - k];
                if (k < d) num_pow = num_pow * num;
            }
            if ((f->rel == Rel::lt || f->rel == Rel::le) && d % 2 == 1) acc = acc * den;
            return f_atom(std::move(acc), f->rel);
        }
        case FKind::Not: return f_not(substitute_rational(f->kids[0], v, num, den));
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> ks;
            for (const auto& k : f->kids) ks.push_back(substitute_rational(k, v, num, den));
            return f->kind == FKind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
        }
        case FKind::Exists:
        case FKind::Forall: {
            assert(f->var != v && !num.uses_var(f->var) && !den.uses_var(f->var));
            Formula body = substitute_rational(f->kids[0], v, num, den);
            return f->kind == FKind::Exists ? f_exists(f->var, body) : f_forall(f->var, body);
        }
    }
    return f;
}

namespace {

Formula eliminate_rec(const Formula& f);

// Case-splitting elimination of one existential variable over a conjunction.
Formula eliminate_exists(unsigned var, Formula body) {
    body = eliminate_rec(body);
    if (!free_vars(body).contains(var)) return body;

    if (body->kind == FKind::Or) {
        std::vector<Formula> parts;
        for (const auto& k : body->kids) parts.push_back(eliminate_exists(var, k));
        return f_or(std::move(parts));
    }

    std::vector<Formula> kids = children_of(body, FKind::And);
    std::vector<Formula> with, without;
    for (const auto& k : kids)
        (free_vars(k).contains(var) ? with : without).push_back(k);

    // Find a linear equation in var among the conjuncts.
    for (std::size_t i = 0; i < with.size(); ++i) {
        const Formula& k = with[i];
        if (k->kind != FKind::Atom || k->rel != Rel::eq) continue;
        if (k->poly.degree(var) != 1) continue;
        auto cs = k->poly.coeffs_in(var);
        if (cs[1].uses_var(var)) continue;
        std::vector<Formula> rest;
        for (std::size_t j = 0; j < with.size(); ++j)
            if (j != i) rest.push_back(with[j]);
        Formula rest_f = f_and(rest);
        const Polynomial& c = cs[1];
        Polynomial num = -cs[0];
        if (c.is_constant()) {
            Formula sub = substitute_rational(rest_f, var, num, c);
            without.push_back(eliminate_rec(sub));
            return f_and(std::move(without));
        }
        // Split on the coefficient: either c != 0 and the equation solves
        // for var, or c = 0 and the equation degenerates to -num = 0.
        Formula solved = f_and(f_atom(c, Rel::neq),
                               eliminate_rec(substitute_rational(rest_f, var, num, c)));
        Formula degenerate =
            f_and({f_atom(c, Rel::eq), f_atom(num, Rel::eq), eliminate_exists(var, rest_f)});
        without.push_back(f_or(solved, degenerate));
        return f_and(std::move(without));
    }

    without.push_back(f_exists(var, f_and(std::move(with))));
    return f_and(std::move(without));
}

Formula eliminate_rec(const Formula& f) {
    switch (f->kind) {
        case FKind::True:
        case FKind::False:
        case FKind::Atom: return f;
        case FKind::Not: return eliminate_rec(to_nnf(f));
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> ks;
            for (const auto& k : f->kids) ks.push_back(eliminate_rec(k));
            return merge_atoms(f->kind, ks);
        }
        case FKind::Exists: return eliminate_exists(f->var, f->kids[0]);
        case FKind::Forall: {
            // Dualize: forall v . phi == not exists v . not phi.
            Formula inner = eliminate_exists(f->var, to_nnf(f_not(f->kids[0])));
            return simplify(f_not(inner));
        }
    }
    return f;
}

} // namespace

Formula eliminate_solved(const Formula& f, unsigned fresh_from) {
    Formula renamed = rename_bound_apart(simplify(f), fresh_from);
    Formula out = eliminate_rec(renamed);
    return simplify(out);
}

} // namespace tame
