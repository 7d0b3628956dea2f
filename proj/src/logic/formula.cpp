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

#include "logic/formula.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "core/error.hpp"

namespace tame {

Rel negate_rel(Rel r) {
    switch (r) {
        case Rel::eq: return Rel::neq;
        case Rel::neq: return Rel::eq;
        case Rel::lt: return Rel::le; // not(p<0) == -p<=0, caller negates poly
        case Rel::le: return Rel::lt;
    }
    return Rel::eq;
}

std::string rel_symbol(Rel r) {
    switch (r) {
        case Rel::eq: return "=";
        case Rel::neq: return "!=";
        case Rel::lt: return "<";
        case Rel::le: return "<=";
    }
    return "?";
}

static Formula f_make(FormulaNode&& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b9u;
    hash_combine(h, n.poly.hash());
    hash_combine(h, static_cast<std::size_t>(n.rel));
    hash_combine(h, n.var);
    for (const auto& k : n.kids) hash_combine(h, k->hash());
    n.hash_ = h;
    return std::make_shared<FormulaNode>(std::move(n));
}

Formula f_true() {
    static Formula t = [] {
        FormulaNode n;
        n.kind = FKind::True;
        return f_make(std::move(n));
    }();
    return t;
}

Formula f_false() {
    static Formula t = [] {
        FormulaNode n;
        n.kind = FKind::False;
        return f_make(std::move(n));
    }();
    return t;
}

namespace {

bool rel_holds(Rel r, int s) {
    switch (r) {
        case Rel::eq: return s == 0;
        case Rel::neq: return s != 0;
        case Rel::lt: return s < 0;
        case Rel::le: return s <= 0;
    }
    return false;
}

// Positive rational scale making coefficients integral with content one.
Polynomial scale_positive_primitive(const Polynomial& p) {
    Polynomial prim = p.primitive_rational(); // positive leading coefficient
    // primitive_rational may have flipped the sign; undo for order relations.
    // Detect: compare leading terms.
    if (p.terms().front().second < 0 && prim.terms().front().second > 0) return -prim;
    return prim;
}

} // namespace

Formula f_atom(Polynomial p, Rel rel) {
    if (p.is_constant()) {
        return rel_holds(rel, sign(p.constant_value())) ? f_true() : f_false();
    }
    if (rel == Rel::eq || rel == Rel::neq) {
        p = p.primitive_rational(); // canonical sign for symmetric relations
    } else {
        p = scale_positive_primitive(p);
    }
    FormulaNode n;
    n.kind = FKind::Atom;
    n.poly = std::move(p);
    n.rel = rel;
    return f_make(std::move(n));
}

Formula f_cmp(const Polynomial& lhs, Rel rel, const Polynomial& rhs) {
    return f_atom(lhs - rhs, rel);
}

Formula f_gt(const Polynomial& lhs, const Polynomial& rhs) { return f_atom(rhs - lhs, Rel::lt); }
Formula f_ge(const Polynomial& lhs, const Polynomial& rhs) { return f_atom(rhs - lhs, Rel::le); }

Formula f_not(const Formula& f) {
    switch (f->kind) {
        case FKind::True: return f_false();
        case FKind::False: return f_true();
        case FKind::Not: return f->kids[0];
        case FKind::Atom:
            switch (f->rel) {
                case Rel::eq: return f_atom(f->poly, Rel::neq);
                case Rel::neq: return f_atom(f->poly, Rel::eq);
                case Rel::lt: return f_atom(-f->poly, Rel::le);
                case Rel::le: return f_atom(-f->poly, Rel::lt);
            }
            break;
        default: break;
    }
    FormulaNode n;
    n.kind = FKind::Not;
    n.kids = {f};
    return f_make(std::move(n));
}

namespace {

Formula build_nary(FKind kind, std::vector<Formula> fs) {
    const bool is_and = kind == FKind::And;
    std::vector<Formula> flat;
    for (auto& f : fs) {
        if (f->kind == kind) {
            flat.insert(flat.end(), f->kids.begin(), f->kids.end());
        } else if (f->kind == (is_and ? FKind::True : FKind::False)) {
            continue;
        } else if (f->kind == (is_and ? FKind::False : FKind::True)) {
            return is_and ? f_false() : f_true();
        } else {
            flat.push_back(f);
        }
    }
    // Deduplicate structurally, keeping first-seen order for readability.
    std::vector<Formula> uniq;
    for (auto& f : flat) {
        bool dup = false;
        for (auto& u : uniq)
            if (f_equal(f, u)) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(f);
    }
    if (uniq.empty()) return is_and ? f_true() : f_false();
    if (uniq.size() == 1) return uniq[0];
    FormulaNode n;
    n.kind = kind;
    n.kids = std::move(uniq);
    return f_make(std::move(n));
}

} // namespace

Formula f_and(std::vector<Formula> fs) { return build_nary(FKind::And, std::move(fs)); }
Formula f_or(std::vector<Formula> fs) { return build_nary(FKind::Or, std::move(fs)); }
Formula f_and(const Formula& a, const Formula& b) { return f_and(std::vector<Formula>{a, b}); }
Formula f_or(const Formula& a, const Formula& b) { return f_or(std::vector<Formula>{a, b}); }
Formula f_implies(const Formula& a, const Formula& b) { return f_or(f_not(a), b); }
Formula f_iff(const Formula& a, const Formula& b) {
    return f_and(f_implies(a, b), f_implies(b, a));
}

Formula f_exists(unsigned var, const Formula& f) {
    if (is_constant_formula(f)) return f;
    if (!free_vars(f).contains(var)) return f;
    FormulaNode n;
    n.kind = FKind::Exists;
    n.var = var;
    n.kids = {f};
    return f_make(std::move(n));
}

Formula f_forall(unsigned var, const Formula& f) {
    if (is_constant_formula(f)) return f;
    if (!free_vars(f).contains(var)) return f;
    FormulaNode n;
    n.kind = FKind::Forall;
    n.var = var;
    n.kids = {f};
    return f_make(std::move(n));
}

Formula f_exists_many(const std::vector<unsigned>& vars, Formula f) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = f_exists(*it, f);
    return f;
}

Formula f_forall_many(const std::vector<unsigned>& vars, Formula f) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = f_forall(*it, f);
    return f;
}

bool f_equal(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return true;
    if (a->hash() != b->hash()) return false;
    if (a->kind != b->kind || a->var != b->var || a->rel != b->rel) return false;
    if (a->kind == FKind::Atom && !(a->poly == b->poly)) return false;
    if (a->kids.size() != b->kids.size()) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!f_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

bool is_quantifier_free(const Formula& f) {
    if (f->kind == FKind::Exists || f->kind == FKind::Forall) return false;
    for (const auto& k : f->kids)
        if (!is_quantifier_free(k)) return false;
    return true;
}

bool is_constant_formula(const Formula& f) {
    return f->kind == FKind::True || f->kind == FKind::False;
}

namespace {

void free_vars_rec(const Formula& f, std::set<unsigned>& bound, std::set<unsigned>& out) {
    switch (f->kind) {
        case FKind::Atom: {
            for (unsigned v = 0; v < f->poly.var_bound(); ++v)
                if (f->poly.uses_var(v) && !bound.contains(v)) out.insert(v);
            break;
        }
        case FKind::Exists:
        case FKind::Forall: {
            const bool already = bound.contains(f->var);
            bound.insert(f->var);
            free_vars_rec(f->kids[0], bound, out);
            if (!already) bound.erase(f->var);
            break;
        }
        default:
            for (const auto& k : f->kids) free_vars_rec(k, bound, out);
    }
}

} // namespace

std::set<unsigned> free_vars(const Formula& f) {
    std::set<unsigned> bound, out;
    free_vars_rec(f, bound, out);
    return out;
}

unsigned var_bound_all(const Formula& f) {
    unsigned b = f->kind == FKind::Atom ? f->poly.var_bound() : 0;
    if (f->kind == FKind::Exists || f->kind == FKind::Forall) b = std::max(b, f->var + 1);
    for (const auto& k : f->kids) b = std::max(b, var_bound_all(k));
    return b;
}

bool evaluate(const Formula& f, std::span<const AlgebraicNumber> point) {
    switch (f->kind) {
        case FKind::True: return true;
        case FKind::False: return false;
        case FKind::Atom: return rel_holds(f->rel, sign_at(f->poly, point));
        case FKind::Not: return !evaluate(f->kids[0], point);
        case FKind::And:
            for (const auto& k : f->kids)
                if (!evaluate(k, point)) return false;
            return true;
        case FKind::Or:
            for (const auto& k : f->kids)
                if (evaluate(k, point)) return true;
            return false;
        default: throw QuantifierPresentError();
    }
}

Formula substitute(const Formula& f,
                   const std::vector<std::pair<unsigned, Polynomial>>& subst) {
    switch (f->kind) {
        case FKind::True:
        case FKind::False: return f;
        case FKind::Atom: {
            Polynomial p = f->poly;
            for (const auto& [v, t] : subst) p = p.substitute(v, t);
            return f_atom(std::move(p), f->rel);
        }
        case FKind::Not: return f_not(substitute(f->kids[0], subst));
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> ks;
            ks.reserve(f->kids.size());
            for (const auto& k : f->kids) ks.push_back(substitute(k, subst));
            return f->kind == FKind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
        }
        case FKind::Exists:
        case FKind::Forall: {
            std::vector<std::pair<unsigned, Polynomial>> inner;
            for (const auto& [v, t] : subst) {
                if (v == f->var) continue;
                assert(!t.uses_var(f->var)); // callers rename bound apart
                inner.emplace_back(v, t);
            }
            Formula body = substitute(f->kids[0], inner);
            return f->kind == FKind::Exists ? f_exists(f->var, body) : f_forall(f->var, body);
        }
    }
    return f;
}

namespace {

Formula rename_rec(const Formula& f, std::vector<unsigned> image, unsigned& fresh) {
    switch (f->kind) {
        case FKind::True:
        case FKind::False: return f;
        case FKind::Atom: {
            std::vector<unsigned> img(image);
            unsigned vb = f->poly.var_bound();
            if (img.size() < vb) {
                unsigned old = static_cast<unsigned>(img.size());
                img.resize(vb);
                for (unsigned i = old; i < vb; ++i) img[i] = i;
            }
            return f_atom(f->poly.rename_vars(img), f->rel);
        }
        case FKind::Not: return f_not(rename_rec(f->kids[0], image, fresh));
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> ks;
            for (const auto& k : f->kids) ks.push_back(rename_rec(k, image, fresh));
            return f->kind == FKind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
        }
        case FKind::Exists:
        case FKind::Forall: {
            unsigned nv = fresh++;
            std::vector<unsigned> img(image);
            if (img.size() <= f->var) {
                unsigned old = static_cast<unsigned>(img.size());
                img.resize(f->var + 1);
                for (unsigned i = old; i <= f->var; ++i) img[i] = i;
            }
            img[f->var] = nv;
            Formula body = rename_rec(f->kids[0], img, fresh);
            return f->kind == FKind::Exists ? f_exists(nv, body) : f_forall(nv, body);
        }
    }
    return f;
}

} // namespace

Formula rename_free(const Formula& f, const std::vector<unsigned>& image, unsigned fresh_from) {
    unsigned fresh = fresh_from;
    return rename_rec(f, image, fresh);
}

Formula rename_bound_apart(const Formula& f, unsigned fresh_from) {
    std::vector<unsigned> identity;
    unsigned fresh = fresh_from;
    return rename_rec(f, identity, fresh);
}

Formula to_nnf(const Formula& f) {
    switch (f->kind) {
        case FKind::Not: {
            const Formula& g = f->kids[0];
            switch (g->kind) {
                case FKind::True: return f_false();
                case FKind::False: return f_true();
                case FKind::Atom: return f_not(g); // absorbed into the atom
                case FKind::Not: return to_nnf(g->kids[0]);
                case FKind::And: {
                    std::vector<Formula> ks;
                    for (const auto& k : g->kids) ks.push_back(to_nnf(f_not(k)));
                    return f_or(std::move(ks));
                }
                case FKind::Or: {
                    std::vector<Formula> ks;
                    for (const auto& k : g->kids) ks.push_back(to_nnf(f_not(k)));
                    return f_and(std::move(ks));
                }
                case FKind::Exists: return f_forall(g->var, to_nnf(f_not(g->kids[0])));
                case FKind::Forall: return f_exists(g->var, to_nnf(f_not(g->kids[0])));
            }
            return f;
        }
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> ks;
            for (const auto& k : f->kids) ks.push_back(to_nnf(k));
            return f->kind == FKind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
        }
        case FKind::Exists: return f_exists(f->var, to_nnf(f->kids[0]));
        case FKind::Forall: return f_forall(f->var, to_nnf(f->kids[0]));
        default: return f;
    }
}

namespace {

void print_rec(const Formula& f, std::ostringstream& os) {
    switch (f->kind) {
        case FKind::True: os << "true"; break;
        case FKind::False: os << "false"; break;
        case FKind::Atom:
            os << f->poly.to_string() << " " << rel_symbol(f->rel) << " 0";
            break;
        case FKind::Not:
            os << "~(";
            print_rec(f->kids[0], os);
            os << ")";
            break;
        case FKind::And:
        case FKind::Or: {
            const char* op = f->kind == FKind::And ? " /\\ " : " \\/ ";
            for (std::size_t i = 0; i < f->kids.size(); ++i) {
                if (i) os << op;
                os << "(";
                print_rec(f->kids[i], os);
                os << ")";
            }
            break;
        }
        case FKind::Exists:
        case FKind::Forall:
            os << (f->kind == FKind::Exists ? "E x" : "A x") << (f->var + 1) << ". (";
            print_rec(f->kids[0], os);
            os << ")";
            break;
    }
}

} // namespace

std::string to_text(const Formula& f) {
    std::ostringstream os;
    print_rec(f, os);
    return os.str();
}

} // namespace tame
