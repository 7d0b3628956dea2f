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

#include "sets/setops.hpp"

#include <sstream>

#include "core/error.hpp"

namespace tame {

namespace {

std::vector<unsigned> all_vars(unsigned arity) {
    std::vector<unsigned> v(arity);
    for (unsigned i = 0; i < arity; ++i) v[i] = i;
    return v;
}

} // namespace

bool is_empty(Engine& eng, const DefinableSet& a) {
    return !eng.decide(f_exists_many(all_vars(a.arity), a.formula));
}

bool is_subset(Engine& eng, const DefinableSet& a, const DefinableSet& b) {
    if (a.arity != b.arity) throw ArityMismatchError("is_subset needs equal arities");
    return eng.decide(f_forall_many(all_vars(a.arity), f_implies(a.formula, b.formula)));
}

bool set_equal(Engine& eng, const DefinableSet& a, const DefinableSet& b) {
    if (a.arity != b.arity) throw ArityMismatchError("set_equal needs equal arities");
    return eng.decide(f_forall_many(all_vars(a.arity), f_iff(a.formula, b.formula)));
}

DefinableSet closure(Engine& eng, const DefinableSet& a) {
    return eng.qe_set(closure_formula(a));
}

DefinableSet interior(Engine& eng, const DefinableSet& a) {
    DefinableSet c = closure(eng, set_complement(a));
    return DefinableSet{a.arity, simplify(f_not(c.formula))};
}

DefinableSet relative_interior(Engine& eng, const DefinableSet& s, const DefinableSet& x) {
    if (s.arity != x.arity) throw ArityMismatchError("relative_interior needs equal arities");
    DefinableSet cl = closure(eng, set_difference(x, s));
    return DefinableSet{s.arity, simplify(f_and(s.formula, f_not(cl.formula)))};
}

bool is_closed(Engine& eng, const DefinableSet& a) {
    return is_subset(eng, closure(eng, a), a);
}

bool is_bounded(Engine& eng, const DefinableSet& a) {
    if (a.arity == 0) return true;
    const unsigned r = a.arity;
    std::vector<Formula> bounds;
    for (unsigned i = 0; i < a.arity; ++i) {
        Polynomial xi = Polynomial::variable(i);
        Polynomial rr = Polynomial::variable(r);
        bounds.push_back(f_atom(xi - rr, Rel::le));
        bounds.push_back(f_atom(-xi - rr, Rel::le));
    }
    Formula body = f_forall_many(all_vars(a.arity),
                                 f_implies(a.formula, f_and(std::move(bounds))));
    return eng.decide(f_exists(r, body));
}

bool is_polytope(Engine& eng, const DefinableSet& a) {
    return is_closed(eng, a) && is_bounded(eng, a);
}

int dimension(Engine& eng, const DefinableSet& a) { return eng.dimension(a); }

long euler_characteristic(Engine& eng, const DefinableSet& a) {
    return eng.euler_characteristic(a);
}

SetReport set_report(Engine& eng, const DefinableSet& a) {
    SetReport r;
    r.arity = a.arity;
    r.is_empty = is_empty(eng, a);
    r.is_closed = is_closed(eng, a);
    r.is_bounded = is_bounded(eng, a);
    r.is_polytope = r.is_closed && r.is_bounded;
    r.dimension = dimension(eng, a);
    r.euler = euler_characteristic(eng, a);
    return r;
}

std::string report_to_text(const SetReport& r) {
    std::ostringstream os;
    os << "arity=" << r.arity << "\n"
       << "empty=" << (r.is_empty ? "true" : "false") << "\n"
       << "closed=" << (r.is_closed ? "true" : "false") << "\n"
       << "bounded=" << (r.is_bounded ? "true" : "false") << "\n"
       << "polytope=" << (r.is_polytope ? "true" : "false") << "\n"
       << "dimension=" << r.dimension << "\n"
       << "euler=" << r.euler << "\n";
    return os.str();
}

} // namespace tame
