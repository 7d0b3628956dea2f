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

#include "realalg/algebraic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "core/error.hpp"
#include "realalg/isolate.hpp"

namespace tame {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::pow(unsigned e) const {
    RatInterval r = RatInterval::point(Rational(1));
    RatInterval b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

namespace {

std::vector<Integer> integer_coeffs(const Polynomial& p) {
    Polynomial q = p.primitive_rational();
    std::vector<Integer> cs(q.degree(0) + 1, Integer(0));
    for (const auto& t : q.terms()) {
        assert(t.second.get_den() == 1);
        cs[t.first.deg(0)] = Integer(t.second.get_num());
    }
    return cs;
}

int sign_at_rational(const std::vector<Integer>& c, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
    return sign(acc);
}

Polynomial from_integer_coeffs(const std::vector<Integer>& c) {
    Polynomial p;
    for (std::size_t i = 0; i < c.size(); ++i)
        p = p + Polynomial::term(Monomial::var(0, static_cast<unsigned>(i)), Rational(c[i]));
    return p;
}

} // namespace

AlgebraicNumber AlgebraicNumber::trusted_root(Polynomial sf_poly, Rational lo, Rational hi) {
    AlgebraicNumber a;
    auto st = std::make_shared<State>();
    st->poly = std::move(sf_poly);
    st->coeffs = integer_coeffs(st->poly);
    st->lo = std::move(lo);
    st->hi = std::move(hi);
    a.st_ = std::move(st);
    a.rat_ = Rational(0);
    return a;
}

void AlgebraicNumber::refine_once() const {
    assert(st_);
    std::lock_guard<std::mutex> g(st_->mu);
    const Rational mid = (st_->lo + st_->hi) / 2;
    // mid cannot be the root: the unique root in the interval is irrational.
    const int sm = sign_at_rational(st_->coeffs, mid);
    const int slo = sign_at_rational(st_->coeffs, st_->lo);
    assert(sm != 0 && slo != 0);
    if (sm == slo)
        st_->lo = mid;
    else
        st_->hi = mid;
}

RatInterval AlgebraicNumber::enclosure() const {
    if (!st_) return RatInterval::point(rat_);
    std::lock_guard<std::mutex> g(st_->mu);
    return {st_->lo, st_->hi};
}

RatInterval AlgebraicNumber::refined(const Rational& eps) const {
    if (!st_) return RatInterval::point(rat_);
    while (true) {
        RatInterval e = enclosure();
        if (e.hi - e.lo < eps) return e;
        refine_once();
    }
}

AlgebraicNumber AlgebraicNumber::make_root(const Polynomial& defining, const Rational& lo,
                                           const Rational& hi) {
    if (defining.is_zero()) throw ZeroPolynomialError();
    if (lo >= hi) throw PreconditionError("isolating interval is empty");
    std::vector<AlgebraicNumber> roots = real_roots(defining);
    const AlgebraicNumber* found = nullptr;
    for (const auto& r : roots) {
        // Root in (lo, hi)?
        RatInterval e = r.enclosure();
        while (!(e.lo > lo && e.hi < hi) && !(e.hi <= lo) && !(e.lo >= hi)) {
            if (r.is_rational()) break;
            r.refine_once();
            e = r.enclosure();
        }
        bool inside;
        if (r.is_rational())
            inside = r.rational_value() > lo && r.rational_value() < hi;
        else
            inside = e.lo > lo && e.hi < hi;
        if (inside) {
            if (found) throw PreconditionError("interval isolates more than one root");
            found = &r;
        }
    }
    if (!found) throw PreconditionError("interval contains no root");
    return *found;
}

std::vector<AlgebraicNumber> AlgebraicNumber::real_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.var_bound() > 1)
        throw PreconditionError("root isolation requires a univariate polynomial");
    if (p.is_constant()) return {};
    if (p.degree(0) == 1) {
        const auto cs1 = p.coeffs_in(0);
        Rational root = -cs1[0].constant_value() / cs1[1].constant_value();
        return {AlgebraicNumber(std::move(root))};
    }
    Polynomial sf = squarefree_part(p, 0);
    if (sf.degree(0) == 1) {
        const auto cs1 = sf.coeffs_in(0);
        Rational root = -cs1[0].constant_value() / cs1[1].constant_value();
        return {AlgebraicNumber(std::move(root))};
    }
    if (sf.degree(0) == 2) {
        // Quadratic with rational roots resolves directly; irrational roots
        // fall through to the generic isolation.
        const auto cs2 = sf.coeffs_in(0);
        const Rational a = cs2[2].constant_value();
        const Rational b = cs2.size() > 1 ? cs2[1].constant_value() : Rational(0);
        const Rational c = cs2[0].constant_value();
        const Rational disc = b * b - 4 * a * c;
        const int ds = sign(disc);
        if (ds < 0) return {};
        if (ds == 0) return {AlgebraicNumber(-b / (2 * a))};
        Integer dn = disc.get_num(), dd = disc.get_den();
        if (mpz_perfect_square_p(dn.get_mpz_t()) && mpz_perfect_square_p(dd.get_mpz_t())) {
            Integer sn, sd;
            mpz_sqrt(sn.get_mpz_t(), dn.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), dd.get_mpz_t());
            Rational sq(sn, sd);
            sq.canonicalize();
            Rational r1 = (-b - sq) / (2 * a), r2 = (-b + sq) / (2 * a);
            if (r1 > r2) std::swap(r1, r2);
            return {AlgebraicNumber(r1), AlgebraicNumber(r2)};
        }
    }
    std::vector<Integer> cs = integer_coeffs(sf);
    std::vector<IsolatedRoot> iso = isolate_squarefree(cs);
    std::vector<AlgebraicNumber> out;
    out.reserve(iso.size());

    // Rational roots have denominator dividing the leading coefficient; once
    // an interval is narrower than 1/lc^2 it contains at most one such
    // rational, and the simplest rational in the interval finds it.
    const Integer lead = abs(cs.back());
    Rational width_cap = Rational(1, lead * lead + 1);

    for (const auto& r : iso) {
        if (r.exact) {
            out.push_back(AlgebraicNumber(r.value));
            continue;
        }
        Rational lo = r.lo, hi = r.hi;
        bool emitted = false;
        while (hi - lo >= width_cap) {
            const Rational mid = (lo + hi) / 2;
            const int sm = sign_at_rational(cs, mid);
            if (sm == 0) {
                out.push_back(AlgebraicNumber(mid));
                emitted = true;
                break;
            }
            if (sm == sign_at_rational(cs, lo))
                lo = mid;
            else
                hi = mid;
        }
        if (emitted) continue;
        const Rational simplest = simplest_rational_between(lo, hi);
        if (Integer(simplest.get_den()) <= lead && sign_at_rational(cs, simplest) == 0) {
            out.push_back(AlgebraicNumber(simplest));
            continue;
        }
        out.push_back(trusted_root(sf, lo, hi));
    }
    return out;
}

Polynomial AlgebraicNumber::defining() const {
    if (st_) return st_->poly;
    // v*x - u
    return Polynomial::term(Monomial::var(0), Rational(rat_.get_den())) -
           Polynomial::constant(Rational(rat_.get_num()));
}

std::pair<Rational, Rational> AlgebraicNumber::interval() const {
    if (!st_) return {rat_ - 1, rat_ + 1};
    RatInterval e = enclosure();
    return {e.lo, e.hi};
}

int AlgebraicNumber::sgn() const {
    if (!st_) return sign(rat_);
    // Irrational, hence nonzero; refine until zero is excluded.
    while (true) {
        RatInterval e = enclosure();
        if (sign(e.lo) > 0) return 1;
        if (sign(e.hi) < 0) return -1;
        refine_once();
    }
}

namespace {

// Separate enclosures until the order is visible.  Only valid for a != b.
int compare_by_refinement(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    while (true) {
        RatInterval ea = a.enclosure();
        RatInterval eb = b.enclosure();
        if (ea.hi < eb.lo) return -1;
        if (eb.hi < ea.lo) return 1;
        if (!a.is_rational()) a.refined((ea.hi - ea.lo) / 2);
        if (!b.is_rational()) b.refined((eb.hi - eb.lo) / 2);
    }
}

// Index of the unique root of `roots` lying in the open interval enclosed by
// x's isolating interval, requiring that x itself is one of the roots.
std::size_t locate_among_roots(const AlgebraicNumber& x,
                               const std::vector<AlgebraicNumber>& roots) {
    while (true) {
        RatInterval ex = x.enclosure();
        std::size_t hits = 0, last = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            RatInterval er = roots[i].enclosure();
            if (!er.disjoint(ex)) {
                ++hits;
                last = i;
            }
        }
        if (hits == 1) return last;
        x.refined((ex.hi - ex.lo) / 2);
        for (const auto& r : roots) {
            RatInterval er = r.enclosure();
            if (!r.is_rational()) r.refined((er.hi - er.lo) / 2);
        }
    }
}

} // namespace

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational())
        return a.rat_ < b.rat_ ? -1 : (a.rat_ == b.rat_ ? 0 : 1);
    if (a.st_ && b.st_ && a.st_ == b.st_) return 0;
    if (a.is_rational() != b.is_rational()) {
        // An irrational never equals a rational; refinement separates them.
        return compare_by_refinement(a, b);
    }

    // Both irrational with distinct states.  Equal values force a common
    // root of the defining polynomials, hence of their gcd.
    Polynomial g = poly_gcd(a.st_->poly, b.st_->poly);
    if (!g.is_constant()) {
        std::vector<Integer> gc = integer_coeffs(g);
        auto is_g_root = [&](const State& s) {
            std::lock_guard<std::mutex> lk(s.mu);
            // The interval holds one root of s.poly and g divides s.poly, so
            // a sign change of g pins that root as a g-root.
            return sign_at_rational(gc, s.lo) * sign_at_rational(gc, s.hi) < 0;
        };
        if (is_g_root(*a.st_) && is_g_root(*b.st_)) {
            std::vector<AlgebraicNumber> roots = real_roots(g);
            std::size_t ia = locate_among_roots(a, roots);
            std::size_t ib = locate_among_roots(b, roots);
            if (ia == ib) return 0;
            return ia < ib ? -1 : 1;
        }
    }
    return compare_by_refinement(a, b);
}

namespace {

// Completes a resultant-based arithmetic operation: the result is a root of
// `candidates_poly`; narrow the operand enclosures until exactly one root
// candidate remains in the interval-arithmetic image.
AlgebraicNumber pick_root(const Polynomial& candidates_poly,
                          const std::function<RatInterval()>& image) {
    std::vector<AlgebraicNumber> roots = AlgebraicNumber::real_roots(candidates_poly);
    assert(!roots.empty());
    while (true) {
        RatInterval img = image();
        std::size_t hits = 0, last = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            RatInterval er = roots[i].enclosure();
            if (!er.disjoint(img)) {
                ++hits;
                last = i;
            }
        }
        if (hits == 1) return roots[last];
        for (const auto& r : roots) {
            if (r.is_rational()) continue;
            RatInterval er = r.enclosure();
            r.refined((er.hi - er.lo) / 2);
        }
    }
}

} // namespace

AlgebraicNumber AlgebraicNumber::operator-() const {
    if (!st_) return AlgebraicNumber(-rat_);
    // p(-x), mirrored interval.
    Polynomial neg = st_->poly.substitute(0, -Polynomial::variable(0));
    RatInterval e = enclosure();
    return trusted_root(neg.primitive_rational(), -e.hi, -e.lo);
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
    if (!st_ && !o.st_) return AlgebraicNumber(rat_ + o.rat_);
    if (!st_ || !o.st_) {
        const AlgebraicNumber& alg = st_ ? *this : o;
        const Rational& r = st_ ? o.rat_ : rat_;
        if (sign(r) == 0) return alg;
        // q(x) = p(x - r)
        Polynomial shifted = alg.st_->poly.substitute(
            0, Polynomial::variable(0) - Polynomial::constant(r));
        RatInterval e = alg.enclosure();
        return trusted_root(shifted.primitive_rational(), e.lo + r, e.hi + r);
    }
    // Res_y(p_a(y), p_b(x - y)) kills y = a with x - y = b, so x = a + b.
    Polynomial pa_y = st_->poly.rename_vars({1});
    Polynomial pb_xy = o.st_->poly.substitute(0, Polynomial::variable(0) - Polynomial::variable(1));
    Polynomial res = resultant(pa_y, pb_xy, 1);
    Polynomial sf = squarefree_part(res, 0);
    const AlgebraicNumber a = *this, b = o;
    Rational eps(1);
    return pick_root(sf, [a, b, &eps]() {
        eps = eps / 2;
        return a.refined(eps) + b.refined(eps);
    });
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const { return *this + (-o); }

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
    if (!st_ && !o.st_) return AlgebraicNumber(rat_ * o.rat_);
    if (!st_ || !o.st_) {
        const AlgebraicNumber& alg = st_ ? *this : o;
        const Rational& r = st_ ? o.rat_ : rat_;
        if (sign(r) == 0) return AlgebraicNumber(Rational(0));
        if (r == 1) return alg;
        // q(x) = p(x / r)
        Polynomial scaled = alg.st_->poly.substitute(
            0, Polynomial::variable(0) * Rational(Rational(1) / r));
        RatInterval e = alg.enclosure();
        Rational lo = e.lo * r, hi = e.hi * r;
        if (sign(r) < 0) std::swap(lo, hi);
        return trusted_root(scaled.primitive_rational(), lo, hi);
    }
    // Res_y(p_a(y), y^m p_b(x/y)) kills y = a with x = a*b.
    Polynomial pa_y = st_->poly.rename_vars({1});
    Polynomial hom;
    {
        const auto bc = o.st_->poly.coeffs_in(0);
        const unsigned m = static_cast<unsigned>(bc.size() - 1);
        for (unsigned k = 0; k < bc.size(); ++k) {
            Monomial mono = Monomial::var(0, k) * Monomial::var(1, m - k);
            hom = hom + Polynomial::term(mono, bc[k].constant_value());
        }
    }
    Polynomial res = resultant(pa_y, hom, 1);
    Polynomial sf = squarefree_part(res, 0);
    const AlgebraicNumber a = *this, b = o;
    Rational eps(1);
    return pick_root(sf, [a, b, &eps]() {
        eps = eps / 2;
        return a.refined(eps) * b.refined(eps);
    });
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const {
    if (o.sgn() == 0) throw DivisionByZeroError();
    if (!o.st_) return *this * AlgebraicNumber(Rational(1) / o.rat_);
    // Inverse of an irrational root: reversed coefficients; the enclosure
    // must first exclude zero (it does: the value is nonzero).
    Polynomial rev;
    {
        const auto c = o.st_->poly.coeffs_in(0);
        const unsigned m = static_cast<unsigned>(c.size() - 1);
        for (unsigned k = 0; k < c.size(); ++k)
            rev = rev + Polynomial::term(Monomial::var(0, m - k), c[k].constant_value());
    }
    RatInterval e = o.enclosure();
    while (e.contains_zero()) {
        o.refined((e.hi - e.lo) / 2);
        e = o.enclosure();
    }
    AlgebraicNumber inv = trusted_root(rev.primitive_rational(),
                                       Rational(1) / e.hi, Rational(1) / e.lo);
    return *this * inv;
}

int AlgebraicNumber::sign_of_univariate(const Polynomial& q) const {
    if (q.is_zero()) return 0;
    if (!st_) return sign(q.evaluate({rat_}));
    // Exact zero test: q(alpha) == 0 iff gcd(p, q) has a root in the
    // isolating interval (the interval holds exactly one root of p).
    Polynomial g = poly_gcd(st_->poly, q);
    if (!g.is_constant()) {
        std::vector<Integer> gc = integer_coeffs(g);
        RatInterval e = enclosure();
        if (sign_at_rational(gc, e.lo) * sign_at_rational(gc, e.hi) < 0) return 0;
    }
    // Nonzero: separate the enclosure from every root of q.
    std::vector<AlgebraicNumber> qroots = real_roots(q);
    std::vector<Rational> qr;
    while (true) {
        RatInterval e = enclosure();
        bool clear = true;
        for (const auto& r : qroots) {
            RatInterval er = r.enclosure();
            if (!er.disjoint(e)) {
                clear = false;
                if (!r.is_rational()) r.refined((er.hi - er.lo) / 2);
            }
        }
        if (clear) {
            // Constant sign on [lo, hi]; endpoints are rational.
            std::vector<Integer> qc = integer_coeffs(q);
            int s = sign_at_rational(qc, e.lo);
            assert(s == sign_at_rational(qc, e.hi) && s != 0);
            return s;
        }
        refine_once();
    }
}

std::string AlgebraicNumber::decimal(unsigned digits) const {
    Rational eps(1);
    for (unsigned i = 0; i <= digits; ++i) eps /= 10;
    RatInterval e = refined(eps);
    return decimal_string((e.lo + e.hi) / 2, digits);
}

std::string AlgebraicNumber::to_string() const {
    if (!st_) return tame::to_string(rat_);
    RatInterval e = enclosure();
    return "root of " + st_->poly.to_string() + " in (" + tame::to_string(e.lo) + ", " +
           tame::to_string(e.hi) + ")";
}

RatInterval interval_evaluate(const Polynomial& p, std::span<const RatInterval> box) {
    RatInterval acc = RatInterval::point(Rational(0));
    for (const auto& t : p.terms()) {
        RatInterval term = RatInterval::point(t.second);
        const auto& ex = t.first.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            assert(i < box.size());
            term = term * box[i].pow(ex[i]);
        }
        acc = acc + term;
    }
    return acc;
}

int sign_at(const Polynomial& p, std::span<const AlgebraicNumber> point) {
    if (p.is_zero()) return 0;
    // Substitute rational coordinates exactly.
    Polynomial q = p;
    std::vector<unsigned> alg_vars;
    for (unsigned v = 0; v < q.var_bound(); ++v) {
        if (!q.uses_var(v)) continue;
        assert(v < point.size());
        if (point[v].is_rational())
            q = q.evaluate_at(v, point[v].rational_value());
        else
            alg_vars.push_back(v);
    }
    if (q.is_constant()) return sign(q.constant_value());

    if (alg_vars.size() == 1) {
        const unsigned v = alg_vars[0];
        Polynomial uni = v == 0 ? q : q.rename_vars([&] {
            std::vector<unsigned> img(q.var_bound());
            for (unsigned i = 0; i < img.size(); ++i) img[i] = i;
            img[v] = 0;
            return img;
        }());
        return point[v].sign_of_univariate(uni);
    }

    // Several irrational coordinates: eliminate them one at a time with
    // resultants against the defining polynomials; the value is a root of
    // the final univariate polynomial, pinned down by interval refinement.
    const unsigned tvar = std::max<unsigned>(q.var_bound(), static_cast<unsigned>(point.size()));
    Polynomial g = Polynomial::variable(tvar) - q;
    for (unsigned v : alg_vars) {
        Polynomial pv = point[v].defining().rename_vars({v});
        g = resultant(pv, g, v);
    }
    // g is univariate in tvar; move to variable 0.
    std::vector<unsigned> img(tvar + 1, 0);
    img[tvar] = 0;
    Polynomial uni = g.rename_vars(img);
    Polynomial sf = squarefree_part(uni, 0);
    std::vector<AlgebraicNumber> roots = AlgebraicNumber::real_roots(sf);

    Rational eps(1);
    while (true) {
        std::vector<RatInterval> box;
        box.reserve(point.size());
        for (const auto& a : point) box.push_back(a.refined(eps));
        RatInterval img_iv = interval_evaluate(q, box);
        std::size_t hits = 0, last = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            RatInterval er = roots[i].enclosure();
            if (!er.disjoint(img_iv)) {
                ++hits;
                last = i;
            }
        }
        if (hits == 1) return roots[last].sgn();
        for (const auto& r : roots) {
            if (r.is_rational()) continue;
            RatInterval er = r.enclosure();
            r.refined((er.hi - er.lo) / 2);
        }
        eps = eps / 2;
    }
}

} // namespace tame
