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

#include "realalg/number_field.hpp"

#include <algorithm>
#include <cassert>

#include "core/error.hpp"

namespace tame {

namespace {

// Signals that the modulus must be split by this divisor before retrying.
struct NeedSplit {
    Polynomial factor;
};

// Univariate (variable 0) remainder over Q.
Polynomial uni_rem(const Polynomial& a, const Polynomial& b) {
    assert(!b.is_zero());
    Polynomial r = a;
    const unsigned db = b.degree(0);
    const Rational lb = b.coeffs_in(0)[db].constant_value();
    while (!r.is_zero() && r.degree(0) >= db) {
        const unsigned dr = r.degree(0);
        const Rational lr = r.coeffs_in(0)[dr].constant_value();
        Polynomial shift = Polynomial::term(Monomial::var(0, dr - db), lr / lb);
        r = r - shift * b;
    }
    return r;
}

Polynomial uni_gcd(const Polynomial& a, const Polynomial& b) { return poly_gcd(a, b); }

} // namespace

Extension::Extension(Polynomial modulus, AlgebraicNumber gamma)
    : modulus_(std::move(modulus)), gamma_(std::move(gamma)) {}

Polynomial Extension::reduce(const Polynomial& a) const {
    if (a.is_constant() || a.degree(0) < modulus_.degree(0)) return a;
    return uni_rem(a, modulus_);
}

int Extension::sign_of(const Polynomial& a) const {
    if (a.is_zero()) return 0;
    if (a.is_constant()) return sign(a.constant_value());
    return gamma_.sign_of_univariate(a);
}

void Extension::split_with(const Polynomial& factor) {
    Polynomial f = factor.primitive_rational();
    if (f.is_constant() || f.degree(0) >= modulus_.degree(0)) return;
    if (gamma_.sign_of_univariate(f) == 0) {
        modulus_ = f;
    } else {
        auto q = modulus_.divide_exact(f);
        assert(q);
        modulus_ = q->primitive_rational();
    }
}

Polynomial Extension::inverse(Polynomial a) {
    a = reduce(a);
    assert(!is_zero_elem(a));
    // Extended Euclid on (modulus, a) over Q[x].
    Polynomial g = uni_gcd(modulus_, a);
    if (!g.is_constant()) throw NeedSplit{g};
    Polynomial r0 = modulus_, r1 = a;
    Polynomial s0 = Polynomial::zero(), s1 = Polynomial::constant(Rational(1));
    while (!r1.is_zero() && r1.degree(0) > 0) {
        // Quotient of r0 by r1.
        Polynomial q;
        Polynomial rem = r0;
        const unsigned d1 = r1.degree(0);
        const Rational l1 = r1.coeffs_in(0)[d1].constant_value();
        while (!rem.is_zero() && rem.degree(0) >= d1) {
            const unsigned dr = rem.degree(0);
            const Rational lr = rem.coeffs_in(0)[dr].constant_value();
            Polynomial t = Polynomial::term(Monomial::var(0, dr - d1), lr / l1);
            q = q + t;
            rem = rem - t * r1;
        }
        Polynomial s2 = s0 - q * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r1 is a nonzero constant (gcd was trivial); invert it.
    assert(!r1.is_zero() && r1.degree(0) == 0);
    Rational c = r1.constant_value();
    return reduce(s1 * Rational(Rational(1) / c));
}

ExtPoly ext_trim(const Extension& e, ExtPoly p) {
    while (!p.c.empty() && e.sign_of(p.c.back()) == 0) p.c.pop_back();
    for (auto& c : p.c) c = e.reduce(c);
    return p;
}

ExtPoly ext_derivative(const Extension&, const ExtPoly& p) {
    ExtPoly d;
    for (std::size_t i = 1; i < p.c.size(); ++i)
        d.c.push_back(p.c[i] * Rational(static_cast<long>(i)));
    return d;
}

ExtPoly ext_neg(const ExtPoly& p) {
    ExtPoly q = p;
    for (auto& c : q.c) c = -c;
    return q;
}

namespace {

ExtPoly ext_rem_impl(Extension& e, const ExtPoly& a, const ExtPoly& b) {
    ExtPoly r = ext_trim(e, a);
    ExtPoly bb = ext_trim(e, b);
    assert(!bb.is_zero());
    const unsigned db = bb.degree();
    Polynomial inv_lb = e.inverse(bb.c.back());
    while (!r.is_zero() && r.degree() >= db) {
        const unsigned dr = r.degree();
        Polynomial factor = e.reduce(r.c.back() * inv_lb);
        // r -= factor * v^(dr-db) * b
        for (unsigned k = 0; k <= db; ++k) {
            unsigned idx = dr - db + k;
            r.c[idx] = e.reduce(r.c[idx] - factor * bb.c[k]);
        }
        r = ext_trim(e, r);
        assert(r.is_zero() || r.degree() < dr);
    }
    return r;
}

template <typename F>
auto with_splits(Extension& e, F&& fn) {
    while (true) {
        try {
            return fn();
        } catch (NeedSplit& s) {
            e.split_with(s.factor);
        }
    }
}

} // namespace

ExtPoly ext_rem(Extension& e, const ExtPoly& a, const ExtPoly& b) {
    return with_splits(e, [&] { return ext_rem_impl(e, a, b); });
}

ExtPoly ext_gcd(Extension& e, ExtPoly a, ExtPoly b) {
    a = ext_trim(e, a);
    b = ext_trim(e, b);
    while (!b.is_zero()) {
        ExtPoly r = ext_rem(e, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ExtPoly ext_deflate(Extension& e, const ExtPoly& p, const Rational& r) {
    // Synthetic (Horner) division by (v - r); the remainder is zero because
    // r is a root.
    ExtPoly pp = ext_trim(e, p);
    assert(!pp.is_zero());
    ExtPoly q;
    q.c.assign(pp.c.size() - 1, Polynomial::zero());
    Polynomial acc = Polynomial::zero();
    for (std::size_t i = pp.c.size(); i-- > 1;) {
        acc = e.reduce(pp.c[i] + acc * r);
        q.c[i - 1] = acc;
    }
    return ext_trim(e, q);
}

int ext_sign_at(const Extension& e, const ExtPoly& p, const Rational& v0) {
    Polynomial acc = Polynomial::zero();
    for (std::size_t i = p.c.size(); i-- > 0;) acc = e.reduce(acc * v0 + p.c[i]);
    return e.sign_of(acc);
}

namespace {

// Sturm chain over the extension for a squarefree ExtPoly.
std::vector<ExtPoly> sturm_chain(Extension& e, const ExtPoly& p) {
    std::vector<ExtPoly> chain;
    chain.push_back(ext_trim(e, p));
    chain.push_back(ext_trim(e, ext_derivative(e, p)));
    while (!chain.back().is_zero()) {
        ExtPoly r = ext_rem(e, chain[chain.size() - 2], chain.back());
        chain.push_back(ext_neg(r));
    }
    chain.pop_back();
    return chain;
}

unsigned sign_variations_at(const Extension& e, const std::vector<ExtPoly>& chain,
                            const Rational& x) {
    unsigned v = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = ext_sign_at(e, p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

PrimitivePoint::PrimitivePoint(std::span<const AlgebraicNumber> coords) {
    rational_.resize(coords.size());
    rep_.resize(coords.size());
    std::vector<unsigned> irr;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_rational())
            rational_[i] = coords[i].rational_value();
        else
            irr.push_back(static_cast<unsigned>(i));
    }
    if (irr.empty()) return;

    // Start with the first irrational coordinate as the primitive element.
    AlgebraicNumber gamma = coords[irr[0]];
    Polynomial modulus = gamma.defining();
    std::vector<Polynomial> reps = {Polynomial::variable(0)};

    for (std::size_t t = 1; t < irr.size(); ++t) {
        const AlgebraicNumber& alpha = coords[irr[t]];
        // Find lambda with Q(gamma, alpha) = Q(gamma + lambda*alpha) by
        // checking that the gcd below is linear.
        bool done = false;
        for (long lam = 1; lam <= 64 && !done; lam = lam > 0 ? -lam : -lam + 1) {
            const Rational lambda(lam);
            // New primitive element candidate.
            AlgebraicNumber gnew = gamma + alpha * AlgebraicNumber(lambda);
            if (gnew.is_rational()) continue;
            Polynomial pnew = gnew.defining();
            Extension enew(pnew, gnew);
            // alpha is a common root of  p_alpha(y)  and  m_gamma(gnew - lambda y).
            // Compute their gcd over Q(gnew); a linear gcd expresses alpha.
            const Polynomial palpha = alpha.defining();
            const unsigned da = palpha.degree(0);
            ExtPoly A;
            A.c.assign(da + 1, Polynomial::zero());
            for (const auto& term : palpha.terms())
                A.c[term.first.deg(0)] = Polynomial::constant(term.second);
            // B(y) = modulus(gnew_var - lambda*y), expanded in y with
            // gamma-poly coefficients.
            const unsigned dm = modulus.degree(0);
            ExtPoly B;
            B.c.assign(dm + 1, Polynomial::zero());
            {
                // (g - lambda y)^k expanded: coefficients binomial.
                // Build iteratively: pow[k] holds coefficients in y of
                // (g - lambda y)^k as gamma-polys.
                std::vector<std::vector<Polynomial>> pow(dm + 1);
                pow[0] = {Polynomial::constant(Rational(1))};
                for (unsigned k = 1; k <= dm; ++k) {
                    const auto& prev = pow[k - 1];
                    std::vector<Polynomial> cur(prev.size() + 1, Polynomial::zero());
                    for (std::size_t j = 0; j < prev.size(); ++j) {
                        cur[j] = cur[j] + prev[j] * Polynomial::variable(0);
                        cur[j + 1] = cur[j + 1] + prev[j] * Rational(-lambda);
                    }
                    pow[k] = std::move(cur);
                }
                const auto cs = modulus.coeffs_in(0);
                for (unsigned k = 0; k <= dm; ++k) {
                    if (cs[k].is_zero()) continue;
                    const Rational ck = cs[k].constant_value();
                    for (std::size_t j = 0; j < pow[k].size(); ++j)
                        B.c[j] = B.c[j] + pow[k][j] * ck;
                }
            }
            // ext_rem resolves modulus splits internally; only the final
            // inversion can still request one, so loop on that.
            ExtPoly g = ext_gcd(enew, A, B);
            g = ext_trim(enew, g);
            if (g.degree() != 1) continue; // unlucky lambda
            // alpha = -g0 / g1 over the extension.
            Polynomial alpha_rep = with_splits(enew, [&] {
                return enew.reduce(-g.c[0] * enew.inverse(g.c[1]));
            });
            Polynomial gamma_rep = enew.reduce(Polynomial::variable(0) - alpha_rep * lambda);
            // Rebase the existing representations onto gnew.
            std::vector<Polynomial> new_reps;
            for (const auto& r : reps)
                new_reps.push_back(enew.reduce(r.substitute(0, gamma_rep)));
            new_reps.push_back(alpha_rep);
            reps = std::move(new_reps);
            gamma = gnew;
            modulus = enew.modulus();
            done = true;
        }
        if (!done)
            throw Error("primitive element search failed");
    }

    ext_.emplace(modulus, gamma);
    for (std::size_t t = 0; t < irr.size(); ++t) rep_[irr[t]] = reps[t];
}

Polynomial PrimitivePoint::to_gamma_poly(const Polynomial& p) const {
    // Substitute: rational coordinates exactly, irrational ones by their
    // gamma-polynomials with the gamma variable moved above p's variables.
    const unsigned gv = std::max(p.var_bound(), static_cast<unsigned>(rational_.size()));
    Polynomial acc = p;
    for (unsigned v = 0; v < rational_.size() && v < p.var_bound(); ++v) {
        if (!acc.uses_var(v)) continue;
        if (rational_[v].has_value()) {
            acc = acc.evaluate_at(v, *rational_[v]);
        } else {
            Polynomial rep_shift = rep_[v].rename_vars({gv});
            acc = acc.substitute(v, rep_shift);
        }
    }
    // Move gamma variable to 0.
    std::vector<unsigned> img(gv + 1, 0);
    img[gv] = 0;
    Polynomial out = acc.rename_vars(img);
    return ext_ ? ext_->reduce(out) : out;
}

int PrimitivePoint::sign_of(const Polynomial& p) {
    Polynomial g = to_gamma_poly(p);
    if (g.is_zero()) return 0;
    if (g.is_constant()) return sign(g.constant_value());
    return ext_->sign_of(g);
}

ExtPoly PrimitivePoint::to_ext_poly(const Polynomial& p, unsigned v) const {
    ExtPoly out;
    auto cs = p.coeffs_in(v);
    out.c.reserve(cs.size());
    for (const auto& c : cs) out.c.push_back(to_gamma_poly(c));
    return out;
}

std::vector<AlgebraicNumber> PrimitivePoint::fiber_roots(const Polynomial& f, unsigned v,
                                                         bool& nullified) {
    nullified = false;
    if (purely_rational()) {
        Polynomial g = f;
        for (unsigned u = 0; u < rational_.size() && u < f.var_bound(); ++u) {
            if (u == v || !g.uses_var(u)) continue;
            g = g.evaluate_at(u, *rational_[u]);
        }
        if (g.is_zero()) {
            nullified = true;
            return {};
        }
        if (!g.uses_var(v)) return {};
        std::vector<unsigned> img(g.var_bound(), 0);
        img[v] = 0;
        return AlgebraicNumber::real_roots(g.rename_vars(img));
    }

    Extension& e = *ext_;
    ExtPoly g = ext_trim(e, to_ext_poly(f, v));
    if (g.is_zero()) {
        nullified = true;
        return {};
    }
    if (g.degree() == 0) return {};

    std::vector<AlgebraicNumber> out;
    std::vector<Rational> exact_rationals;

    // Squarefree part over the extension.
    ExtPoly gsf = with_splits(e, [&] {
        ExtPoly d = ext_derivative(e, g);
        ExtPoly h = ext_gcd(e, g, d);
        if (ext_trim(e, h).degree() == 0) return g;
        // Divide g by h (Euclidean quotient; remainder is zero).
        ExtPoly q;
        ExtPoly r = ext_trim(e, g);
        ExtPoly hh = ext_trim(e, h);
        const unsigned dh = hh.degree();
        Polynomial inv_lh = e.inverse(hh.c.back());
        q.c.assign(r.degree() - dh + 1, Polynomial::zero());
        while (!r.is_zero() && r.degree() >= dh) {
            const unsigned dr = r.degree();
            Polynomial factor = e.reduce(r.c.back() * inv_lh);
            q.c[dr - dh] = factor;
            for (unsigned k = 0; k <= dh; ++k)
                r.c[dr - dh + k] = e.reduce(r.c[dr - dh + k] - factor * hh.c[k]);
            r.c.pop_back();
            r = ext_trim(e, r);
        }
        return ext_trim(e, q);
    });

    // Rational root deflation keeps the Sturm bisection clean: whenever a
    // midpoint hits a root we record it and deflate.
restart:
    gsf = ext_trim(e, gsf);
    if (gsf.degree() == 0) {
        // Collect candidates over Q for the remaining irrational roots; none
        // are left when the polynomial is constant.
    } else {
        // Root bound from enclosures: |root| <= 1 + max |c_i| / |c_d|.
        Rational bound(2);
        {
            Rational eps(1, 16);
            while (true) {
                RatInterval lead = [&] {
                    // Enclosure of the leading coefficient at gamma.
                    Polynomial lc = gsf.c.back();
                    RatInterval ge = e.gamma().refined(eps);
                    std::vector<RatInterval> box = {ge};
                    return interval_evaluate(lc, std::span<const RatInterval>(box));
                }();
                if (!lead.contains_zero()) {
                    Rational denom = std::min(abs(lead.lo), abs(lead.hi));
                    Rational maxc(0);
                    RatInterval ge = e.gamma().refined(eps);
                    std::vector<RatInterval> box = {ge};
                    for (std::size_t i = 0; i + 1 < gsf.c.size(); ++i) {
                        RatInterval ci =
                            interval_evaluate(gsf.c[i], std::span<const RatInterval>(box));
                        maxc = std::max(maxc, std::max(abs(ci.lo), abs(ci.hi)));
                    }
                    bound = Rational(1) + maxc / denom;
                    break;
                }
                eps = eps / 2;
            }
        }

        std::vector<ExtPoly> chain =
            with_splits(e, [&] { return sturm_chain(e, gsf); });
        auto count_between = [&](const Rational& a, const Rational& b) {
            return static_cast<int>(sign_variations_at(e, chain, a)) -
                   static_cast<int>(sign_variations_at(e, chain, b));
        };

        struct Item {
            Rational lo, hi;
            int count;
        };
        std::vector<Item> work, isolated;
        {
            int total = count_between(-bound, bound);
            if (total > 0) work.push_back({-bound, bound, total});
        }
        while (!work.empty()) {
            Item it = work.back();
            work.pop_back();
            if (it.count == 1) {
                isolated.push_back(it);
                continue;
            }
            Rational mid = (it.lo + it.hi) / 2;
            if (ext_sign_at(e, gsf, mid) == 0) {
                exact_rationals.push_back(mid);
                gsf = ext_deflate(e, gsf, mid);
                goto restart; // chain is stale; rebuild
            }
            int left = count_between(it.lo, mid);
            if (left > 0) work.push_back({it.lo, mid, left});
            int right = it.count - left;
            if (right > 0) work.push_back({mid, it.hi, right});
        }

        if (!isolated.empty()) {
            // Map the isolated fiber roots onto roots of the resultant
            // R(v) = Res_gamma(modulus, g); every fiber root is an R-root.
            Polynomial R = with_splits(e, [&] {
                // Bivariate: gamma variable 0, fiber variable 1.
                Polynomial biv;
                for (std::size_t i = 0; i < gsf.c.size(); ++i) {
                    Polynomial ci = gsf.c[i].rename_vars({0});
                    biv = biv + ci * Polynomial::term(Monomial::var(1, static_cast<unsigned>(i)),
                                                      Rational(1));
                }
                Polynomial res = resultant(e.modulus(), biv, 0);
                if (res.is_zero()) {
                    Polynomial h = poly_gcd(e.modulus(), biv);
                    // h divides the modulus and is gamma-only.
                    throw NeedSplit{h};
                }
                return res;
            });
            std::vector<unsigned> img(std::max(2u, R.var_bound()), 0);
            if (R.var_bound() > 1) img[1] = 0;
            Polynomial Runi = R.rename_vars(img);
            std::vector<AlgebraicNumber> cands = AlgebraicNumber::real_roots(Runi);
            for (auto& it : isolated) {
                // Narrow (lo, hi) until exactly one candidate overlaps.
                Rational lo = it.lo, hi = it.hi;
                while (true) {
                    std::size_t hits = 0, last = 0;
                    for (std::size_t i = 0; i < cands.size(); ++i) {
                        RatInterval enc = cands[i].enclosure();
                        if (!(enc.hi < lo || hi < enc.lo)) {
                            ++hits;
                            last = i;
                        }
                    }
                    if (hits == 1) {
                        out.push_back(cands[last]);
                        break;
                    }
                    // Refine candidates and bisect the Sturm interval.
                    for (const auto& c : cands) {
                        if (c.is_rational()) continue;
                        RatInterval enc = c.enclosure();
                        c.refined((enc.hi - enc.lo) / 2);
                    }
                    Rational mid = (lo + hi) / 2;
                    if (ext_sign_at(e, gsf, mid) == 0) {
                        // The root is exactly mid.
                        out.push_back(AlgebraicNumber(mid));
                        break;
                    }
                    if (count_between(lo, mid) == 1)
                        hi = mid;
                    else
                        lo = mid;
                }
            }
        }
    }

    for (const auto& r : exact_rationals) out.push_back(AlgebraicNumber(r));
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return AlgebraicNumber::compare(a, b) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                              return AlgebraicNumber::compare(a, b) == 0;
                          }),
              out.end());
    return out;
}

} // namespace tame
