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

#include "realalg/isolate.hpp"

#include <algorithm>
#include <cassert>

namespace tame {

namespace {

using Coeffs = std::vector<Integer>;

void trim(Coeffs& c) {
    while (!c.empty() && sign(c.back()) == 0) c.pop_back();
}

int sign_at_rational(const Coeffs& c, const Rational& x) {
    // Horner with exact rationals.
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
    return sign(acc);
}

// p(x) -> p(x + 1), in place (Taylor shift by repeated accumulation).
void shift_by_one(Coeffs& c) {
    const std::size_t n = c.size();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = n - 1; j >= i; --j) c[j - 1] += c[j];
}

// p(x) -> x^n p(1/x).
void reverse_coeffs(Coeffs& c) { std::reverse(c.begin(), c.end()); }

// p(x) -> 2^n p(x/2).
void scale_half(Coeffs& c) {
    Integer f(1);
    for (std::size_t i = c.size(); i-- > 0;) {
        c[i] *= f;
        f *= 2;
    }
}

// p(x) -> p((x+1)/2) up to a positive factor:   2^n p(x/2), then shift by 1.
void second_half(Coeffs& c) {
    scale_half(c);
    shift_by_one(c);
}

unsigned sign_variations(const Coeffs& c) {
    unsigned v = 0;
    int last = 0;
    for (const auto& a : c) {
        int s = sign(a);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Descartes bound for the number of roots of p in (0, 1):
// variations of (x+1)^n p(1/(x+1)).
unsigned variations_01(Coeffs c) {
    reverse_coeffs(c);
    // reversal may drop implicit zero leading coefficients; the transform
    // still bounds the root count (standard VCA argument applies to the
    // reversed polynomial with the same roots in (0,1) mapped).
    shift_by_one(c);
    return sign_variations(c);
}

// Isolates roots of squarefree p in the open interval (lo, hi), where c is
// the coefficient vector of the polynomial q with q(t) ~ p(lo + t(hi-lo))
// for t in (0,1).  Appends results in increasing order.
void isolate_01(const Coeffs& c, const Rational& lo, const Rational& hi,
                std::vector<IsolatedRoot>& out) {
    unsigned v = variations_01(c);
    if (v == 0) return;
    if (v == 1) {
        IsolatedRoot r;
        r.exact = false;
        r.lo = lo;
        r.hi = hi;
        out.push_back(r);
        return;
    }
    const Rational mid = (lo + hi) / 2;
    Coeffs left = c;
    scale_half(left); // roots in (0, 1/2) -> (0,1)
    Coeffs right = c;
    second_half(right); // roots in (1/2, 1) -> (0,1)
    trim(left);
    trim(right);
    isolate_01(left, lo, mid, out);
    // q(1/2) == 0 iff constant term of "right" transform vanishes.
    if (sign(right.empty() ? Integer(0) : right[0]) == 0) {
        IsolatedRoot r;
        r.exact = true;
        r.value = mid;
        out.push_back(r);
    }
    isolate_01(right, mid, hi, out);
}

// Sign of c immediately to the right (dir=+1) or left (dir=-1) of a,
// determined by the first nonvanishing Taylor coefficient at a.
int sign_after(const Coeffs& c, const Rational& a, int dir) {
    // Derivatives via repeated Horner evaluation of the derivative vectors.
    Coeffs d = c;
    for (unsigned k = 1; !d.empty(); ++k) {
        // d'(x)
        Coeffs nd;
        for (std::size_t i = 1; i < d.size(); ++i) nd.push_back(d[i] * Integer(i));
        d = std::move(nd);
        if (d.empty()) break;
        int s = sign_at_rational(d, a);
        if (s != 0) return (dir < 0 && (k % 2 == 1)) ? -s : s;
    }
    return 0; // unreachable for nonzero polynomials
}

// Root bound: power of two B with all real roots in (-B, B).
Rational cauchy_bound(const Coeffs& c) {
    Integer maxc(0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) maxc = std::max(maxc, abs(c[i]));
    Integer lead = abs(c.back());
    // smallest power of two > 1 + maxc/lead
    Integer b(2);
    while (b * lead <= lead + maxc) b *= 2;
    return Rational(b);
}

} // namespace

std::vector<IsolatedRoot> isolate_squarefree(const std::vector<Integer>& coeffs_in) {
    Coeffs full = coeffs_in;
    trim(full);
    assert(!full.empty());
    std::vector<IsolatedRoot> out;
    if (full.size() == 1) return out;

    // Root at zero (at most once; the input is squarefree).
    Coeffs c = full;
    bool zero_root = false;
    if (sign(c[0]) == 0) {
        zero_root = true;
        c.erase(c.begin());
    }

    const Rational bound = cauchy_bound(c);

    // Negative roots: p(-x) on (0, bound), mirrored and reversed.
    {
        Coeffs neg = c;
        for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
        // q(t) = neg(bound * t) on (0,1)
        Coeffs q = neg;
        Rational f(1);
        for (std::size_t i = 0; i < q.size(); ++i) {
            // scale by bound^i; bound is an integer power of two
            q[i] *= Integer(f.get_num());
            f *= bound;
        }
        std::vector<IsolatedRoot> pos;
        isolate_01(q, Rational(0), Rational(1), pos);
        for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
            IsolatedRoot r;
            if (it->exact) {
                r.exact = true;
                r.value = -(it->value * bound);
            } else {
                r.exact = false;
                r.lo = -(it->hi * bound);
                r.hi = -(it->lo * bound);
            }
            out.push_back(r);
        }
    }

    if (zero_root) {
        IsolatedRoot r;
        r.exact = true;
        r.value = Rational(0);
        out.push_back(r);
    }

    // Positive roots.
    {
        Coeffs q = c;
        Rational f(1);
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] *= Integer(f.get_num());
            f *= bound;
        }
        std::vector<IsolatedRoot> pos;
        isolate_01(q, Rational(0), Rational(1), pos);
        for (auto& it : pos) {
            IsolatedRoot r;
            if (it.exact) {
                r.exact = true;
                r.value = it.value * bound;
            } else {
                r.exact = false;
                r.lo = it.lo * bound;
                r.hi = it.hi * bound;
            }
            out.push_back(r);
        }
    }

    // An interval may have an endpoint that is itself a root of c (an exact
    // dyadic root found in a sibling branch).  Shrink such intervals until
    // both endpoints are non-roots; the unique interior root is preserved.
    for (auto& r : out) {
        if (r.exact) continue;
        while (true) {
            const int slo = sign_at_rational(full, r.lo);
            const int shi = sign_at_rational(full, r.hi);
            if (slo != 0 && shi != 0) break;
            const Rational w = r.hi - r.lo;
            const Rational m1 = r.lo + w / 4;
            const Rational m2 = r.lo + w / 2;
            const Rational m3 = r.lo + w * Rational(3, 4);
            const int s1 = sign_at_rational(full, m1);
            const int s2 = sign_at_rational(full, m2);
            const int s3 = sign_at_rational(full, m3);
            if (s1 == 0 || s2 == 0 || s3 == 0) {
                r.exact = true;
                r.value = s1 == 0 ? m1 : (s2 == 0 ? m2 : m3);
                break;
            }
            // One-sided signs next to the endpoints, symbolic when the
            // endpoint itself is a root.
            const int right_of_lo = slo != 0 ? slo : sign_after(full, r.lo, +1);
            const int left_of_hi = shi != 0 ? shi : sign_after(full, r.hi, -1);
            if (right_of_lo != s1) {
                r.hi = m1; // root in (lo, m1)
            } else if (left_of_hi != s3) {
                r.lo = m3; // root in (m3, hi)
            } else {
                r.lo = m1; // root in (m1, m3), both endpoints now non-roots
                r.hi = m3;
            }
        }
    }
    return out;
}

} // namespace tame
