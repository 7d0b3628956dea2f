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

#include "core/rational.hpp"

#include <cassert>
#include <cstdlib>

namespace tame {

std::size_t hash_value(const Integer& z) {
    std::size_t seed = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 2);
    const std::size_t n = mpz_size(z.get_mpz_t());
    const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        hash_combine(seed, static_cast<std::size_t>(limbs[i]));
    return seed;
}

std::size_t hash_value(const Rational& q) {
    std::size_t seed = hash_value(Integer(q.get_num()));
    hash_combine(seed, hash_value(Integer(q.get_den())));
    return seed;
}

std::string decimal_string(const Rational& q, unsigned digits) {
    Integer num = q.get_num();
    Integer den = q.get_den();
    std::string out;
    if (sign(num) < 0) {
        out += "-";
        num = -num;
    }
    Integer ip = num / den;
    out += ip.get_str();
    if (digits == 0) return out;
    out += ".";
    Integer rem = num - ip * den;
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        Integer d = rem / den;
        out += d.get_str();
        rem -= d * den;
    }
    return out;
}

namespace {

// Stern-Brocot style search via continued fractions: the simplest rational
// strictly inside (lo, hi).
Rational simplest_in(const Rational& lo, const Rational& hi) {
    assert(lo < hi);
    Integer fl = floor(lo);
    if (Rational(fl) > lo && Rational(fl) < hi) return Rational(fl);
    Integer cand = fl + 1; // smallest integer > lo
    if (Rational(cand) < hi) return Rational(cand);
    if (lo == Rational(fl)) {
        // lo integral: answer lies in (fl, hi) with hi - fl <= 1
        // simplest = fl + 1/k for the smallest k with fl + 1/k < hi
        Rational gap = hi - Rational(fl);
        Integer k = floor(Rational(gap.get_den(), gap.get_num())) + 1;
        return Rational(fl) + Rational(1, k);
    }
    // Recurse on the fractional parts, inverted.
    Rational lo2 = Rational(1) / (hi - Rational(fl));
    Rational hi2 = Rational(1) / (lo - Rational(fl));
    Rational inner = simplest_in(lo2, hi2);
    return Rational(fl) + Rational(1) / inner;
}

} // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    assert(lo < hi);
    if (sign(lo) < 0 && sign(hi) > 0) return Rational(0);
    if (sign(hi) <= 0) return -simplest_in(-hi, -lo);
    return simplest_in(lo, hi);
}

} // namespace tame
