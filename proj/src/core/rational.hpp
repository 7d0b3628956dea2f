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

#ifndef TAME_CORE_RATIONAL_HPP
#define TAME_CORE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>

namespace tame {

// Exact arbitrary-precision integers and rationals.  GMP supplies the
// arithmetic; the kernel contains no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

inline Integer abs(const Integer& z) { return ::abs(z); }
inline Rational abs(const Rational& q) { return ::abs(q); }

// Exact floor/ceil of a rational as an integer.
inline Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t hash_value(const Integer& z);
std::size_t hash_value(const Rational& q);

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Decimal rendering with the requested number of fraction digits, rounding
// toward zero.  Presentation only; never used in kernel logic.
std::string decimal_string(const Rational& q, unsigned digits);

// The simplest rational (minimal denominator, then minimal |numerator|) in
// the open interval (lo, hi).  Requires lo < hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

} // namespace tame

template <>
struct std::hash<tame::Rational> {
    std::size_t operator()(const tame::Rational& q) const { return tame::hash_value(q); }
};

#endif
