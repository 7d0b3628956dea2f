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

#ifndef TAME_REALALG_ALGEBRAIC_HPP
#define TAME_REALALG_ALGEBRAIC_HPP

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "poly/polynomial.hpp"
#include "poly/polyops.hpp"

namespace tame {

// Exact closed interval arithmetic over the rationals, used to pin down
// algebraic values before exact zero tests settle the borderline cases.
struct RatInterval {
    Rational lo, hi;

    static RatInterval point(const Rational& r) { return {r, r}; }
    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval pow(unsigned e) const;
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }
};

// A real algebraic number: either an exact rational, or a squarefree
// primitive integer polynomial with positive leading coefficient of degree
// at least two, together with an open isolating interval whose endpoints
// are not roots.  Values are immutable; interval refinement never changes
// the represented number and is safe under concurrent use.
class AlgebraicNumber {
public:
    AlgebraicNumber() : rat_(0) {}
    /*implicit*/ AlgebraicNumber(Rational r) : rat_(std::move(r)) {}
    /*implicit*/ AlgebraicNumber(int n) : rat_(n) {}

    // The unique root of `defining` (univariate in variable 0) inside the
    // open interval (lo, hi).  Validates the isolation property and
    // normalizes rational roots to the rational representation.
    static AlgebraicNumber make_root(const Polynomial& defining, const Rational& lo,
                                     const Rational& hi);

    // All real roots of p (univariate in variable 0), increasing.
    // Throws ZeroPolynomialError when p == 0.
    static std::vector<AlgebraicNumber> real_roots(const Polynomial& p);

    bool is_rational() const { return st_ == nullptr; }
    const Rational& rational_value() const { return rat_; }

    // Defining polynomial per the reporting convention: for rationals u/v
    // this is v*x - u.
    Polynomial defining() const;
    // Current isolating interval; for rationals, (r-1, r+1).
    std::pair<Rational, Rational> interval() const;

    int sgn() const;
    static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
    bool operator==(const AlgebraicNumber& o) const { return compare(*this, o) == 0; }
    bool operator<(const AlgebraicNumber& o) const { return compare(*this, o) < 0; }

    AlgebraicNumber operator-() const;
    AlgebraicNumber operator+(const AlgebraicNumber& o) const;
    AlgebraicNumber operator-(const AlgebraicNumber& o) const;
    AlgebraicNumber operator*(const AlgebraicNumber& o) const;
    // Throws DivisionByZeroError when o == 0.
    AlgebraicNumber operator/(const AlgebraicNumber& o) const;

    // Shrink the isolating interval until its width is < eps; returns the
    // refined closed enclosure (exact point for rationals).
    RatInterval refined(const Rational& eps) const;
    RatInterval enclosure() const;

    // Sign of the univariate polynomial q (in variable 0) at this number.
    int sign_of_univariate(const Polynomial& q) const;

    // Decimal approximation with the given fraction digits; presentation
    // only (|error| < 10^-digits).
    std::string decimal(unsigned digits) const;
    std::string to_string() const;

private:
    struct State {
        Polynomial poly; // squarefree primitive integer, lc > 0, deg >= 2
        std::vector<Integer> coeffs;
        mutable std::mutex mu;
        mutable Rational lo, hi;
    };

    static AlgebraicNumber trusted_root(Polynomial sf_poly, Rational lo, Rational hi);
    void refine_once() const;

    Rational rat_;
    std::shared_ptr<State> st_;

    friend class SamplePointOps;
};

// Sign of the multivariate polynomial p at the given point, evaluated
// exactly.  point[i] is the value of variable i; the point must cover every
// variable p uses.
int sign_at(const Polynomial& p, std::span<const AlgebraicNumber> point);

// Exact evaluation helpers used by the decomposition engine.
RatInterval interval_evaluate(const Polynomial& p, std::span<const RatInterval> box);

} // namespace tame

#endif
