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

#ifndef TAME_REALALG_NUMBER_FIELD_HPP
#define TAME_REALALG_NUMBER_FIELD_HPP

#include <optional>
#include <span>
#include <vector>

#include "realalg/algebraic.hpp"

namespace tame {

// Arithmetic in Q[x]/(m) for a squarefree modulus m with a distinguished
// real root gamma.  The modulus need not be irreducible: when an inversion
// meets a zero divisor, the modulus is split by a gcd factor and the half
// containing gamma is kept (dynamic evaluation).  All operations stay exact.
class Extension {
public:
    Extension() = default;
    Extension(Polynomial modulus, AlgebraicNumber gamma);

    const Polynomial& modulus() const { return modulus_; }
    const AlgebraicNumber& gamma() const { return gamma_; }

    // Remainder of a univariate polynomial (variable 0) modulo the modulus.
    Polynomial reduce(const Polynomial& a) const;
    // Multiplicative inverse of a nonzero element (may shrink the modulus).
    Polynomial inverse(Polynomial a);
    // Exact sign of a(gamma).
    int sign_of(const Polynomial& a) const;
    bool is_zero_elem(const Polynomial& a) const { return sign_of(a) == 0; }

    // Shrinks the modulus to whichever factor of `factor` / complement gamma
    // satisfies; factor must divide the modulus.
    void split_with(const Polynomial& factor);

private:
    Polynomial modulus_; // squarefree, primitive, variable 0
    AlgebraicNumber gamma_;
};

// Dense polynomial in one fiber variable over the extension; coefficient i
// is a univariate gamma-polynomial (variable 0).
struct ExtPoly {
    std::vector<Polynomial> c;

    unsigned degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1); }
    bool is_zero() const { return c.empty(); }
};

// Normalizes: drops leading coefficients that vanish at gamma (exactly).
ExtPoly ext_trim(const Extension& e, ExtPoly p);
ExtPoly ext_derivative(const Extension& e, const ExtPoly& p);
ExtPoly ext_neg(const ExtPoly& p);
// Remainder of Euclidean division (monic steps via inversion).
ExtPoly ext_rem(Extension& e, const ExtPoly& a, const ExtPoly& b);
ExtPoly ext_gcd(Extension& e, ExtPoly a, ExtPoly b);
// Exact division by (v - r) for a rational root r.
ExtPoly ext_deflate(Extension& e, const ExtPoly& p, const Rational& r);
// Sign of p(gamma, v0) for rational v0.
int ext_sign_at(const Extension& e, const ExtPoly& p, const Rational& v0);

// A sample point with at most one irrational "primitive" coordinate system:
// every coordinate is either rational or a polynomial expression in one
// shared real algebraic number gamma.
class PrimitivePoint {
public:
    // Builds the joint representation of the given coordinates.
    explicit PrimitivePoint(std::span<const AlgebraicNumber> coords);

    bool purely_rational() const { return !ext_.has_value(); }
    Extension& ext() { return *ext_; }

    // Exact sign of a multivariate polynomial at the point.
    int sign_of(const Polynomial& p);

    // The polynomial p with every coordinate substituted, as a univariate
    // gamma-polynomial (constant when the point is rational).
    Polynomial to_gamma_poly(const Polynomial& p) const;

    // p in the point's coordinates plus one fiber variable v: coefficients
    // of v become gamma-polynomials.
    ExtPoly to_ext_poly(const Polynomial& p, unsigned v) const;

    // All real roots of f(point, v) in increasing order (exact), where f may
    // use point coordinates and the fiber variable v.  Sets `nullified` when
    // f vanishes identically on the fiber.
    std::vector<AlgebraicNumber> fiber_roots(const Polynomial& f, unsigned v, bool& nullified);

private:
    std::vector<std::optional<Rational>> rational_;
    std::vector<Polynomial> rep_; // gamma-polynomials for irrational coords
    std::optional<Extension> ext_;
};

} // namespace tame

#endif
