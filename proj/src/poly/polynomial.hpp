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

#ifndef TAME_POLY_POLYNOMIAL_HPP
#define TAME_POLY_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "poly/monomial.hpp"

namespace tame {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept sorted by descending monomial order with no zero
// coefficients, so equal polynomials have identical representations.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    static Polynomial variable(unsigned v);
    static Polynomial term(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }
    Rational constant_value() const; // requires is_constant()

    unsigned total_degree() const;
    unsigned degree(unsigned v) const;
    unsigned var_bound() const; // one past largest variable index present
    bool uses_var(unsigned v) const { return degree(v) > 0; }

    const std::vector<Term>& terms() const { return terms_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial pow(unsigned e) const;
    Polynomial derivative(unsigned v) const;

    // Substitute a polynomial for a variable.
    Polynomial substitute(unsigned v, const Polynomial& value) const;
    // Simultaneous variable renaming: variable i becomes image[i].
    Polynomial rename_vars(const std::vector<unsigned>& image) const;

    // Full evaluation; point must cover every used variable.
    Rational evaluate(const std::vector<Rational>& point) const;
    // Partial evaluation of one variable at a rational.
    Polynomial evaluate_at(unsigned v, const Rational& value) const;

    // Dense coefficient list in the main variable v: index k holds the
    // coefficient of v^k as a polynomial in the remaining variables.
    std::vector<Polynomial> coeffs_in(unsigned v) const;
    static Polynomial from_coeffs(unsigned v, const std::vector<Polynomial>& coeffs);

    Polynomial leading_coeff_in(unsigned v) const;
    // Polynomial minus its leading term in v.
    Polynomial reductum_in(unsigned v) const;

    // Exact division; returns nothing if o does not divide this.
    std::optional<Polynomial> divide_exact(const Polynomial& o) const;

    // Integer normalization over Q: this == (num/den) * primitive where
    // primitive has integer coefficients, content 1, positive leading
    // (largest-monomial) coefficient.
    Polynomial primitive_rational() const;

    // Rational content/primitive so constants factor out of bases cleanly.
    std::size_t hash() const;
    std::string to_string() const; // debug rendering with variables x1, x2, ...

private:
    void normalize();
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace tame

#endif
