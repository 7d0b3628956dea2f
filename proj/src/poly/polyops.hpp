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

#ifndef TAME_POLY_POLYOPS_HPP
#define TAME_POLY_POLYOPS_HPP

#include <vector>

#include "poly/polynomial.hpp"

namespace tame {

// Pseudo-remainder of a by b in the variable v: lc(b)^(da-db+1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, unsigned v);

// Greatest common divisor (primitive PRS, recursive in the number of
// variables).  Result is primitive with positive leading coefficient,
// up to a rational multiple of the true gcd.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Content of p with respect to v (gcd of its coefficients in v) and the
// corresponding primitive part.
Polynomial content_in(const Polynomial& p, unsigned v);
Polynomial primitive_part_in(const Polynomial& p, unsigned v);

// Squarefree part: p / gcd(p, dp/dv) for the main variable v, primitive.
Polynomial squarefree_part(const Polynomial& p, unsigned v);

// Multivariate squarefree part: p divided by the gcd of p and all its
// partial derivatives.
Polynomial full_squarefree(const Polynomial& p);

// Resultant and discriminant with respect to v.
Polynomial resultant(const Polynomial& a, const Polynomial& b, unsigned v);
Polynomial discriminant(const Polynomial& p, unsigned v);

// Principal subresultant coefficients psc_j(a, b) for j = 0..min(da, db)-1
// (index j holds psc_j).  psc_0 is the resultant.
std::vector<Polynomial> principal_subresultant_coeffs(const Polynomial& a,
                                                      const Polynomial& b, unsigned v);

// Pairwise-coprime squarefree basis of the nonconstant squarefree parts of
// the inputs (with respect to overall factor structure rather than a single
// main variable).  Every input is, up to a rational constant, a product of
// powers of basis elements.  Deterministic order.
std::vector<Polynomial> coprime_squarefree_basis(std::vector<Polynomial> polys);

// Determinant of a square polynomial matrix via fraction-free elimination.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m);

} // namespace tame

#endif
