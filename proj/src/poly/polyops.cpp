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

#include "poly/polyops.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace tame {

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, unsigned v) {
    assert(!b.is_zero());
    const unsigned db = b.degree(v);
    if (a.is_zero() || a.degree(v) < db) return a;
    const Polynomial lb = b.leading_coeff_in(v);
    Polynomial r = a;
    int steps = static_cast<int>(a.degree(v)) - static_cast<int>(db) + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
        const unsigned dr = r.degree(v);
        Polynomial lr = r.leading_coeff_in(v);
        Polynomial shift = Polynomial::term(Monomial::var(v, dr - db), Rational(1));
        r = lb * r - shift * lr * b;
        --steps;
    }
    for (; steps > 0; --steps) r = r * lb;
    return r;
}

namespace {

Polynomial normalize_gcd(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (p.is_constant()) return Polynomial::constant(Rational(1));
    return p.primitive_rational();
}

} // namespace

Polynomial content_in(const Polynomial& p, unsigned v) {
    if (p.is_zero()) return p;
    Polynomial c;
    for (const Polynomial& coeff : p.coeffs_in(v)) {
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return normalize_gcd(c);
}

Polynomial primitive_part_in(const Polynomial& p, unsigned v) {
    if (p.is_zero()) return p;
    Polynomial c = content_in(p, v);
    auto q = p.divide_exact(c);
    assert(q);
    return q->primitive_rational();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalize_gcd(b);
    if (b.is_zero()) return normalize_gcd(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(Rational(1));

    const unsigned v = std::max(a.var_bound(), b.var_bound()) - 1;
    if (!a.uses_var(v)) {
        // gcd divides b's content with respect to v.
        return poly_gcd(a, content_in(b, v));
    }
    if (!b.uses_var(v)) return poly_gcd(content_in(a, v), b);

    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial c = poly_gcd(ca, cb);
    Polynomial pa = primitive_part_in(a, v);
    Polynomial pb = primitive_part_in(b, v);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);

    // Primitive PRS.
    while (true) {
        Polynomial r = pseudo_remainder(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            pb = Polynomial::constant(Rational(1));
            break;
        }
        pa = pb;
        pb = primitive_part_in(r, v);
    }
    Polynomial g = pb.is_constant() ? Polynomial::constant(Rational(1)) : primitive_part_in(pb, v);
    return normalize_gcd(c * g);
}

Polynomial squarefree_part(const Polynomial& p, unsigned v) {
    if (p.is_zero() || p.is_constant()) return p;
    Polynomial g = poly_gcd(p, p.derivative(v));
    auto q = p.divide_exact(g);
    assert(q);
    return q->primitive_rational();
}

Polynomial full_squarefree(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return p;
    Polynomial g = p;
    for (unsigned v = 0; v < p.var_bound(); ++v) {
        if (!p.uses_var(v)) continue;
        g = poly_gcd(g, p.derivative(v));
        if (g.is_constant()) break;
    }
    auto q = p.divide_exact(g);
    assert(q);
    return q->primitive_rational();
}

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(Rational(1));
    int sgn = 1;
    Polynomial prev = Polynomial::constant(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial::zero();
            std::swap(m[k], m[r]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                assert(q);
                m[i][j] = std::move(*q);
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sgn < 0 ? -det : det;
}

namespace {

// Square matrix whose determinant is psc_j(a, b) in v.
std::vector<std::vector<Polynomial>> psc_matrix(const std::vector<Polynomial>& ac,
                                                const std::vector<Polynomial>& bc,
                                                unsigned m, unsigned n, unsigned j) {
    const unsigned size = m + n - 2 * j;
    std::vector<std::vector<Polynomial>> mat(size, std::vector<Polynomial>(size));
    auto coeff = [](const std::vector<Polynomial>& c, int d) {
        if (d < 0 || d >= static_cast<int>(c.size())) return Polynomial::zero();
        return c[d];
    };
    // Columns correspond to degrees m+n-j-1 down to j.
    for (unsigned i = 0; i < n - j; ++i) {
        const int shift = static_cast<int>(n - j - 1 - i);
        for (unsigned col = 0; col < size; ++col) {
            const int d = static_cast<int>(m + n - j - 1 - col);
            mat[i][col] = coeff(ac, d - shift);
        }
    }
    for (unsigned i = 0; i < m - j; ++i) {
        const int shift = static_cast<int>(m - j - 1 - i);
        for (unsigned col = 0; col < size; ++col) {
            const int d = static_cast<int>(m + n - j - 1 - col);
            mat[n - j + i][col] = coeff(bc, d - shift);
        }
    }
    return mat;
}

} // namespace

std::vector<Polynomial> principal_subresultant_coeffs(const Polynomial& a,
                                                      const Polynomial& b, unsigned v) {
    const unsigned m = a.degree(v), n = b.degree(v);
    std::vector<Polynomial> out;
    if (a.is_zero() || b.is_zero()) return out;
    const unsigned bound = std::min(m, n);
    const auto ac = a.coeffs_in(v);
    const auto bc = b.coeffs_in(v);
    for (unsigned j = 0; j < bound; ++j)
        out.push_back(bareiss_determinant(psc_matrix(ac, bc, m, n, j)));
    return out;
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, unsigned v) {
    assert(!a.is_zero() && !b.is_zero());
    const unsigned m = a.degree(v), n = b.degree(v);
    if (m == 0 && n == 0) return Polynomial::constant(Rational(1));
    if (m == 0) return a.pow(n);
    if (n == 0) return b.pow(m);

    // Subresultant polynomial remainder sequence with the classical g/h
    // normalization; exact over the coefficient ring.
    Polynomial A = a, B = b;
    int sgn = 1;
    if (m < n) {
        std::swap(A, B);
        if ((m * n) % 2 == 1) sgn = -sgn;
    }
    Polynomial g = Polynomial::constant(Rational(1));
    Polynomial h = Polynomial::constant(Rational(1));
    while (true) {
        const unsigned da = A.degree(v), db = B.degree(v);
        const unsigned delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) sgn = -sgn;
        Polynomial R = pseudo_remainder(A, B, v);
        if (R.is_zero()) return Polynomial::zero();
        // B_next = R / (g * h^delta), exact by the subresultant theory.
        Polynomial divisor = g * h.pow(delta);
        auto q = R.divide_exact(divisor);
        assert(q);
        A = B;
        B = std::move(*q);
        g = A.leading_coeff_in(v);
        if (delta >= 1) {
            // h = g^delta / h^(delta-1), exact.
            auto hq = g.pow(delta).divide_exact(h.pow(delta - 1));
            assert(hq);
            h = std::move(*hq);
        }
        if (B.degree(v) == 0) {
            // res = s * B^da' / h^(da'-1) with da' = deg A.
            const unsigned dA = A.degree(v);
            Polynomial num = B.pow(dA);
            if (dA == 0) return sgn < 0 ? -num : num; // cannot happen: dA >= 1
            auto rq = num.divide_exact(h.pow(dA - 1));
            assert(rq);
            return sgn < 0 ? -*rq : *rq;
        }
    }
}

Polynomial discriminant(const Polynomial& p, unsigned v) {
    const unsigned m = p.degree(v);
    if (m <= 1) return Polynomial::constant(Rational(1));
    Polynomial res = resultant(p, p.derivative(v), v);
    auto q = res.divide_exact(p.leading_coeff_in(v));
    assert(q);
    Polynomial d = *q;
    if (((m * (m - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

namespace {

bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].first != tb[i].first) return ta[i].first < tb[i].first;
        if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
    }
    return false;
}

} // namespace

std::vector<Polynomial> coprime_squarefree_basis(std::vector<Polynomial> polys) {
    std::deque<Polynomial> queue;
    for (auto& p : polys) {
        if (p.is_zero() || p.is_constant()) continue;
        queue.push_back(full_squarefree(p.primitive_rational()));
    }
    std::vector<Polynomial> basis;
    while (!queue.empty()) {
        Polynomial w = queue.front();
        queue.pop_front();
        if (w.is_zero() || w.is_constant()) continue;
        w = w.primitive_rational();
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] == w) {
                split = true; // duplicate
                break;
            }
            Polynomial g = poly_gcd(w, basis[i]);
            if (g.is_constant()) continue;
            // Refine: basis[i] -> {g, basis[i]/g}, w -> w/g.
            Polynomial b = basis[i];
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            auto bq = b.divide_exact(g);
            auto wq = w.divide_exact(g);
            assert(bq && wq);
            queue.push_back(g);
            queue.push_back(*bq);
            queue.push_back(*wq);
            split = true;
            break;
        }
        if (!split) basis.push_back(w);
    }
    std::sort(basis.begin(), basis.end(), poly_less);
    return basis;
}

} // namespace tame
