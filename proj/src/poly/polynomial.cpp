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

#include "poly/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace tame {

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (sign(out.back().second) == 0) out.pop_back();
        } else if (sign(t.second) != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (sign(c) != 0) p.terms_.emplace_back(Monomial::one(), std::move(c));
    return p;
}

Polynomial Polynomial::variable(unsigned v) {
    Polynomial p;
    p.terms_.emplace_back(Monomial::var(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p;
    if (sign(c) != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

Rational Polynomial::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

unsigned Polynomial::degree(unsigned v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.deg(v));
    return d;
}

unsigned Polynomial::var_bound() const {
    unsigned b = 0;
    for (const auto& t : terms_) b = std::max(b, t.first.var_bound());
    return b;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p;
    p.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first > b->first) {
            p.terms_.push_back(*a++);
        } else if (b->first > a->first) {
            p.terms_.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (sign(c) != 0) p.terms_.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    p.terms_.insert(p.terms_.end(), a, terms_.end());
    p.terms_.insert(p.terms_.end(), b, o.terms_.end());
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::map<Monomial, Rational, std::greater<Monomial>> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.first * b.first;
            Rational c = a.second * b.second;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (sign(it->second) == 0) acc.erase(it);
            }
        }
    Polynomial p;
    p.terms_.assign(acc.begin(), acc.end());
    return p;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (sign(c) == 0) return Polynomial();
    Polynomial p(*this);
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(Rational(1));
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::derivative(unsigned v) const {
    Polynomial p;
    for (const auto& t : terms_) {
        unsigned d = t.first.deg(v);
        if (d == 0) continue;
        std::vector<unsigned> ex(t.first.exponents());
        ex[v] -= 1;
        p.terms_.emplace_back(Monomial(std::move(ex)), t.second * Rational(d));
    }
    p.normalize();
    return p;
}

Polynomial Polynomial::substitute(unsigned v, const Polynomial& value) const {
    // Horner over the dense coefficient list in v.
    if (!uses_var(v)) return *this;
    std::vector<Polynomial> cs = coeffs_in(v);
    Polynomial acc = cs.back();
    for (std::size_t k = cs.size() - 1; k-- > 0;) acc = acc * value + cs[k];
    return acc;
}

Polynomial Polynomial::rename_vars(const std::vector<unsigned>& image) const {
    Polynomial p;
    for (const auto& t : terms_) {
        std::vector<unsigned> ex;
        const auto& src = t.first.exponents();
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == 0) continue;
            unsigned tgt = image.at(i);
            if (ex.size() <= tgt) ex.resize(tgt + 1, 0);
            ex[tgt] += src[i];
        }
        p.terms_.emplace_back(Monomial(std::move(ex)), t.second);
    }
    p.normalize();
    return p;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.second;
        const auto& ex = t.first.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            assert(i < point.size());
            v *= tame::pow(point[i], ex[i]);
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::evaluate_at(unsigned v, const Rational& value) const {
    Polynomial p;
    for (const auto& t : terms_) {
        unsigned d = t.first.deg(v);
        Rational c = t.second;
        if (d > 0) c *= tame::pow(value, d);
        p.terms_.emplace_back(t.first.without_var(v), std::move(c));
    }
    p.normalize();
    return p;
}

std::vector<Polynomial> Polynomial::coeffs_in(unsigned v) const {
    std::vector<Polynomial> cs(degree(v) + 1);
    for (const auto& t : terms_) {
        unsigned d = t.first.deg(v);
        cs[d].terms_.emplace_back(t.first.without_var(v), t.second);
    }
    for (auto& c : cs) c.normalize();
    return cs;
}

Polynomial Polynomial::from_coeffs(unsigned v, const std::vector<Polynomial>& coeffs) {
    Polynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Polynomial vk = Polynomial::term(Monomial::var(v, static_cast<unsigned>(k)), Rational(1));
        if (k == 0) vk = Polynomial::constant(Rational(1));
        p = p + coeffs[k] * vk;
    }
    return p;
}

Polynomial Polynomial::leading_coeff_in(unsigned v) const {
    unsigned d = degree(v);
    Polynomial p;
    for (const auto& t : terms_)
        if (t.first.deg(v) == d) p.terms_.emplace_back(t.first.without_var(v), t.second);
    p.normalize();
    return p;
}

Polynomial Polynomial::reductum_in(unsigned v) const {
    unsigned d = degree(v);
    if (is_zero()) return *this;
    Polynomial p;
    for (const auto& t : terms_)
        if (t.first.deg(v) != d) p.terms_.push_back(t);
    p.normalize();
    return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
    assert(!o.is_zero());
    Polynomial rem = *this;
    Polynomial quot;
    const Term& lt = o.terms_.front();
    while (!rem.is_zero()) {
        const Term& lr = rem.terms_.front();
        if (!lt.first.divides(lr.first)) return std::nullopt;
        Polynomial qt = Polynomial::term(lt.first.quotient_of(lr.first), lr.second / lt.second);
        quot = quot + qt;
        rem = rem - qt * o;
    }
    return quot;
}

Polynomial Polynomial::primitive_rational() const {
    if (is_zero()) return *this;
    Integer den_lcm(1);
    for (const auto& t : terms_) den_lcm = lcm(den_lcm, Integer(t.second.get_den()));
    Polynomial cleared = *this * Rational(den_lcm);
    Integer content(0);
    for (const auto& t : cleared.terms_) content = gcd(content, Integer(t.second.get_num()));
    Polynomial p = cleared * Rational(Integer(1), content);
    if (sign(p.terms_.front().second) < 0) p = -p;
    return p;
}

std::size_t Polynomial::hash() const {
    std::size_t seed = 0x70a1;
    for (const auto& t : terms_) {
        hash_combine(seed, t.first.hash());
        hash_combine(seed, hash_value(t.second));
    }
    return seed;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.second;
        if (first) {
            if (sign(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        bool wrote_coeff = false;
        if (a != 1 || t.first.is_one()) {
            os << tame::to_string(a);
            wrote_coeff = true;
        }
        const auto& ex = t.first.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            if (wrote_coeff) os << "*";
            os << "x" << (i + 1);
            if (ex[i] > 1) os << "^" << ex[i];
            wrote_coeff = true;
        }
    }
    return os.str();
}

} // namespace tame
