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

#ifndef TAME_POLY_MONOMIAL_HPP
#define TAME_POLY_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "core/rational.hpp"

namespace tame {

// Power product of variables x0, x1, ... with trailing zero exponents
// trimmed, so the representation is canonical.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) { trim(); }

    static Monomial one() { return Monomial(); }
    static Monomial var(unsigned v, unsigned e = 1) {
        std::vector<unsigned> ex(v + 1, 0);
        ex[v] = e;
        return Monomial(std::move(ex));
    }

    unsigned deg(unsigned v) const { return v < exps_.size() ? exps_[v] : 0; }
    unsigned total_degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0u);
    }
    bool is_one() const { return exps_.empty(); }
    // One past the largest variable index with nonzero exponent.
    unsigned var_bound() const { return static_cast<unsigned>(exps_.size()); }

    Monomial operator*(const Monomial& o) const {
        std::vector<unsigned> ex(std::max(exps_.size(), o.exps_.size()), 0);
        for (std::size_t i = 0; i < ex.size(); ++i)
            ex[i] = deg(static_cast<unsigned>(i)) + o.deg(static_cast<unsigned>(i));
        return Monomial(std::move(ex));
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.deg(static_cast<unsigned>(i))) return false;
        return true;
    }

    // Quotient; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& num) const {
        std::vector<unsigned> ex(num.exps_);
        for (std::size_t i = 0; i < exps_.size(); ++i) ex[i] -= exps_[i];
        return Monomial(std::move(ex));
    }

    Monomial without_var(unsigned v) const {
        std::vector<unsigned> ex(exps_);
        if (v < ex.size()) ex[v] = 0;
        return Monomial(std::move(ex));
    }

    // Lexicographic order by variable index; total order used for the
    // canonical term ordering.
    std::strong_ordering operator<=>(const Monomial& o) const {
        const std::size_t n = std::max(exps_.size(), o.exps_.size());
        for (std::size_t i = 0; i < n; ++i) {
            unsigned a = deg(static_cast<unsigned>(i));
            unsigned b = o.deg(static_cast<unsigned>(i));
            if (a != b) return a <=> b;
        }
        return std::strong_ordering::equal;
    }
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    std::size_t hash() const {
        std::size_t seed = 0x5a17;
        for (unsigned e : exps_) hash_combine(seed, e);
        return seed;
    }

    const std::vector<unsigned>& exponents() const { return exps_; }

private:
    void trim() {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }
    std::vector<unsigned> exps_;
};

} // namespace tame

#endif
