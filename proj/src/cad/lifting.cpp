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

#include "cad/lifting.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace tame {

Walker::Walker(const ProjectionTower& tower, const KernelConfig& cfg)
    : tower_(tower), cfg_(cfg) {
    level_polys_.resize(tower_.nvars);
    for (unsigned k = 0; k < tower_.nvars; ++k)
        for (const Polynomial& f : tower_.basis[k])
            level_polys_[k].push_back(LevelPoly{&f, f.coeffs_in(k)});
}

namespace {

bool path_all_rational(const std::vector<AlgebraicNumber>& path) {
    for (const auto& a : path)
        if (!a.is_rational()) return false;
    return true;
}

// Real roots of a dense rational-coefficient univariate polynomial given by
// value; constants yield no roots, the zero polynomial reports nullification.
void rational_fiber_roots(const std::vector<Rational>& cs, std::vector<AlgebraicNumber>& out,
                          bool& nullified) {
    std::size_t top = cs.size();
    while (top > 0 && sign(cs[top - 1]) == 0) --top;
    if (top == 0) {
        nullified = true;
        return;
    }
    if (top == 1) return; // nonzero constant
    if (top == 2) {
        out.push_back(AlgebraicNumber(-cs[0] / cs[1]));
        return;
    }
    Polynomial p;
    for (std::size_t i = 0; i < top; ++i)
        p = p + Polynomial::term(Monomial::var(0, static_cast<unsigned>(i)), cs[i]);
    for (auto& r : AlgebraicNumber::real_roots(p)) out.push_back(std::move(r));
}

} // namespace

Stack Walker::build_stack(const std::vector<AlgebraicNumber>& path, unsigned level_index) {
    const unsigned v = level_index;
    const std::vector<Polynomial>& polys = tower_.basis[level_index];

    std::vector<AlgebraicNumber> roots;
    if (!polys.empty()) {
        if (path_all_rational(path)) {
            std::vector<Rational> pt;
            pt.reserve(path.size());
            for (const auto& a : path) pt.push_back(a.rational_value());
            std::vector<Rational> cs;
            for (const LevelPoly& lp : level_polys_[v]) {
                cs.clear();
                for (const Polynomial& c : lp.coeffs) cs.push_back(c.evaluate(pt));
                bool nullified = false;
                rational_fiber_roots(cs, roots, nullified);
                if (nullified && cfg_.projection == ProjectionMode::Reduced)
                    throw WellOrientednessFailure{};
            }
        } else {
            PrimitivePoint point(path);
            for (const Polynomial& f : polys) {
                bool nullified = false;
                std::vector<AlgebraicNumber> cand = point.fiber_roots(f, v, nullified);
                if (nullified && cfg_.projection == ProjectionMode::Reduced)
                    throw WellOrientednessFailure{};
                for (auto& r : cand) roots.push_back(std::move(r));
            }
        }
        std::sort(roots.begin(), roots.end(),
                  [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                      return AlgebraicNumber::compare(a, b) < 0;
                  });
        roots.erase(std::unique(roots.begin(), roots.end(),
                                [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                                    return AlgebraicNumber::compare(a, b) == 0;
                                }),
                    roots.end());
    }

    Stack st;
    if (roots.empty()) {
        st.points.emplace_back(Rational(0));
        st.is_section.push_back(false);
        return st;
    }

    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        while (true) {
            RatInterval a = roots[i].enclosure();
            RatInterval b = roots[i + 1].enclosure();
            if (a.hi < b.lo) break;
            if (!roots[i].is_rational()) roots[i].refined((a.hi - a.lo) / 2);
            if (!roots[i + 1].is_rational()) roots[i + 1].refined((b.hi - b.lo) / 2);
        }
    }

    st.points.reserve(2 * roots.size() + 1);
    st.is_section.reserve(2 * roots.size() + 1);
    {
        RatInterval e = roots.front().enclosure();
        st.points.emplace_back(Rational(floor(e.lo) - 1));
        st.is_section.push_back(false);
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        st.points.push_back(roots[i]);
        st.is_section.push_back(true);
        if (i + 1 < roots.size()) {
            RatInterval a = roots[i].enclosure();
            RatInterval b = roots[i + 1].enclosure();
            st.points.emplace_back(simplest_rational_between(a.hi, b.lo));
            st.is_section.push_back(false);
        }
    }
    {
        RatInterval e = roots.back().enclosure();
        st.points.emplace_back(Rational(ceil(e.hi) + 1));
        st.is_section.push_back(false);
    }
    return st;
}

bool Walker::walk_rec(unsigned level, const WalkHooks& hooks) {
    if (level == tower_.nvars) return hooks.leaf(path_, sectors_, word_);
    Stack st = build_stack(path_, level);
    bool acc = hooks.init ? hooks.init(level) : false;
    for (std::size_t i = 0; i < st.points.size(); ++i) {
        if (++cells_ > cfg_.max_cells)
            throw ResourceLimitError("cell budget exceeded (" + std::to_string(cfg_.max_cells) +
                                     ")");
        path_.push_back(st.points[i]);
        sectors_.push_back(!st.is_section[i]);
        word_.push_back(static_cast<unsigned>(i + 1));
        if (hooks.enter) hooks.enter(level + 1, path_, sectors_);
        bool child = walk_rec(level + 1, hooks);
        path_.pop_back();
        sectors_.pop_back();
        word_.pop_back();
        if (hooks.combine) acc = hooks.combine(level, acc, child);
    }
    return acc;
}

bool Walker::walk(const WalkHooks& hooks) {
    path_.clear();
    sectors_.clear();
    word_.clear();
    path_.reserve(tower_.nvars);
    if (tower_.nvars == 0) return hooks.leaf(path_, sectors_, word_);
    return walk_rec(0, hooks);
}

} // namespace tame
