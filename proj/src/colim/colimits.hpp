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

#ifndef TAME_COLIM_COLIMITS_HPP
#define TAME_COLIM_COLIMITS_HPP

#include <optional>

#include "maps/analysis.hpp"

namespace tame {

struct Coproduct {
    DefinableSet space;                 // tagged disjoint union in R^(1+max arity)
    std::vector<DefinableMap> injections;
};

// Tags run from 1 to parts.size(); lower-arity parts are padded with zeros.
Coproduct coproduct(Engine& eng, const std::vector<DefinableSet>& parts);

// True iff v1 and v2 are closed in x and cover it; the pushout of the two
// inclusions over their intersection is then a closed-by-closed gluing
// square.  Requires v1, v2 inside x.
bool closed_glue_verify(Engine& eng, const DefinableSet& x, const DefinableSet& v1,
                        const DefinableSet& v2);

struct PushoutCertificate {
    bool jprime_closed_embedding = false;
    bool fprime_proper = false;
    bool pullback = false;
    bool jointly_surjective = false;
    bool off_locus_bijection = false;
    bool all() const {
        return jprime_closed_embedding && fprime_proper && pullback && jointly_surjective &&
               off_locus_bijection;
    }
};

struct PushoutResult {
    DefinableSet space; // Y, embedded in R^(k + 1 + mB)
    DefinableMap jprime; // X -> Y, closed embedding
    DefinableMap fprime; // B -> Y, proper
    PushoutCertificate certificate;
    // Invariants computed from the certified partition Y = j'(X) + f'(B - j(A)).
    long euler = 0;
    int dim = -1;
    // The space is definably compact by construction (image of a polytope
    // under a map whose continuity is part of the construction).
    bool polytope_certified = false;
};

// Pushout of a closed embedding j : A -> B along a continuous map
// f : A -> X between polytopes, by the graph-embedding recipe
//   x |-> (x, 0, 0)   and   b |-> (F(b), d(b, jA), d(b, jA) * b)
// with d the Chebyshev distance and F a continuous extension of f o j^-1.
// When `ext` is absent, a radial extension is built for B a simplex (or a
// tagged coproduct of equal-dimension simplices) with A its boundary;
// otherwise ExtensionRequired is thrown.
PushoutResult closed_by_proper_pushout(Engine& eng, const DefinableMap& j,
                                       const DefinableMap& f,
                                       const std::optional<DefinableMap>& ext = std::nullopt);

// The five first-order conditions certifying a commuting square as a
// closed-by-proper pushout (distinguished square).
PushoutCertificate distinguished_square_checks(Engine& eng, const DefinableMap& j,
                                               const DefinableMap& f, const DefinableMap& jprime,
                                               const DefinableMap& fprime);
bool verify_distinguished_square(Engine& eng, const DefinableMap& j, const DefinableMap& f,
                                 const DefinableMap& jprime, const DefinableMap& fprime);

// q is a proper surjection whose kernel pair is exactly e (a subset of X x X).
bool verify_proper_quotient(Engine& eng, const DefinableMap& q, const DefinableSet& e);

// Chebyshev (sup-norm) distance to a nonempty subset a of R^n, as the graph
// of a map b |-> d(b, a) on the ambient set `over`.
DefinableMap chebyshev_distance_map(Engine& eng, const DefinableSet& over,
                                    const DefinableSet& a);

struct SplittingSequence {
    // Z_0 = X contains Z_1 contains ... contains Z_{len+1} = empty.
    std::vector<DefinableSet> filtration;
    // sections[i] is a continuous section of f over Z_i - Z_{i+1}.
    std::vector<DefinableMap> sections;

    unsigned length() const {
        return filtration.size() >= 2 ? static_cast<unsigned>(filtration.size() - 2) : 0;
    }
};

SplittingSequence construct_splitting_sequence(Engine& eng, const DefinableMap& f);
bool verify_splitting_sequence(Engine& eng, const DefinableMap& f, const SplittingSequence& s);

} // namespace tame

#endif
