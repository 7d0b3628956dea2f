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

#ifndef TAME_REAL_SIMPLEX_HPP
#define TAME_REAL_SIMPLEX_HPP

#include <vector>

#include "logic/set.hpp"

namespace tame {

// The definable n-simplex { 0 <= t_1 <= ... <= t_n <= 1 } in R^n; arity 0
// gives the one-point space.
DefinableSet simplex_polytope(unsigned n);

// Vertex i (0 <= i <= n): the last i coordinates equal one.
std::vector<Rational> simplex_vertex(unsigned n, unsigned i);

// Barycenter of the n-simplex: coordinate k equals k/(n+1) (1-based k).
std::vector<Rational> simplex_barycenter(unsigned n);

// The subsimplex spanned by a set of vertices (as a face of the n-simplex):
// the convex hull of { e_i : i in vertices }.
DefinableSet simplex_face(unsigned n, const std::vector<unsigned>& vertices);

// Boundary: union of all facets.
DefinableSet simplex_boundary(unsigned n);

} // namespace tame

#endif
