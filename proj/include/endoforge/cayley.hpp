// Copyright 2026 The endoforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Colored Cayley graphs of finite monoids.

#ifndef ENDOFORGE_CAYLEY_HPP_
#define ENDOFORGE_CAYLEY_HPP_

#include <span>

#include "endoforge/algebra.hpp"
#include "endoforge/graph.hpp"

namespace endoforge {

// Right Cayley graph: vertex set M, one color per generator c with arcs
// (x, x*c). The generators must generate M.
ArcColoredDigraph cayley_colored(const Monoid& m, std::span<const Element> gens);

// Adds a loop color after the generator colors and subdivides every arc into
// a two-step path. Color order: c1, c1', c2, c2', ..., loop, loop'. The first
// n vertices are the monoid elements; subdivision vertices follow in color
// order, then arc order.
ArcColoredDigraph augment_cayley(const Monoid& m, std::span<const Element> gens);

}  // namespace endoforge

#endif  // ENDOFORGE_CAYLEY_HPP_
