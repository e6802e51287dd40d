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

// The rigid gadget H^k and the sip-product of a colored digraph.
//
// H^k is K4 on b0..b3 with the edges b0b2, b0b3, b1b2, b2b3, b3b1 subdivided
// 1, 2, 2k+1, 2k-1 and 2k times. All three bounded faces have length 2k+5,
// which is the girth. Replacing every c-arc (x,y) of a digraph by a copy of
// H^k hooked to x at c+ and to y at c- gives a simple graph with the same
// endomorphism monoid.

#ifndef ENDOFORGE_SIP_HPP_
#define ENDOFORGE_SIP_HPP_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "endoforge/graph.hpp"

namespace endoforge {

struct HPGraph {
  std::size_t k = 0;
  SimpleGraph graph;
  std::array<Vertex, 4> branch{};
  // Z1 = b0 b1 [b1..b2 path] b2 s b0; Z2 = b0 s b2 [b2..b3 path] b3 t2 t1 b0;
  // Z3 = b0 t1 t2 b3 [b3..b1 path] b1 b0. Closing vertex not repeated.
  std::array<std::vector<Vertex>, 3> faces;
  // Vertices of Z1 (resp. Z2) at distance >= girth/4 from b1 and b2 (resp.
  // b2 and b3), in face order starting next to b1 (resp. b2).
  std::vector<Vertex> h_plus, h_minus;

  std::size_t girth() const { return 2 * k + 5; }
};

HPGraph hp_graph(std::size_t k);

// True iff H+ and H- each lie on a subpath of their face avoiding the branch
// vertices and hold at least `num_colors` vertices.
bool gadget_admits(const HPGraph& h, std::size_t num_colors);

// Smallest k >= 2 with min(|H+|, |H-|) >= num_colors.
std::size_t choose_k(std::size_t num_colors);

struct SipProduct {
  SimpleGraph graph;
  HPGraph gadget;
  std::size_t base_vertices = 0;
  // Gadget-local anchors per color.
  std::vector<Vertex> anchor_plus, anchor_minus;
  // first_copy[c] = index of the first arc of color c among all arcs; the
  // copy for arc i of color c starts at base_vertices + (first_copy[c]+i)*|H|.
  std::vector<std::size_t> first_copy;

  Vertex copy_vertex(Color c, std::size_t arc, Vertex local) const {
    return static_cast<Vertex>(
        base_vertices +
        (first_copy[c] + arc) * gadget.graph.num_vertices() + local);
  }
};

// k = nullopt picks choose_k(|K|).
SipProduct sip_product(const ArcColoredDigraph& d,
                       std::optional<std::size_t> k = std::nullopt);

// Lifts an endomorphism of d: base vertices by phi, the copy of arc a by the
// identity onto the copy of phi(a).
std::vector<Vertex> lift_sip(const ArcColoredDigraph& d, const SipProduct& s,
                             std::span<const Vertex> phi);

}  // namespace endoforge

#endif  // ENDOFORGE_SIP_HPP_
