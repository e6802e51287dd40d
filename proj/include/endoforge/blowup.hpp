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

// Degree-reducing blow-up of an arc-colored digraph.
//
// Every base vertex v becomes a closed walk through the copies (v,1+,c) and
// (v,1-,c); the original c-arcs run between the copies (v,2+,c) and
// (w,2-,c), each hanging off the walk by a 0-arc.

#ifndef ENDOFORGE_BLOWUP_HPP_
#define ENDOFORGE_BLOWUP_HPP_

#include <optional>
#include <span>
#include <vector>

#include "endoforge/graph.hpp"

namespace endoforge {

enum class BlowupSlot { kOnePlus = 0, kTwoPlus = 1, kOneMinus = 2, kTwoMinus = 3 };

struct BlowupVertex {
  Vertex base = 0;
  BlowupSlot slot = BlowupSlot::kOnePlus;
  Color color = 0;  // index into the base digraph's colors
};

class BlowupLayout {
 public:
  BlowupLayout() = default;
  BlowupLayout(std::size_t base_vertices, std::size_t base_colors);

  std::size_t base_vertices() const { return base_vertices_; }
  std::size_t base_colors() const { return base_colors_; }
  std::optional<Vertex> find(Vertex base, BlowupSlot slot, Color c) const;
  Vertex at(Vertex base, BlowupSlot slot, Color c) const;
  const BlowupVertex& describe(Vertex v) const { return vertices_[v]; }
  std::size_t size() const { return vertices_.size(); }

  // Color indices in the blown-up digraph.
  static Color zero_color() { return 0; }
  static Color base_color(Color c) { return 1 + 3 * c; }
  static Color plus_color(Color c) { return 2 + 3 * c; }
  static Color minus_color(Color c) { return 3 + 3 * c; }

  Vertex add(Vertex base, BlowupSlot slot, Color c);

 private:
  std::size_t key(Vertex base, BlowupSlot slot, Color c) const {
    return (static_cast<std::size_t>(base) * 4 + static_cast<std::size_t>(slot)) *
               base_colors_ + c;
  }
  std::size_t base_vertices_ = 0;
  std::size_t base_colors_ = 0;
  std::vector<Vertex> index_;
  std::vector<BlowupVertex> vertices_;
};

struct Blowup {
  ArcColoredDigraph digraph;
  BlowupLayout layout;
};

// Colors of the result: 0, then c, c+, c- for every base color c in order.
// The copy (v,2+,c) exists only if v has an outgoing c-arc and (v,2-,c) only
// if v has an incoming c-arc.
Blowup blow_up(const ArcColoredDigraph& d);

// The closed walk (v,1+,1) ... (v,1+,|K|) (v,1-,1) ... (v,1-,|K|) (v,1+,1).
Walk blowup_walk(const Blowup& b, Vertex v);

// phi'((v,slot,c)) = (phi(v),slot,c). Throws NotEndomorphism if phi is not
// an endomorphism of d.
std::vector<Vertex> lift_endomorphism(const ArcColoredDigraph& d,
                                      const Blowup& b,
                                      std::span<const Vertex> phi);

}  // namespace endoforge

#endif  // ENDOFORGE_BLOWUP_HPP_
