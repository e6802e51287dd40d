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

#include "endoforge/blowup.hpp"

#include <limits>
#include <string>

#include "endoforge/error.hpp"

namespace endoforge {
namespace {

constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();

const char* slot_name(BlowupSlot s) {
  switch (s) {
    case BlowupSlot::kOnePlus: return "1+";
    case BlowupSlot::kTwoPlus: return "2+";
    case BlowupSlot::kOneMinus: return "1-";
    case BlowupSlot::kTwoMinus: return "2-";
  }
  return "?";
}

}  // namespace

BlowupLayout::BlowupLayout(std::size_t base_vertices, std::size_t base_colors)
    : base_vertices_(base_vertices),
      base_colors_(base_colors),
      index_(base_vertices * 4 * base_colors, kAbsent) {}

std::optional<Vertex> BlowupLayout::find(Vertex base, BlowupSlot slot,
                                         Color c) const {
  if (base >= base_vertices_ || c >= base_colors_) return std::nullopt;
  const Vertex v = index_[key(base, slot, c)];
  if (v == kAbsent) return std::nullopt;
  return v;
}

Vertex BlowupLayout::at(Vertex base, BlowupSlot slot, Color c) const {
  auto v = find(base, slot, c);
  if (!v) throw Error(ErrorCode::kInvariantViolated, "missing blow-up copy");
  return *v;
}

Vertex BlowupLayout::add(Vertex base, BlowupSlot slot, Color c) {
  const Vertex v = static_cast<Vertex>(vertices_.size());
  index_[key(base, slot, c)] = v;
  vertices_.push_back({base, slot, c});
  return v;
}

Blowup blow_up(const ArcColoredDigraph& d) {
  const std::size_t k = d.num_colors();
  if (k == 0) throw Error(ErrorCode::kNoColors, "blow-up needs a color");
  const std::size_t n = d.num_vertices();
  const DegreeStats deg = degree_stats(d);
  BlowupLayout layout(n, k);
  DigraphBuilder b;
  for (Vertex v = 0; v < n; ++v) {
    for (int s = 0; s < 4; ++s) {
      const auto slot = static_cast<BlowupSlot>(s);
      for (Color c = 0; c < k; ++c) {
        if (slot == BlowupSlot::kTwoPlus && deg.out_by_color[c][v] == 0) continue;
        if (slot == BlowupSlot::kTwoMinus && deg.in_by_color[c][v] == 0) continue;
        layout.add(v, slot, c);
        b.add_vertex("(" + d.vertex_label(v) + "," + slot_name(slot) + "," +
                     d.color_label(c) + ")");
      }
    }
  }
  b.add_color("0");
  for (Color c = 0; c < k; ++c) {
    b.add_color(d.color_label(c));
    b.add_color(d.color_label(c) + "+");
    b.add_color(d.color_label(c) + "-");
  }
  using S = BlowupSlot;
  for (Vertex v = 0; v < n; ++v) {
    for (Color c = 0; c < k; ++c) {
      if (auto two = layout.find(v, S::kTwoPlus, c))
        b.add_arc(BlowupLayout::zero_color(), layout.at(v, S::kOnePlus, c), *two);
      if (auto two = layout.find(v, S::kTwoMinus, c))
        b.add_arc(BlowupLayout::zero_color(), *two, layout.at(v, S::kOneMinus, c));
      const bool last = c + 1 == k;
      b.add_arc(BlowupLayout::plus_color(c), layout.at(v, S::kOnePlus, c),
                last ? layout.at(v, S::kOneMinus, 0)
                     : layout.at(v, S::kOnePlus, c + 1));
      b.add_arc(BlowupLayout::minus_color(c), layout.at(v, S::kOneMinus, c),
                last ? layout.at(v, S::kOnePlus, 0)
                     : layout.at(v, S::kOneMinus, c + 1));
    }
  }
  for (Color c = 0; c < k; ++c)
    for (const Arc& a : d.arcs(c))
      b.add_arc(BlowupLayout::base_color(c), layout.at(a.from, S::kTwoPlus, c),
                layout.at(a.to, S::kTwoMinus, c));
  return Blowup{std::move(b).build(), std::move(layout)};
}

Walk blowup_walk(const Blowup& b, Vertex v) {
  const std::size_t k = b.layout.base_colors();
  Walk w;
  for (Color c = 0; c < k; ++c) {
    w.vertices.push_back(b.layout.at(v, BlowupSlot::kOnePlus, c));
    w.colors.push_back(BlowupLayout::plus_color(c));
  }
  for (Color c = 0; c < k; ++c) {
    w.vertices.push_back(b.layout.at(v, BlowupSlot::kOneMinus, c));
    w.colors.push_back(BlowupLayout::minus_color(c));
  }
  w.vertices.push_back(b.layout.at(v, BlowupSlot::kOnePlus, 0));
  return w;
}

std::vector<Vertex> lift_endomorphism(const ArcColoredDigraph& d,
                                      const Blowup& b,
                                      std::span<const Vertex> phi) {
  if (!is_endomorphism(d, phi)) {
    throw Error(ErrorCode::kNotEndomorphism, "map is not an endomorphism of D");
  }
  std::vector<Vertex> out(b.layout.size());
  for (Vertex v = 0; v < out.size(); ++v) {
    const BlowupVertex& bv = b.layout.describe(v);
    out[v] = b.layout.at(phi[bv.base], bv.slot, bv.color);
  }
  return out;
}

}  // namespace endoforge
