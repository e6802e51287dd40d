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

#include <algorithm>

#include "doctest.h"
#include "endoforge/blowup.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/error.hpp"
#include "oracles.hpp"

using namespace endoforge;

TEST_SUITE("blowup") {

TEST_CASE("single loop") {
  ArcColoredDigraph d({"v"}, {"1"}, {{{0, 0}}});
  const Blowup b = blow_up(d);
  CHECK(b.digraph.num_vertices() == 4);
  CHECK_FALSE(b.digraph.has_loops());
  const auto s = degree_stats(b.digraph);
  CHECK(s.min_out == 1);
  CHECK(s.min_in == 1);
  CHECK(b.digraph.num_colors() == 4);
  for (auto slot : {BlowupSlot::kOnePlus, BlowupSlot::kTwoPlus,
                    BlowupSlot::kOneMinus, BlowupSlot::kTwoMinus}) {
    CHECK(b.layout.find(0, slot, 0).has_value());
  }
}

TEST_CASE("directed 2-cycle") {
  ArcColoredDigraph d({"u", "v"}, {"1"}, {{{0, 1}, {1, 0}}});
  const Blowup b = blow_up(d);
  CHECK(degree_stats(b.digraph).max_degree == 3);
  CHECK(enumerate_endomorphisms(b.digraph).size() == 2);
  const std::vector<Vertex> swap{1, 0};
  const auto lifted = lift_endomorphism(d, b, swap);
  for (Vertex x = 0; x < b.digraph.num_vertices(); ++x) {
    const auto& dx = b.layout.describe(x);
    const auto& dy = b.layout.describe(lifted[x]);
    CHECK(dy.base == swap[dx.base]);
    CHECK(dy.slot == dx.slot);
    CHECK(dy.color == dx.color);
  }
}

TEST_CASE("slot 2 copies only where the color has arcs") {
  // Color 0: u -> v; color 1: v -> v.
  ArcColoredDigraph d({"u", "v"}, {"a", "b"}, {{{0, 1}}, {{1, 1}}});
  const Blowup b = blow_up(d);
  CHECK(b.layout.find(0, BlowupSlot::kTwoPlus, 0).has_value());
  CHECK_FALSE(b.layout.find(0, BlowupSlot::kTwoMinus, 0).has_value());
  CHECK_FALSE(b.layout.find(0, BlowupSlot::kTwoPlus, 1).has_value());
  CHECK(b.layout.find(1, BlowupSlot::kTwoPlus, 1).has_value());
  CHECK(b.layout.find(1, BlowupSlot::kTwoMinus, 0).has_value());
}

TEST_CASE("base walk per vertex") {
  ArcColoredDigraph d({"u", "v"}, {"a", "b", "c"}, {{{0, 1}}, {{1, 0}}, {}});
  const Blowup b = blow_up(d);
  for (Vertex v = 0; v < 2; ++v) {
    const Walk w = blowup_walk(b, v);
    CHECK(w.closed());
    CHECK(w.length() == 6);
    CHECK(is_walk(b.digraph, w));
    CHECK(w.front() == b.layout.at(v, BlowupSlot::kOnePlus, 0));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(w.vertices[i] == b.layout.at(v, BlowupSlot::kOnePlus, i));
      CHECK(w.vertices[3 + i] == b.layout.at(v, BlowupSlot::kOneMinus, i));
    }
  }
}

TEST_CASE("preconditions") {
  ArcColoredDigraph none({"v"}, {}, {});
  try {
    blow_up(none);
    FAIL("colorless digraph accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoColors);
  }
  ArcColoredDigraph d({"u", "v"}, {"1"}, {{{0, 1}}});
  const Blowup b = blow_up(d);
  const std::vector<Vertex> bad{1, 0};
  try {
    lift_endomorphism(d, b, bad);
    FAIL("non-endomorphism lifted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotEndomorphism);
  }
  const std::vector<Vertex> id{0, 1};
  const auto lid = lift_endomorphism(d, b, id);
  for (Vertex x = 0; x < lid.size(); ++x) CHECK(lid[x] == x);
}

TEST_CASE("End is preserved on random small digraphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t colors = 1 + trial % 3;
    const auto d = oracle::random_digraph(rng, n, colors, 0.3, true);
    const Blowup b = blow_up(d);
    const auto sd = degree_stats(d);
    const auto sb = degree_stats(b.digraph);
    CHECK_FALSE(b.digraph.has_loops());
    CHECK(sb.min_out == 1);
    CHECK(sb.min_in == 1);
    CHECK(sb.max_degree <= std::max<std::size_t>(sd.max_color_degree + 1, 3));
    for (Vertex x = 0; x < b.digraph.num_vertices(); ++x) {
      const auto& dx = b.layout.describe(x);
      const std::size_t deg = sb.out_degree[x] + sb.in_degree[x];
      if (dx.slot == BlowupSlot::kTwoPlus)
        CHECK(deg == sd.out_by_color[dx.color][dx.base] + 1);
      else if (dx.slot == BlowupSlot::kTwoMinus)
        CHECK(deg == sd.in_by_color[dx.color][dx.base] + 1);
      else
        CHECK(deg <= 3);
    }

    const auto end_d = oracle::all_endomorphisms(d);
    const auto end_b = enumerate_endomorphisms(b.digraph);
    CHECK(end_b.size() == end_d.size());
    for (const auto& phi : end_d) CHECK(end_b.find(lift_endomorphism(d, b, phi)));
    // Every endomorphism sends a (u,1+,first color) to some (v,1+,first color).
    for (const auto& f : end_b.maps()) {
      for (Vertex u = 0; u < n; ++u) {
        const auto& img = b.layout.describe(f[b.layout.at(u, BlowupSlot::kOnePlus, 0)]);
        CHECK(img.slot == BlowupSlot::kOnePlus);
        CHECK(img.color == 0);
      }
    }
  }
}

}  // TEST_SUITE
