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

#include <queue>

#include "doctest.h"
#include "endoforge/cayley.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/error.hpp"
#include "endoforge/sip.hpp"
#include "oracles.hpp"

using namespace endoforge;

namespace {

std::vector<std::size_t> distances(const SimpleGraph& g, Vertex s) {
  std::vector<std::size_t> d(g.num_vertices(), SIZE_MAX);
  std::queue<Vertex> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u))
      if (d[v] == SIZE_MAX) d[v] = d[u] + 1, q.push(v);
  }
  return d;
}

ArcColoredDigraph directed_cycle(std::size_t n) {
  DigraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
  const Color c = b.add_color("1");
  for (Vertex i = 0; i < n; ++i) b.add_arc(c, i, static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

}  // namespace

TEST_SUITE("sip") {

TEST_CASE("gadget shape") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const HPGraph h = hp_graph(k);
    CAPTURE(k);
    CHECK(h.graph.num_vertices() == 6 * k + 7);
    CHECK(h.graph.num_edges() == 6 * k + 9);
    CHECK(h.graph.max_degree() == 3);
    CHECK(h.graph.min_degree() == 2);
    CHECK(oracle::girth(h.graph) == 2 * k + 5);
    for (Vertex b : h.branch) CHECK(h.graph.degree(b) == 3);
    for (const auto& z : h.faces) {
      CHECK(z.size() == 2 * k + 5);
      for (std::size_t i = 0; i < z.size(); ++i)
        CHECK(h.graph.adjacent(z[i], z[(i + 1) % z.size()]));
    }
  }
}

TEST_CASE("gadget is rigid") {
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto maps = oracle::backtrack_endomorphisms(hp_graph(k).graph);
    CHECK(maps.size() == 1);
  }
  for (std::size_t k = 3; k <= 6; ++k)
    CHECK(enumerate_endomorphisms(hp_graph(k).graph).size() == 1);
}

TEST_CASE("anchors are far from the branch vertices") {
  for (std::size_t k = 2; k <= 8; ++k) {
    const HPGraph h = hp_graph(k);
    const auto d1 = distances(h.graph, h.branch[1]);
    const auto d2 = distances(h.graph, h.branch[2]);
    const auto d3 = distances(h.graph, h.branch[3]);
    std::size_t expect_plus = 0, expect_minus = 0;
    for (Vertex v : h.faces[0])
      if (4 * d1[v] >= h.girth() && 4 * d2[v] >= h.girth()) ++expect_plus;
    for (Vertex v : h.faces[1])
      if (4 * d2[v] >= h.girth() && 4 * d3[v] >= h.girth()) ++expect_minus;
    CHECK(h.h_plus.size() == expect_plus);
    CHECK(h.h_minus.size() == expect_minus);
    CHECK(gadget_admits(h, std::min(expect_plus, expect_minus)));
    CHECK_FALSE(gadget_admits(h, std::min(expect_plus, expect_minus) + 1));
    // The far parts grow with k.
    CHECK(h.h_plus.size() + 1 >= k);
  }
}

TEST_CASE("choose_k") {
  std::size_t prev = 0;
  for (std::size_t colors = 1; colors <= 40; ++colors) {
    const std::size_t k = choose_k(colors);
    CHECK(k >= 2);
    CHECK(k >= prev);
    CHECK(gadget_admits(hp_graph(k), colors));
    if (k > 2) CHECK_FALSE(gadget_admits(hp_graph(k - 1), colors));
    prev = k;
  }
}

TEST_CASE("preconditions") {
  ArcColoredDigraph loop({"v"}, {"1"}, {{{0, 0}}});
  ArcColoredDigraph sink({"u", "v"}, {"1"}, {{{0, 1}}});
  const auto expect = [](auto&& f, ErrorCode code) {
    try {
      f();
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect([&] { sip_product(loop); }, ErrorCode::kHasLoops);
  expect([&] { sip_product(sink); }, ErrorCode::kMinDegreeViolation);
  expect([&] { sip_product(directed_cycle(3), 1); }, ErrorCode::kKTooSmall);
  expect([&] { hp_graph(0); }, ErrorCode::kKTooSmall);
  // Too many colors for H^2.
  DigraphBuilder b;
  b.add_vertex("u");
  b.add_vertex("v");
  for (int c = 0; c < 30; ++c) {
    const Color col = b.add_color(std::to_string(c));
    b.add_arc(col, 0, 1);
    b.add_arc(col, 1, 0);
  }
  const auto many = std::move(b).build();
  expect([&] { sip_product(many, 2); }, ErrorCode::kKTooSmall);
  CHECK_NOTHROW(sip_product(many));
}

TEST_CASE("wiring") {
  const Element g[] = {1};
  const auto d = augment_cayley(cyclic_group(3), g);
  const SipProduct s = sip_product(d);
  const std::size_t hv = 6 * s.gadget.k + 7;
  CHECK(s.graph.num_vertices() == d.num_vertices() + d.num_arcs() * hv);
  CHECK(s.graph.num_edges() == d.num_arcs() * (6 * s.gadget.k + 11));
  // Base vertices keep their total degree; gadget vertices gain at most one.
  CHECK(s.graph.max_degree() == std::max<std::size_t>(3, degree_stats(d).max_degree));
  CHECK(oracle::girth(s.gadget.graph) == s.gadget.girth());
  for (Color c = 0; c < d.num_colors(); ++c) {
    for (std::size_t i = 0; i < d.arcs(c).size(); ++i) {
      const Arc a = d.arcs(c)[i];
      CHECK(s.graph.adjacent(a.from, s.copy_vertex(c, i, s.anchor_plus[c])));
      CHECK(s.graph.adjacent(a.to, s.copy_vertex(c, i, s.anchor_minus[c])));
    }
  }
  // Distinct colors use distinct anchors.
  for (Color c = 1; c < d.num_colors(); ++c) {
    CHECK(s.anchor_plus[c] != s.anchor_plus[c - 1]);
    CHECK(s.anchor_minus[c] != s.anchor_minus[c - 1]);
  }
  const auto maps = enumerate_endomorphisms(s.graph);
  CHECK(maps.size() == 3);
}

TEST_CASE("augmented trivial monoid yields a rigid graph") {
  const auto d = augment_cayley(cyclic_group(1), {});
  const SipProduct s = sip_product(d);
  CHECK(enumerate_endomorphisms(s.graph).size() == 1);
}

TEST_CASE("End of the directed 3-cycle survives") {
  const auto d = directed_cycle(3);
  const SipProduct s = sip_product(d);
  const auto t = enumerate_endomorphisms(s.graph);
  REQUIRE(t.size() == 3);
  CHECK(oracle::isomorphic(endo_monoid_table(t), cyclic_group(3)));
  for (const auto& phi : oracle::all_endomorphisms(d)) {
    const auto lifted = lift_sip(d, s, phi);
    CHECK(is_endomorphism(s.graph, lifted));
    CHECK(t.find(lifted));
  }
  const std::vector<Vertex> bad{0, 0, 0};
  CHECK_THROWS_AS(lift_sip(d, s, bad), Error);
}

}  // TEST_SUITE
