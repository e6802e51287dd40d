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

#include "doctest.h"
#include "endoforge/cayley.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/error.hpp"
#include "oracles.hpp"

using namespace endoforge;

namespace {

bool end_isomorphic_to(const ArcColoredDigraph& d, const Monoid& m) {
  const auto maps = oracle::backtrack_endomorphisms(d);
  if (maps.size() != m.size()) return false;
  const auto table = oracle::composition_table(maps);
  return table && oracle::isomorphic(*table, oracle::identity_of(maps), m.rows(),
                                     m.identity());
}

}  // namespace

TEST_SUITE("cayley") {

TEST_CASE("trivial monoid") {
  const auto d = cayley_colored(cyclic_group(1), {});
  CHECK(d.num_vertices() == 1);
  CHECK(d.num_colors() == 0);
  const auto a = augment_cayley(cyclic_group(1), {});
  CHECK(a.num_vertices() == 2);
  CHECK(a.num_arcs() == 2);
  CHECK(a.num_colors() == 2);
}

TEST_CASE("Z3 gives a directed 3-cycle") {
  const Element g[] = {1};
  const auto d = cayley_colored(cyclic_group(3), g);
  CHECK(d.num_colors() == 1);
  CHECK(d.num_arcs() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(d.has_arc(0, v, (v + 1) % 3));
  CHECK(oracle::all_endomorphisms(d).size() == 3);
}

TEST_CASE("2-chain meet monoid with generator 0") {
  const Monoid m = validate_monoid({{0, 1}, {1, 1}}, 0);  // 0 = top, 1 = bottom
  const Element g[] = {1};
  const auto d = cayley_colored(m, g);
  CHECK(d.num_arcs() == 2);
  CHECK(d.has_arc(0, 0, 1));
  CHECK(d.has_arc(0, 1, 1));
}

TEST_CASE("generator checks") {
  const Element none[] = {0};
  try {
    cayley_colored(cyclic_group(3), none);
    FAIL("identity alone accepted as generating Z3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotGenerating);
  }
  const Element both[] = {1, 0};
  try {
    augment_cayley(cyclic_group(2), both);
    FAIL("m > n - 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooManyGenerators);
  }
}

TEST_CASE("augmentation sizes for Z2 and Z3") {
  const Element g[] = {1};
  const auto z2 = augment_cayley(cyclic_group(2), g);
  CHECK(z2.num_vertices() == 6);
  CHECK(z2.num_arcs() == 8);
  CHECK(z2.num_colors() == 4);
  const auto z3 = augment_cayley(cyclic_group(3), g);
  CHECK(z3.num_vertices() == 9);
  CHECK(z3.num_arcs() == 12);
  CHECK(end_isomorphic_to(z3, cyclic_group(3)));
}

TEST_CASE("all monoids up to order 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : oracle::monoids_up_to_iso(n)) {
      const Monoid m = Monoid::from_table(t, 0);
      const auto gens = minimal_generating_set(m);
      const std::size_t k = gens.size();
      const auto d = cayley_colored(m, gens);
      const auto st = degree_stats(d);
      for (Color c = 0; c < d.num_colors(); ++c)
        for (Vertex v = 0; v < n; ++v) CHECK(st.out_by_color[c][v] == 1);
      CHECK(st.max_color_degree <= right_cancellativity(m));
      CHECK(end_isomorphic_to(d, m));

      const auto a = augment_cayley(m, gens);
      const auto sa = degree_stats(a);
      CHECK_FALSE(a.has_loops());
      CHECK(sa.min_out >= 1);
      CHECK(sa.min_in >= 1);
      CHECK(a.num_vertices() == n * (k + 2));
      CHECK(a.num_arcs() == 2 * n * (k + 1));
      CHECK(a.num_colors() == 2 * (k + 1));
      // Engine here: the augmented graphs reach 20 vertices.
      const auto ta = enumerate_endomorphisms(a);
      CHECK(ta.size() == n);
      CHECK(oracle::isomorphic(endo_monoid_table(ta), m));
    }
  }
}

TEST_CASE("left Cayley graph through the opposite monoid") {
  // Left-zero band: its left Cayley graph is the right Cayley graph of the
  // opposite monoid, whose End is the opposite again.
  const Monoid lz = validate_monoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  const Monoid op = lz.opposite();
  const auto gens = minimal_generating_set(op);
  const auto d = cayley_colored(op, gens);
  CHECK(end_isomorphic_to(d, op));
  CHECK_FALSE(oracle::isomorphic(lz, op));
}

}  // TEST_SUITE
