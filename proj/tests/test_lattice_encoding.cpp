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
#include "endoforge/endo.hpp"
#include "endoforge/error.hpp"
#include "endoforge/lattice_encoding.hpp"
#include "oracles.hpp"

using namespace endoforge;

namespace {

// 0 < a, b < 1
Lattice diamond() {
  return Lattice::from_poset(
      Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"}));
}

Lattice chain(std::size_t n) { return Lattice::from_poset(chain_poset(n)); }

constexpr Element Z = kZeroPrime;

void check_encoding(const LatticeEncoding& enc, bool with_oracle) {
  const Lattice& l = enc.lattice();
  const auto& d = enc.digraph();
  const auto st = degree_stats(d);
  CHECK(st.max_color_degree <= 2);
  std::vector<VertexMap> phis;
  for (Element w = 0; w < l.size(); ++w) {
    const auto p = enc.phi(w);
    CHECK(is_endomorphism(d, p));
    CHECK(compose(p, p) == p);
    CHECK(enc.fixed_petal_ideal(p) == w);
    phis.push_back(p);
  }
  for (Element v = 0; v < l.size(); ++v)
    for (Element w = 0; w < l.size(); ++w)
      CHECK(compose(phis[v], phis[w]) == phis[l.meet(v, w)]);
  for (Vertex v = 0; v < d.num_vertices(); ++v) CHECK(phis[l.top()][v] == v);

  const auto t = enumerate_endomorphisms(d);
  CHECK(t.size() == l.size());
  for (const auto& p : phis) CHECK(t.find(p));
  if (with_oracle) {
    const auto maps = oracle::backtrack_endomorphisms(d);
    CHECK(maps.size() == l.size());
  }
}

}  // namespace

TEST_SUITE("lattice_encoding") {

TEST_CASE("rooted chains of the diamond") {
  const Lattice l = diamond();
  const auto ext = LinearExtension::canonical(l.poset());
  const ExtendedOrder o(l, ext);
  const std::vector<Chain> expect{{0},       {0, 1},    {Z, 1},    {0, 2},
                                  {Z, 2},    {0, 3},    {Z, 3},    {0, 1, 3},
                                  {Z, 1, 3}, {0, 2, 3}, {Z, 2, 3}};
  CHECK(rooted_chains(o) == expect);
  for (const auto& q : expect) CHECK(o.is_rooted_chain(q));
  CHECK_FALSE(o.is_rooted_chain({Z}));
  CHECK_FALSE(o.is_rooted_chain({1, 2}));
  CHECK_FALSE(o.is_rooted_chain({1, 3}));
  CHECK(o.leq(Z, 1));
  CHECK_FALSE(o.leq(Z, 0));
  CHECK_FALSE(o.leq(0, Z));
}

TEST_CASE("bracket and tilde") {
  const Lattice l = diamond();
  const auto ext = LinearExtension::canonical(l.poset());
  const ExtendedOrder o(l, ext);
  CHECK(bracket(o, {0, 2}, 1) == Chain{0});
  CHECK(bracket(o, {0, 1}, 2) == Chain{0, 1});
  CHECK(bracket(o, {Z, 2}, 1) == Chain{Z, 2});
  CHECK(bracket(o, {Z, 1}, 2) == Chain{0});
  CHECK(tilde(o, {0, 1}) == Chain{Z, 1});
  CHECK(tilde(o, {0}) == Chain{0});
  CHECK_THROWS_AS(tilde(o, {1, 3}), Error);
}

TEST_CASE("walks") {
  const Lattice l = diamond();
  const LatticeEncoding enc(l, LinearExtension::canonical(l.poset()));
  for (const auto& q : enc.chains()) {
    const Walk w = enc.base_walk(q);
    CHECK(is_walk(enc.digraph(), w));
    CHECK(w.length() == l.size());
  }
  for (Element x = 0; x < l.size(); ++x) {
    const Walk p = enc.petal(x);
    CHECK(p.closed());
    CHECK(is_walk(enc.digraph(), p));
  }
  CHECK(is_walk(enc.digraph(), enc.composite_walk({1, 3})));
  CHECK_THROWS_AS(enc.composite_walk({0, 1}), Error);
}

TEST_CASE("diamond") {
  const Lattice l = diamond();
  const LatticeEncoding enc(l, LinearExtension::canonical(l.poset()));
  check_encoding(enc, false);
}

TEST_CASE("small chains against the backtracking oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Lattice l = chain(n);
    const LatticeEncoding enc(l, LinearExtension::canonical(l.poset()));
    check_encoding(enc, true);
  }
}

TEST_CASE("all lattices up to five elements") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& rel : oracle::lattices_up_to_iso(n)) {
      const Lattice l = Lattice::from_poset(Poset::from_relation(rel));
      const LatticeEncoding enc(l, LinearExtension::canonical(l.poset()));
      check_encoding(enc, false);
    }
  }
}

TEST_CASE("boolean lattice B_2 with a different linear extension") {
  const Lattice l = diamond();
  const auto ext = LinearExtension::from_order(l.poset(), {0, 2, 1, 3});
  const LatticeEncoding enc(l, ext);
  check_encoding(enc, false);
}

TEST_CASE("non-principal fixed petals") {
  const Lattice l = diamond();
  const LatticeEncoding enc(l, LinearExtension::canonical(l.poset()));
  // A map fixing nothing but the bottom petal is phi_0; a map that is not an
  // endomorphism but fixes the petals of a and b has no principal ideal.
  std::vector<Vertex> m = enc.phi(3);
  const auto p1 = enc.petal(3);
  const auto p0 = enc.petal(0);
  for (Vertex v : p1.vertices) m[v] = p0.front();
  CHECK_THROWS_AS(enc.fixed_petal_ideal(m), Error);
}

}  // TEST_SUITE
