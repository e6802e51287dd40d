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

#include <cstdlib>

#include "doctest.h"
#include "endoforge/cayley.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/error.hpp"
#include "endoforge/sip.hpp"
#include "oracles.hpp"

using namespace endoforge;

namespace {

SimpleGraph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return SimpleGraph(std::vector<std::string>(n), std::move(e));
}

SimpleGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return SimpleGraph(std::vector<std::string>(n), std::move(e));
}

bool same(const TransformationMonoid& t, std::vector<oracle::Map> maps) {
  std::sort(maps.begin(), maps.end());
  return t.maps() == maps;
}

}  // namespace

TEST_SUITE("endo") {

TEST_CASE("odd cycles") {
  CHECK(enumerate_endomorphisms(cycle(3)).size() == 6);
  CHECK(enumerate_endomorphisms(cycle(5)).size() == 10);
  CHECK(same(enumerate_endomorphisms(cycle(7)), oracle::all_endomorphisms(cycle(7))));
  EndoStats st;
  enumerate_endomorphisms(cycle(5), {}, &st);
  CHECK(st.odd_girth == 5);
}

TEST_CASE("even cycle collapses onto an edge") {
  const auto t = enumerate_endomorphisms(cycle(4));
  CHECK(same(t, oracle::all_endomorphisms(cycle(4))));
  CHECK(retractions(t).size() > automorphisms(t).size());
}

TEST_CASE("random digraphs against the naive oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto d = oracle::random_digraph(rng, n, 1 + trial % 3, 0.35, trial % 2);
    CAPTURE(trial);
    CHECK(same(enumerate_endomorphisms(d), oracle::all_endomorphisms(d)));
  }
}

TEST_CASE("random graphs against the naive oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 6, 0.4);
    CAPTURE(trial);
    const auto expect = oracle::all_endomorphisms(g);
    CHECK(same(enumerate_endomorphisms(g), expect));
    EndoOptions off;
    off.use_cycle_constraint = false;
    CHECK(same(enumerate_endomorphisms(g, off), expect));
  }
}

TEST_CASE("serial and parallel agree") {
  const Element g[] = {1};
  const auto s = sip_product(augment_cayley(cyclic_group(3), g));
  EndoOptions serial;
  serial.jobs = 1;
  EndoOptions par;
  par.jobs = 4;
  const auto a = enumerate_endomorphisms(s.graph, serial);
  const auto b = enumerate_endomorphisms(s.graph, par);
  CHECK(a.size() == 3);
  CHECK(a.maps() == b.maps());
}

TEST_CASE("budget") {
  const Element g[] = {1};
  const auto s = sip_product(augment_cayley(cyclic_group(3), g));
  EndoOptions o;
  o.node_budget = 10;
  try {
    enumerate_endomorphisms(s.graph, o);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  ::setenv("ENDOFORGE_NODE_BUDGET", "1234", 1);
  CHECK(default_node_budget() == 1234);
  ::setenv("ENDOFORGE_NODE_BUDGET", "junk", 1);
  CHECK(default_node_budget() == 100000000);
  ::unsetenv("ENDOFORGE_NODE_BUDGET");
  CHECK(default_node_budget() == 100000000);
}

TEST_CASE("monoid table") {
  const auto t = enumerate_endomorphisms(cycle(3));
  const Monoid m = endo_monoid_table(t);
  CHECK(m.size() == 6);
  CHECK(oracle::associative(m.rows()));
  CHECK(t[m.identity()] == VertexMap{0, 1, 2});
  for (Element f = 0; f < m.size(); ++f)
    for (Element g = 0; g < m.size(); ++g)
      CHECK(t[m(f, g)] == compose(t[f], t[g]));
  // Not closed: only one rotation.
  const TransformationMonoid partial(3, {{0, 1, 2}, {1, 2, 0}});
  CHECK_THROWS_AS(endo_monoid_table(partial), Error);
  SizeLimits tight;
  tight.max_monoid = 3;
  CHECK_THROWS_AS(endo_monoid_table(t, tight), Error);
  CHECK_THROWS_AS(TransformationMonoid(2, {{0, 2}}), Error);
}

TEST_CASE("compose applies the right map first") {
  const VertexMap f{1, 1, 2}, g{2, 0, 1};
  CHECK(compose(f, g) == VertexMap{2, 1, 1});
}

}  // TEST_SUITE
