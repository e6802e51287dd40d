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

// Exact enumeration of endomorphisms of arc-colored digraphs and simple
// graphs.
//
// Backtracking over a static maximum-cardinality vertex order. Candidate
// images come from the already placed neighbors, one color and direction at
// a time, and are filtered by per-vertex color signatures (out-, in- and
// loop-colors must be preserved). Unplaced neighbors are forward-checked.
//
// On loopless hosts whose underlying graph has odd girth g, every g-cycle
// must map onto a g-cycle: an odd closed walk of length g contains an odd
// cycle no longer than g. Such cycles are placed as a whole once one of
// their vertices is placed, which is what keeps long subdivided paths from
// folding exponentially.
//
// The search is split over the root vertex's candidate images; the parallel
// driver hands root candidates to OpenMP workers that share one node
// budget. Results are merged and sorted, so the output never depends on the
// worker count.

#ifndef ENDOFORGE_ENDO_HPP_
#define ENDOFORGE_ENDO_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "endoforge/algebra.hpp"
#include "endoforge/graph.hpp"

namespace endoforge {

using VertexMap = std::vector<Vertex>;

// 10^8 unless ENDOFORGE_NODE_BUDGET is set.
std::uint64_t default_node_budget();

struct EndoOptions {
  std::uint64_t node_budget = default_node_budget();
  int jobs = 0;  // 0: OpenMP default; 1: serial reference path
  bool use_cycle_constraint = true;
};

struct EndoStats {
  std::uint64_t nodes = 0;
  std::size_t root_candidates = 0;
  std::size_t forced_cycles = 0;  // g-cycles used as constraints
  std::size_t odd_girth = 0;      // 0 when the cycle constraint is off
};

// A set of self-maps sorted lexicographically.
class TransformationMonoid {
 public:
  TransformationMonoid() = default;
  // Sorts and deduplicates; does not check closure.
  TransformationMonoid(std::size_t degree, std::vector<VertexMap> maps);

  std::size_t size() const { return maps_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<VertexMap>& maps() const { return maps_; }
  const VertexMap& operator[](std::size_t i) const { return maps_[i]; }
  std::optional<std::size_t> find(std::span<const Vertex> map) const;
  std::optional<std::size_t> identity_index() const;

 private:
  std::size_t degree_ = 0;
  std::vector<VertexMap> maps_;
};

// Budget exhaustion throws Error(kBudgetExceeded); no partial result.
TransformationMonoid enumerate_endomorphisms(const ArcColoredDigraph& host,
                                             const EndoOptions& options = {},
                                             EndoStats* stats = nullptr);
TransformationMonoid enumerate_endomorphisms(const SimpleGraph& host,
                                             const EndoOptions& options = {},
                                             EndoStats* stats = nullptr);

// Single color, both directions for every edge.
ArcColoredDigraph symmetric_digraph(const SimpleGraph& g);

// table[f][g] = index of f o g, i.e. apply g first. Throws NotClosed if a
// composite is missing or the identity is absent.
Monoid endo_monoid_table(const TransformationMonoid& t,
                         const SizeLimits& limits = {});

// Indices of maps with f o f = f.
std::vector<std::size_t> retractions(const TransformationMonoid& t);
// Indices of bijective maps.
std::vector<std::size_t> automorphisms(const TransformationMonoid& t);

VertexMap compose(std::span<const Vertex> f, std::span<const Vertex> g);

}  // namespace endoforge

#endif  // ENDOFORGE_ENDO_HPP_
