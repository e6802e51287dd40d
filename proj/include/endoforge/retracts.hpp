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

// Retracts of hosts whose endomorphism monoid is commutative and idempotent,
// private parts of join-irreducibles, and cover-graph minor models built
// from them.
//
// Digraph hosts are analysed through their underlying simple graph: private
// parts use weak connectivity and a branch-set edge is an arc of any color in
// either direction.

#ifndef ENDOFORGE_RETRACTS_HPP_
#define ENDOFORGE_RETRACTS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "endoforge/algebra.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/graph.hpp"

namespace endoforge {

SimpleGraph cover_graph(const Poset& p);

struct RetractFamily {
  // images[i] = R(i) for map i of the source monoid, sorted.
  std::vector<std::vector<Vertex>> images;
  // Ordered by inclusion of images; element i is map i.
  Lattice lattice;
};

// Throws NotCommutativeIdempotent unless composition is commutative and
// idempotent on the given maps.
RetractFamily retract_lattice(const TransformationMonoid& t);

// P(y) for y in family.lattice. Throws InvariantViolated if R(y) minus the
// covered retracts does not meet R(y) minus R(join C) in a single component.
std::vector<Vertex> private_part(const SimpleGraph& host,
                                 const RetractFamily& family, Element y);

struct MinorModel {
  SimpleGraph target;
  std::vector<std::vector<Vertex>> branch_sets;  // one per target vertex
  // cover_edges[i] = host edge realizing target.edges()[i].
  std::vector<std::pair<Vertex, Vertex>> cover_edges;
};

struct MinorCheck {
  bool ok = true;
  std::string failure;  // first violated condition
};

// Self-contained re-check of a model against a host.
MinorCheck check_minor_model(const SimpleGraph& host, const MinorModel& model);

struct MinorWitness {
  MinorModel model;
  bool thick = false;                // J(L) is a thick lattice
  bool meet_semilattice = false;     // J(L) is a meet-semilattice
  std::vector<std::string> notes;    // problems found on the relaxed path
};

// Minor model of the cover graph of J(L), L = family.lattice, with the
// private parts as branch sets. Without allow_non_thick, J(L) must be a
// thick lattice or a meet-semilattice (PreconditionFailed) and a model that
// fails its own certificate is InvariantViolated. With it, the model is
// returned as far as it could be built and problems go to notes.
MinorWitness minor_witness(const SimpleGraph& host,
                           const RetractFamily& family,
                           bool allow_non_thick = false);

}  // namespace endoforge

#endif  // ENDOFORGE_RETRACTS_HPP_
