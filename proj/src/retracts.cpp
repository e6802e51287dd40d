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

#include "endoforge/retracts.hpp"

#include <algorithm>
#include <string>

#include "endoforge/error.hpp"

namespace endoforge {

SimpleGraph cover_graph(const Poset& p) {
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Element x = 0; x < p.size(); ++x) {
    labels.push_back(p.labels().empty() ? std::to_string(x) : p.label(x));
    for (Element y = 0; y < p.size(); ++y) {
      if (p.covers(x, y)) edges.push_back({std::min(x, y), std::max(x, y)});
    }
  }
  return SimpleGraph(std::move(labels), std::move(edges));
}

RetractFamily retract_lattice(const TransformationMonoid& t) {
  const std::size_t n = t.size();
  for (std::size_t f = 0; f < n; ++f) {
    if (compose(t[f], t[f]) != t[f]) {
      throw Error(ErrorCode::kNotCommutativeIdempotent,
                  "map " + std::to_string(f) + " is not idempotent");
    }
    for (std::size_t g = f + 1; g < n; ++g) {
      if (compose(t[f], t[g]) != compose(t[g], t[f])) {
        throw Error(ErrorCode::kNotCommutativeIdempotent,
                    "maps " + std::to_string(f) + " and " + std::to_string(g) +
                        " do not commute");
      }
    }
  }
  RetractFamily fam;
  for (const auto& m : t.maps()) {
    std::vector<Vertex> img(m.begin(), m.end());
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    fam.images.push_back(std::move(img));
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("R" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = std::includes(fam.images[j].begin(), fam.images[j].end(),
                                fam.images[i].begin(), fam.images[i].end());
    }
  }
  fam.lattice = Lattice::from_poset(Poset::from_relation(leq, labels));
  return fam;
}

std::vector<Vertex> private_part(const SimpleGraph& host,
                                 const RetractFamily& family, Element y) {
  const Lattice& lat = family.lattice;
  const JoinIrreducibles j = join_irreducibles(lat);
  auto it = std::find(j.elements.begin(), j.elements.end(), y);
  if (it == j.elements.end()) {
    throw Error(ErrorCode::kPreconditionFailed,
                "element " + std::to_string(y) + " is not join-irreducible");
  }
  const auto jy = static_cast<Element>(it - j.elements.begin());
  std::vector<Element> covered;
  for (Element jx : j.poset.lower_covers(jy)) covered.push_back(j.elements[jx]);
  const Element join_c = lat.join_all(covered);

  // 0: outside R(y); 1: in R(y) minus the covered retracts.
  std::vector<char> in_s(host.num_vertices(), 0);
  for (Vertex v : family.images[y]) in_s[v] = 1;
  for (Element x : covered) {
    for (Vertex v : family.images[x]) in_s[v] = 0;
  }
  std::vector<Vertex> core;
  std::set_difference(family.images[y].begin(), family.images[y].end(),
                      family.images[join_c].begin(),
                      family.images[join_c].end(), std::back_inserter(core));
  if (core.empty()) {
    throw Error(ErrorCode::kInvariantViolated,
                "R(y) \\ R(join C) is empty for y = " + std::to_string(y));
  }
  std::vector<Vertex> comp{core.front()};
  std::vector<char> seen(host.num_vertices(), 0);
  seen[core.front()] = 1;
  for (std::size_t head = 0; head < comp.size(); ++head) {
    for (Vertex w : host.neighbors(comp[head])) {
      if (in_s[w] && !seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
    }
  }
  for (Vertex v : core) {
    if (!seen[v]) {
      throw Error(ErrorCode::kInvariantViolated,
                  "R(y) \\ R(join C) is not inside one component for y = " +
                      std::to_string(y));
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

MinorCheck check_minor_model(const SimpleGraph& host, const MinorModel& m) {
  auto fail = [](std::string why) { return MinorCheck{false, std::move(why)}; };
  const std::size_t n = host.num_vertices();
  if (m.branch_sets.size() != m.target.num_vertices()) {
    return fail("branch set count differs from target vertex count");
  }
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kFree);
  for (std::size_t b = 0; b < m.branch_sets.size(); ++b) {
    const auto& set = m.branch_sets[b];
    if (set.empty()) return fail("branch set " + std::to_string(b) + " empty");
    for (Vertex v : set) {
      if (v >= n) return fail("branch set vertex out of range");
      if (owner[v] != kFree) {
        return fail("branch sets " + std::to_string(owner[v]) + " and " +
                    std::to_string(b) + " intersect");
      }
      owner[v] = b;
    }
  }
  for (std::size_t b = 0; b < m.branch_sets.size(); ++b) {
    const auto& set = m.branch_sets[b];
    std::vector<Vertex> queue{set.front()};
    std::vector<char> seen(n, 0);
    seen[set.front()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : host.neighbors(queue[head])) {
        if (owner[w] == b && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() != set.size()) {
      return fail("branch set " + std::to_string(b) + " is not connected");
    }
  }
  const auto& edges = m.target.edges();
  if (m.cover_edges.size() != edges.size()) {
    return fail("cover edge count differs from target edge count");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = m.cover_edges[i];
    auto [a, b] = edges[i];
    if (u >= n || v >= n || !host.adjacent(u, v)) {
      return fail("cover edge " + std::to_string(i) + " is not a host edge");
    }
    const bool ok = (owner[u] == a && owner[v] == b) ||
                    (owner[u] == b && owner[v] == a);
    if (!ok) {
      return fail("cover edge " + std::to_string(i) +
                  " does not join its branch sets");
    }
  }
  return {};
}

MinorWitness minor_witness(const SimpleGraph& host,
                           const RetractFamily& family, bool allow_non_thick) {
  const JoinIrreducibles j = join_irreducibles(family.lattice);
  MinorWitness w;
  const bool empty = j.poset.size() == 0;
  w.thick = empty || (is_lattice(j.poset) && is_thick(j.poset));
  w.meet_semilattice = empty || is_meet_semilattice(j.poset);
  if (!allow_non_thick && !w.thick && !w.meet_semilattice) {
    throw Error(ErrorCode::kPreconditionFailed,
                "J(L) is neither a thick lattice nor a meet-semilattice");
  }
  if (!w.thick) {
    w.notes.push_back(w.meet_semilattice
                          ? "J(L) is a meet-semilattice but not a thick lattice"
                          : "J(L) is neither a thick lattice nor a "
                            "meet-semilattice");
  }
  w.model.target = cover_graph(j.poset);
  for (Element jy = 0; jy < j.poset.size(); ++jy) {
    try {
      w.model.branch_sets.push_back(
          private_part(host, family, j.elements[jy]));
    } catch (const Error& e) {
      if (!allow_non_thick) throw;
      w.notes.push_back(e.what());
      w.model.branch_sets.emplace_back();
    }
  }
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(host.num_vertices(), kFree);
  for (std::size_t b = 0; b < w.model.branch_sets.size(); ++b) {
    for (Vertex v : w.model.branch_sets[b]) {
      if (owner[v] == kFree) owner[v] = b;
    }
  }
  for (auto [a, b] : w.model.target.edges()) {
    std::pair<Vertex, Vertex> found{0, 0};
    bool have = false;
    for (Vertex u : w.model.branch_sets[a]) {
      for (Vertex v : host.neighbors(u)) {
        if (owner[v] == b) {
          found = {u, v};
          have = true;
          break;
        }
      }
      if (have) break;
    }
    if (!have) {
      const std::string why = "no host edge between branch sets " +
                              std::to_string(a) + " and " + std::to_string(b);
      if (!allow_non_thick) throw Error(ErrorCode::kInvariantViolated, why);
      w.notes.push_back(why);
    }
    w.model.cover_edges.push_back(found);
  }
  const MinorCheck check = check_minor_model(host, w.model);
  if (!check.ok) {
    if (!allow_non_thick) {
      throw Error(ErrorCode::kInvariantViolated, check.failure);
    }
    w.notes.push_back(check.failure);
  }
  return w;
}

}  // namespace endoforge
