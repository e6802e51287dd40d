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

#include "endoforge/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "endoforge/error.hpp"

namespace endoforge {
namespace {

void build_csr(std::size_t n, const std::vector<Arc>& arcs, bool forward,
               std::vector<std::size_t>& offset, std::vector<Vertex>& target) {
  offset.assign(n + 1, 0);
  for (const Arc& a : arcs) ++offset[(forward ? a.from : a.to) + 1];
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
  target.assign(arcs.size(), 0);
  std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
  for (const Arc& a : arcs) {
    const Vertex key = forward ? a.from : a.to;
    target[cursor[key]++] = forward ? a.to : a.from;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(target.begin() + offset[v], target.begin() + offset[v + 1]);
}

}  // namespace

ArcColoredDigraph::ArcColoredDigraph(std::vector<std::string> vertex_labels,
                                     std::vector<std::string> color_labels,
                                     std::vector<std::vector<Arc>> arcs)
    : vertex_labels_(std::move(vertex_labels)),
      color_labels_(std::move(color_labels)),
      arcs_(std::move(arcs)) {
  if (arcs_.size() != color_labels_.size()) {
    throw Error(ErrorCode::kMalformedInput, "arc classes do not match colors");
  }
  const std::size_t n = vertex_labels_.size();
  out_offset_.resize(arcs_.size());
  in_offset_.resize(arcs_.size());
  out_.resize(arcs_.size());
  in_.resize(arcs_.size());
  for (std::size_t c = 0; c < arcs_.size(); ++c) {
    auto& cls = arcs_[c];
    for (const Arc& a : cls) {
      if (a.from >= n || a.to >= n) {
        throw Error(ErrorCode::kMalformedInput,
                    "arc endpoint out of range in color " + std::to_string(c));
      }
    }
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    num_arcs_ += cls.size();
    build_csr(n, cls, true, out_offset_[c], out_[c]);
    build_csr(n, cls, false, in_offset_[c], in_[c]);
  }
}

bool ArcColoredDigraph::has_arc(Color c, Vertex u, Vertex v) const {
  const auto nbrs = out(c, u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::span<const Vertex> ArcColoredDigraph::out(Color c, Vertex u) const {
  const auto& off = out_offset_[c];
  return {out_[c].data() + off[u], off[u + 1] - off[u]};
}

std::span<const Vertex> ArcColoredDigraph::in(Color c, Vertex v) const {
  const auto& off = in_offset_[c];
  return {in_[c].data() + off[v], off[v + 1] - off[v]};
}

bool ArcColoredDigraph::has_loops() const {
  for (const auto& cls : arcs_)
    for (const Arc& a : cls)
      if (a.from == a.to) return true;
  return false;
}

Vertex DigraphBuilder::add_vertex(std::string label) {
  vertex_labels_.push_back(std::move(label));
  return static_cast<Vertex>(vertex_labels_.size() - 1);
}

Color DigraphBuilder::add_color(std::string label) {
  color_labels_.push_back(std::move(label));
  arcs_.emplace_back();
  return static_cast<Color>(color_labels_.size() - 1);
}

void DigraphBuilder::add_arc(Color c, Vertex u, Vertex v) {
  if (c >= arcs_.size()) {
    throw Error(ErrorCode::kMalformedInput, "unknown color");
  }
  arcs_[c].push_back({u, v});
}

ArcColoredDigraph DigraphBuilder::build() && {
  return ArcColoredDigraph(std::move(vertex_labels_), std::move(color_labels_),
                           std::move(arcs_));
}

SimpleGraph::SimpleGraph(std::vector<std::string> vertex_labels,
                         std::vector<std::pair<Vertex, Vertex>> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kMalformedInput, "edge endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kHasLoops, "loop at " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::kMalformedInput, "repeated edge");
  }
  offset_.assign(n + 1, 0);
  for (auto [u, v] : edges_) {
    ++offset_[u + 1];
    ++offset_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offset_[v + 1] += offset_[v];
  adjacency_.assign(2 * edges_.size(), 0);
  std::vector<std::size_t> cursor(offset_.begin(), offset_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(adjacency_.begin() + offset_[v], adjacency_.begin() + offset_[v + 1]);
}

std::span<const Vertex> SimpleGraph::neighbors(Vertex v) const {
  return {adjacency_.data() + offset_[v], offset_[v + 1] - offset_[v]};
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t SimpleGraph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t SimpleGraph::min_degree() const {
  if (num_vertices() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::min(best, degree(v));
  return best;
}

DegreeStats degree_stats(const ArcColoredDigraph& d) {
  const std::size_t n = d.num_vertices();
  DegreeStats s;
  s.num_colors = d.num_colors();
  s.out_by_color.assign(d.num_colors(), std::vector<std::size_t>(n, 0));
  s.in_by_color.assign(d.num_colors(), std::vector<std::size_t>(n, 0));
  s.out_degree.assign(n, 0);
  s.in_degree.assign(n, 0);
  for (Color c = 0; c < d.num_colors(); ++c) {
    for (const Arc& a : d.arcs(c)) {
      ++s.out_by_color[c][a.from];
      ++s.in_by_color[c][a.to];
      ++s.out_degree[a.from];
      ++s.in_degree[a.to];
    }
    for (Vertex v = 0; v < n; ++v) {
      s.max_color_degree = std::max(
          {s.max_color_degree, s.out_by_color[c][v], s.in_by_color[c][v]});
    }
  }
  if (n > 0) {
    s.min_out = *std::min_element(s.out_degree.begin(), s.out_degree.end());
    s.min_in = *std::min_element(s.in_degree.begin(), s.in_degree.end());
    s.max_out = *std::max_element(s.out_degree.begin(), s.out_degree.end());
    s.max_in = *std::max_element(s.in_degree.begin(), s.in_degree.end());
  }
  for (Vertex v = 0; v < n; ++v)
    s.max_degree = std::max(s.max_degree, s.out_degree[v] + s.in_degree[v]);
  return s;
}

SimpleGraph underlying_simple_graph(const ArcColoredDigraph& d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Color c = 0; c < d.num_colors(); ++c)
    for (const Arc& a : d.arcs(c))
      if (a.from != a.to)
        edges.emplace_back(std::min(a.from, a.to), std::max(a.from, a.to));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SimpleGraph(d.vertex_labels(), std::move(edges));
}

std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> weak_components(const ArcColoredDigraph& d) {
  return components(underlying_simple_graph(d));
}

bool is_walk(const ArcColoredDigraph& d, const Walk& w) {
  if (w.vertices.empty() || w.colors.size() + 1 != w.vertices.size()) {
    return false;
  }
  for (Vertex v : w.vertices)
    if (v >= d.num_vertices()) return false;
  for (std::size_t i = 0; i < w.colors.size(); ++i) {
    if (w.colors[i] >= d.num_colors() ||
        !d.has_arc(w.colors[i], w.vertices[i], w.vertices[i + 1])) {
      return false;
    }
  }
  return true;
}

Walk concatenate(const Walk& a, const Walk& b) {
  if (a.vertices.empty() || b.vertices.empty() || a.back() != b.front()) {
    throw Error(ErrorCode::kNotAWalk, "walks do not meet");
  }
  Walk out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1,
                      b.vertices.end());
  out.colors.insert(out.colors.end(), b.colors.begin(), b.colors.end());
  return out;
}

Walk map_walk(const ArcColoredDigraph& d, const Walk& w,
              std::span<const Vertex> phi) {
  Walk out;
  out.colors = w.colors;
  out.vertices.reserve(w.vertices.size());
  for (Vertex v : w.vertices) {
    if (v >= phi.size()) throw Error(ErrorCode::kNotAWalk, "map too short");
    out.vertices.push_back(phi[v]);
  }
  for (std::size_t i = 0; i < out.colors.size(); ++i) {
    if (!d.has_arc(out.colors[i], out.vertices[i], out.vertices[i + 1])) {
      throw Error(ErrorCode::kNotAWalk,
                  "image of step " + std::to_string(i) + " is not an arc");
    }
  }
  return out;
}

bool is_endomorphism(const ArcColoredDigraph& d, std::span<const Vertex> phi) {
  if (phi.size() != d.num_vertices()) return false;
  for (Vertex x : phi)
    if (x >= d.num_vertices()) return false;
  for (Color c = 0; c < d.num_colors(); ++c)
    for (const Arc& a : d.arcs(c))
      if (!d.has_arc(c, phi[a.from], phi[a.to])) return false;
  return true;
}

bool is_endomorphism(const SimpleGraph& g, std::span<const Vertex> phi) {
  if (phi.size() != g.num_vertices()) return false;
  for (Vertex x : phi)
    if (x >= g.num_vertices()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(phi[u], phi[v])) return false;
  return true;
}

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source) {
  std::vector<std::size_t> dist(g.num_vertices(),
                                std::numeric_limits<std::size_t>::max());
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> girth(const SimpleGraph& g) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.num_vertices();
  std::size_t best = kInf;
  std::vector<std::size_t> dist(n, kInf);
  std::vector<Vertex> parent(n), queue;
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : queue) dist[v] = kInf;
    queue.assign(1, root);
    dist[root] = 0;
    parent[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

}  // namespace endoforge
