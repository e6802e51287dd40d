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

// Arc-colored digraphs and simple graphs.
//
// Both types are immutable once built. Arcs are kept per color, sorted by
// (from, to) with duplicates removed, so iteration order is canonical and
// independent of insertion order. Labels are carried along for output only.

#ifndef ENDOFORGE_GRAPH_HPP_
#define ENDOFORGE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace endoforge {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Arc&) const = default;
};

class ArcColoredDigraph {
 public:
  ArcColoredDigraph() = default;

  // Sorts and deduplicates every color class; throws on endpoints out of
  // range or a color count mismatch.
  ArcColoredDigraph(std::vector<std::string> vertex_labels,
                    std::vector<std::string> color_labels,
                    std::vector<std::vector<Arc>> arcs);

  std::size_t num_vertices() const { return vertex_labels_.size(); }
  std::size_t num_colors() const { return color_labels_.size(); }
  std::size_t num_arcs() const { return num_arcs_; }

  const std::vector<Arc>& arcs(Color c) const { return arcs_[c]; }
  bool has_arc(Color c, Vertex u, Vertex v) const;
  std::span<const Vertex> out(Color c, Vertex u) const;
  std::span<const Vertex> in(Color c, Vertex v) const;
  bool has_loops() const;

  const std::string& vertex_label(Vertex v) const { return vertex_labels_[v]; }
  const std::string& color_label(Color c) const { return color_labels_[c]; }
  const std::vector<std::string>& vertex_labels() const {
    return vertex_labels_;
  }
  const std::vector<std::string>& color_labels() const {
    return color_labels_;
  }

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> color_labels_;
  std::vector<std::vector<Arc>> arcs_;
  // CSR adjacency per color.
  std::vector<std::vector<std::size_t>> out_offset_, in_offset_;
  std::vector<std::vector<Vertex>> out_, in_;
  std::size_t num_arcs_ = 0;
};

// Incremental construction of an ArcColoredDigraph.
class DigraphBuilder {
 public:
  Vertex add_vertex(std::string label);
  Color add_color(std::string label);
  void add_arc(Color c, Vertex u, Vertex v);
  std::size_t num_vertices() const { return vertex_labels_.size(); }
  std::size_t num_colors() const { return color_labels_.size(); }
  ArcColoredDigraph build() &&;

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> color_labels_;
  std::vector<std::vector<Arc>> arcs_;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Rejects loops and repeated edges.
  SimpleGraph(std::vector<std::string> vertex_labels,
              std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  // Each edge once with first < second, sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::size_t> offset_;
  std::vector<Vertex> adjacency_;
};

struct DegreeStats {
  std::size_t num_colors = 0;
  // out_by_color[c][v] = deg+_c(v); in_by_color likewise.
  std::vector<std::vector<std::size_t>> out_by_color, in_by_color;
  std::vector<std::size_t> out_degree, in_degree;  // summed over colors
  std::size_t max_out = 0;      // Delta+
  std::size_t max_in = 0;       // Delta-
  std::size_t max_degree = 0;   // Delta, deg = deg+ + deg-
  std::size_t min_out = 0;      // delta+
  std::size_t min_in = 0;       // delta-
  std::size_t max_color_degree = 0;  // Delta^{+-}: max over colors of the
                                     // per-color in- and out-degrees
};

DegreeStats degree_stats(const ArcColoredDigraph& d);

SimpleGraph underlying_simple_graph(const ArcColoredDigraph& d);

// Components of the underlying simple graph, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<Vertex>> weak_components(const ArcColoredDigraph& d);
std::vector<std::vector<Vertex>> components(const SimpleGraph& g);

// A directed walk v0 -c1-> v1 -c2-> ... -ck-> vk.
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;  // colors.size() == vertices.size() - 1

  std::size_t length() const { return colors.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool closed() const { return vertices.front() == vertices.back(); }
  bool operator==(const Walk&) const = default;
};

bool is_walk(const ArcColoredDigraph& d, const Walk& w);
// Throws NotAWalk when the end of `a` is not the start of `b`.
Walk concatenate(const Walk& a, const Walk& b);
// Image of a walk under a vertex map. Throws NotAWalk if an image arc is
// missing from the host.
Walk map_walk(const ArcColoredDigraph& d, const Walk& w,
              std::span<const Vertex> phi);

// Whether phi preserves every colored arc (resp. every edge).
bool is_endomorphism(const ArcColoredDigraph& d, std::span<const Vertex> phi);
bool is_endomorphism(const SimpleGraph& g, std::span<const Vertex> phi);

// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const SimpleGraph& g);

// BFS distances; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source);

}  // namespace endoforge

#endif  // ENDOFORGE_GRAPH_HPP_
