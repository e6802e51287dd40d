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

#include "endoforge/sip.hpp"

#include <algorithm>
#include <string>

#include "endoforge/error.hpp"

namespace endoforge {
namespace {

// Face vertices satisfying 4*d(v,a) >= g and 4*d(v,b) >= g, read along the
// face starting at `start` and stepping to `first_step` first.
std::vector<Vertex> far_part(const SimpleGraph& g, std::size_t girth,
                             const std::vector<Vertex>& face, Vertex a,
                             Vertex b, Vertex start, Vertex first_step) {
  const auto da = bfs_distances(g, a);
  const auto db = bfs_distances(g, b);
  const std::size_t len = face.size();
  const std::size_t s = static_cast<std::size_t>(
      std::find(face.begin(), face.end(), start) - face.begin());
  const bool forward = face[(s + 1) % len] == first_step;
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = face[forward ? (s + i) % len : (s + len - i) % len];
    if (4 * da[v] >= girth && 4 * db[v] >= girth) out.push_back(v);
  }
  return out;
}

}  // namespace

HPGraph hp_graph(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kKTooSmall, "H^k needs k >= 1");
  std::vector<std::string> labels{"b0", "b1", "b2", "b3"};
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}};
  auto path = [&](Vertex from, Vertex to, std::size_t inner,
                  const std::string& name) {
    std::vector<Vertex> inner_vertices;
    Vertex prev = from;
    for (std::size_t i = 1; i <= inner; ++i) {
      const Vertex v = static_cast<Vertex>(labels.size());
      labels.push_back(inner == 1 ? name : name + std::to_string(i));
      edges.emplace_back(prev, v);
      inner_vertices.push_back(v);
      prev = v;
    }
    edges.emplace_back(prev, to);
    return inner_vertices;
  };
  const auto s = path(0, 2, 1, "s");
  const auto t = path(0, 3, 2, "t");
  const auto p = path(1, 2, 2 * k + 1, "p");
  const auto q = path(2, 3, 2 * k - 1, "q");
  const auto r = path(3, 1, 2 * k, "r");

  HPGraph h;
  h.k = k;
  h.branch = {0, 1, 2, 3};
  h.graph = SimpleGraph(std::move(labels), std::move(edges));
  auto& z1 = h.faces[0];
  z1 = {0, 1};
  z1.insert(z1.end(), p.begin(), p.end());
  z1.insert(z1.end(), {2, s[0]});
  auto& z2 = h.faces[1];
  z2 = {0, s[0], 2};
  z2.insert(z2.end(), q.begin(), q.end());
  z2.insert(z2.end(), {3, t[1], t[0]});
  auto& z3 = h.faces[2];
  z3 = {0, t[0], t[1], 3};
  z3.insert(z3.end(), r.begin(), r.end());
  z3.push_back(1);

  h.h_plus = far_part(h.graph, h.girth(), z1, 1, 2, 1, p.front());
  h.h_minus = far_part(h.graph, h.girth(), z2, 2, 3, 2,
                       q.empty() ? Vertex{3} : q.front());
  return h;
}

bool gadget_admits(const HPGraph& h, std::size_t num_colors) {
  if (h.h_plus.size() < num_colors || h.h_minus.size() < num_colors) {
    return false;
  }
  for (const auto* part : {&h.h_plus, &h.h_minus}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      if ((*part)[i] < 4) return false;
      if (i > 0 && !h.graph.adjacent((*part)[i - 1], (*part)[i])) return false;
    }
  }
  return true;
}

std::size_t choose_k(std::size_t num_colors) {
  for (std::size_t k = 2;; ++k)
    if (gadget_admits(hp_graph(k), num_colors)) return k;
}

SipProduct sip_product(const ArcColoredDigraph& d,
                       std::optional<std::size_t> k) {
  if (d.has_loops()) throw Error(ErrorCode::kHasLoops,
                "sip-product needs a loopless input with min in- and "
                "out-degree >= 1; the input has a loop");
  const DegreeStats deg = degree_stats(d);
  if (d.num_vertices() > 0 && (deg.min_out == 0 || deg.min_in == 0)) {
    throw Error(ErrorCode::kMinDegreeViolation,
                "sip-product needs a loopless input with min in- and "
                "out-degree >= 1; some vertex has no in- or out-arc");
  }
  const std::size_t num_colors = d.num_colors();
  const std::size_t kk = k ? *k : choose_k(std::max<std::size_t>(num_colors, 1));
  if (kk < 2) throw Error(ErrorCode::kKTooSmall, "k must be at least 2");
  SipProduct out;
  out.gadget = hp_graph(kk);
  if (!gadget_admits(out.gadget, num_colors)) {
    throw Error(ErrorCode::kKTooSmall,
                "H^" + std::to_string(kk) + " has too few anchors for " +
                    std::to_string(num_colors) + " colors");
  }
  out.base_vertices = d.num_vertices();
  out.anchor_plus.assign(out.gadget.h_plus.begin(),
                         out.gadget.h_plus.begin() + num_colors);
  out.anchor_minus.assign(out.gadget.h_minus.begin(),
                          out.gadget.h_minus.begin() + num_colors);
  out.first_copy.assign(num_colors, 0);
  for (Color c = 1; c < num_colors; ++c)
    out.first_copy[c] = out.first_copy[c - 1] + d.arcs(c - 1).size();

  const SimpleGraph& h = out.gadget.graph;
  const std::size_t hv = h.num_vertices();
  std::vector<std::string> labels(d.vertex_labels());
  labels.reserve(d.num_vertices() + hv * d.num_arcs());
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve((h.num_edges() + 2) * d.num_arcs());
  for (Color c = 0; c < num_colors; ++c) {
    const auto& arcs = d.arcs(c);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const std::string prefix = "(" + d.color_label(c) + "," +
                                 d.vertex_label(arcs[i].from) + "->" +
                                 d.vertex_label(arcs[i].to) + ",";
      for (Vertex w = 0; w < hv; ++w) labels.push_back(prefix + h.label(w) + ")");
      for (auto [u, v] : h.edges())
        edges.emplace_back(out.copy_vertex(c, i, u), out.copy_vertex(c, i, v));
      edges.emplace_back(arcs[i].from, out.copy_vertex(c, i, out.anchor_plus[c]));
      edges.emplace_back(arcs[i].to, out.copy_vertex(c, i, out.anchor_minus[c]));
    }
  }
  out.graph = SimpleGraph(std::move(labels), std::move(edges));
  return out;
}

std::vector<Vertex> lift_sip(const ArcColoredDigraph& d, const SipProduct& s,
                             std::span<const Vertex> phi) {
  if (!is_endomorphism(d, phi)) {
    throw Error(ErrorCode::kNotEndomorphism, "map is not an endomorphism of D");
  }
  const std::size_t hv = s.gadget.graph.num_vertices();
  std::vector<Vertex> out(s.graph.num_vertices());
  for (Vertex v = 0; v < d.num_vertices(); ++v) out[v] = phi[v];
  for (Color c = 0; c < d.num_colors(); ++c) {
    const auto& arcs = d.arcs(c);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc image{phi[arcs[i].from], phi[arcs[i].to]};
      const std::size_t j = static_cast<std::size_t>(
          std::lower_bound(arcs.begin(), arcs.end(), image) - arcs.begin());
      for (Vertex w = 0; w < hv; ++w)
        out[s.copy_vertex(c, i, w)] = s.copy_vertex(c, j, w);
    }
  }
  return out;
}

}  // namespace endoforge
