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

#include "endoforge/io.hpp"

#include <fstream>
#include <sstream>

#include "endoforge/error.hpp"

namespace endoforge::io {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::uint32_t index_value(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  const auto v = j.get<unsigned long long>();
  if (v > 0xFFFFFFFEull) malformed(std::string(what) + " too large");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> label_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (x.is_string()) {
      out.push_back(x.get<std::string>());
    } else if (x.is_number_integer()) {
      out.push_back(std::to_string(x.get<long long>()));
    } else {
      malformed(std::string(what) + " entries must be strings");
    }
  }
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& spec) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
      s.size() > 6) {
    malformed("bad size in spec \"" + spec + "\"");
  }
  return std::stoul(s);
}

bool looks_like_file(const std::string& spec) {
  return spec.find(':') == std::string::npos &&
         (spec.find('/') != std::string::npos ||
          spec.find(".json") != std::string::npos);
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Monoid& m) {
  return Json{{"size", m.size()}, {"identity", m.identity()},
              {"table", m.rows()}};
}

Json to_json(const Poset& p) {
  std::vector<std::vector<int>> leq(p.size(), std::vector<int>(p.size()));
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) leq[x][y] = p.leq(x, y) ? 1 : 0;
  }
  Json j{{"size", p.size()}, {"leq", leq}};
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

Json to_json(const ArcColoredDigraph& d) {
  Json arcs = Json::array();
  for (Color c = 0; c < d.num_colors(); ++c) {
    for (const Arc& a : d.arcs(c)) {
      arcs.push_back(Json{{"color", c}, {"from", a.from}, {"to", a.to}});
    }
  }
  return Json{{"vertices", d.vertex_labels()},
              {"colors", d.color_labels()},
              {"arcs", std::move(arcs)}};
}

Json to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Json to_json(const MinorModel& m) {
  Json cover = Json::array();
  for (auto [u, v] : m.cover_edges) cover.push_back(Json::array({u, v}));
  return Json{{"target", to_json(m.target)},
              {"branch_sets", m.branch_sets},
              {"cover_edges", std::move(cover)}};
}

Json to_json(const TransformationMonoid& t) {
  return Json{{"degree", t.degree()}, {"maps", t.maps()}};
}

Monoid monoid_from_json(const Json& j) {
  const Json& table = field(j, "table");
  if (!table.is_array()) malformed("\"table\" must be an array");
  std::vector<std::vector<Element>> rows;
  for (const auto& row : table) {
    if (!row.is_array()) malformed("table rows must be arrays");
    std::vector<Element> r;
    for (const auto& x : row) r.push_back(index_value(x, "table entry"));
    rows.push_back(std::move(r));
  }
  if (j.contains("size") && index_value(j.at("size"), "size") != rows.size()) {
    throw Error(ErrorCode::kMalformedTable, "\"size\" disagrees with table");
  }
  return Monoid::from_table(rows, index_value(field(j, "identity"), "identity"));
}

Poset poset_from_json(const Json& j) {
  const Json& leq = field(j, "leq");
  if (!leq.is_array()) malformed("\"leq\" must be an array");
  const std::size_t n = leq.size();
  if (j.contains("size") && index_value(j.at("size"), "size") != n) {
    malformed("\"size\" disagrees with \"leq\"");
  }
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x].is_array() || leq[x].size() != n) {
      malformed("\"leq\" must be square");
    }
    for (std::size_t y = 0; y < n; ++y) {
      const Json& e = leq[x][y];
      if (e.is_boolean()) {
        rel[x][y] = e.get<bool>();
      } else if (e.is_number_integer() && (e == 0 || e == 1)) {
        rel[x][y] = e.get<int>() == 1;
      } else {
        malformed("\"leq\" entries must be 0/1");
      }
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = label_list(j.at("labels"), "labels");
  if (!labels.empty() && labels.size() != n) malformed("label count");
  return Poset::from_relation(rel, std::move(labels));
}

ArcColoredDigraph digraph_from_json(const Json& j) {
  auto vertices = label_list(field(j, "vertices"), "vertices");
  auto colors = label_list(field(j, "colors"), "colors");
  const Json& arcs = field(j, "arcs");
  if (!arcs.is_array()) malformed("\"arcs\" must be an array");
  std::vector<std::vector<Arc>> by_color(colors.size());
  for (const auto& a : arcs) {
    const Color c = index_value(field(a, "color"), "arc color");
    const Vertex u = index_value(field(a, "from"), "arc tail");
    const Vertex v = index_value(field(a, "to"), "arc head");
    if (c >= colors.size() || u >= vertices.size() || v >= vertices.size()) {
      malformed("arc index out of range");
    }
    by_color[c].push_back({u, v});
  }
  return ArcColoredDigraph(std::move(vertices), std::move(colors),
                           std::move(by_color));
}

SimpleGraph graph_from_json(const Json& j) {
  auto vertices = label_list(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) malformed("\"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("edges must be pairs");
    const Vertex u = index_value(e[0], "edge end");
    const Vertex v = index_value(e[1], "edge end");
    if (u >= vertices.size() || v >= vertices.size()) {
      malformed("edge index out of range");
    }
    out.push_back({u, v});
  }
  return SimpleGraph(std::move(vertices), std::move(out));
}

MinorModel minor_model_from_json(const Json& j) {
  MinorModel m;
  m.target = graph_from_json(field(j, "target"));
  const Json& sets = field(j, "branch_sets");
  if (!sets.is_array()) malformed("\"branch_sets\" must be an array");
  for (const auto& s : sets) {
    if (!s.is_array()) malformed("branch sets must be arrays");
    std::vector<Vertex> b;
    for (const auto& v : s) b.push_back(index_value(v, "branch vertex"));
    m.branch_sets.push_back(std::move(b));
  }
  const Json& cover = field(j, "cover_edges");
  if (!cover.is_array()) malformed("\"cover_edges\" must be an array");
  for (const auto& e : cover) {
    if (!e.is_array() || e.size() != 2) malformed("cover edges must be pairs");
    m.cover_edges.push_back(
        {index_value(e[0], "cover edge end"), index_value(e[1], "cover edge end")});
  }
  return m;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    malformed(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) malformed("cannot write " + path);
  out << text;
}

Poset parse_poset_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "chain") return chain_poset(parse_count(arg, spec));
  if (head == "antichain") {
    const std::size_t n = parse_count(arg, spec);
    return Poset::from_covers(n, {});
  }
  if (head == "bn") return boolean_lattice_poset(parse_count(arg, spec));
  if (spec == "example") {
    return Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                              {"0", "a", "b", "1"});
  }
  if (spec == "n5") {
    return Poset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                              {"0", "a", "b", "c", "1"});
  }
  if (spec == "m3") {
    return Poset::from_covers(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
        {"0", "a", "b", "c", "1"});
  }
  if (colon == std::string::npos) return poset_from_json(read_json_file(spec));
  malformed("unknown poset spec \"" + spec + "\"");
}

Lattice parse_lattice_spec(const std::string& spec) {
  if (spec.rfind("ideals:", 0) == 0) {
    return ideal_lattice(parse_poset_spec(spec.substr(7)));
  }
  if (spec.find(':') == std::string::npos && looks_like_file(spec)) {
    const Json j = read_json_file(spec);
    if (j.is_object() && j.contains("table")) {
      return lattice_from_meet_monoid(monoid_from_json(j));
    }
    return Lattice::from_poset(poset_from_json(j));
  }
  return Lattice::from_poset(parse_poset_spec(spec));
}

Monoid parse_monoid_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "cyclic") return cyclic_group(parse_count(arg, spec));
  if (head == "product") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) malformed("product:<a>,<b> expected");
    return direct_product(cyclic_group(parse_count(arg.substr(0, comma), spec)),
                          cyclic_group(parse_count(arg.substr(comma + 1), spec)));
  }
  if (head == "leftzero") {
    const std::size_t n = parse_count(arg, spec);
    if (n == 0) malformed("leftzero needs n >= 1");
    // Element 0 is the identity; the rest satisfy x*y = x.
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) t[x][y] = x == 0 ? y : x;
    }
    return Monoid::from_table(t, 0);
  }
  if (head == "bp") return babai_pultr_monoid(parse_count(arg, spec)).monoid;
  if (head == "meet") return parse_lattice_spec(arg).meet_monoid();
  if (colon == std::string::npos) return monoid_from_json(read_json_file(spec));
  malformed("unknown monoid spec \"" + spec + "\"");
}

std::string to_dot(const ArcColoredDigraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    out << "  " << v << " [label=" << dot_quote(d.vertex_label(v)) << "];\n";
  }
  for (Color c = 0; c < d.num_colors(); ++c) {
    for (const Arc& a : d.arcs(c)) {
      out << "  " << a.from << " -> " << a.to
          << " [label=" << dot_quote(d.color_label(c)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [label=" << dot_quote(g.label(v)) << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace endoforge::io
