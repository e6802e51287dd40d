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

#include "endoforge/pipeline.hpp"

#include <chrono>

#include "endoforge/cayley.hpp"
#include "endoforge/error.hpp"

namespace endoforge {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class Host>
void measure(StageReport& s, const Host& host, const Monoid* target,
             const EndoOptions& options) {
  const auto t0 = Clock::now();
  EndoStats stats;
  try {
    const TransformationMonoid t = enumerate_endomorphisms(host, options, &stats);
    s.end_size = t.size();
    if (target != nullptr) {
      if (t.size() != target->size()) {
        s.end_isomorphic = false;
      } else {
        s.end_isomorphic =
            monoid_isomorphic(endo_monoid_table(t), *target).has_value();
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded &&
        e.code() != ErrorCode::kSizeOverflow) {
      throw;
    }
    s.note = e.what();
  }
  s.endo_nodes = stats.nodes;
  s.endo_seconds = seconds_since(t0);
}

}  // namespace

bool PipelineReport::passed(std::size_t max_degree) const {
  for (const auto& s : stages) {
    if (s.end_isomorphic.has_value() && !*s.end_isomorphic) return false;
  }
  return !stages.empty() && stages.back().max_degree <= max_degree;
}

io::Json to_json(const PipelineReport& r, bool timings) {
  io::Json stages = io::Json::array();
  for (const auto& s : r.stages) {
    io::Json j{{"name", s.name},
               {"kind", s.undirected ? "graph" : "digraph"},
               {"vertices", s.vertices},
               {s.undirected ? "edges" : "arcs", s.arcs}};
    if (!s.undirected) {
      j["colors"] = s.colors;
      j["loopless"] = s.loopless;
      j["min_out_degree"] = s.min_out;
      j["min_in_degree"] = s.min_in;
      j["max_color_degree"] = s.max_color_degree;
    } else {
      j["min_degree"] = s.min_out;
    }
    j["max_degree"] = s.max_degree;
    if (timings) j["build_seconds"] = s.build_seconds;
    if (s.end_size) {
      j["end_size"] = *s.end_size;
      j["endo_nodes"] = s.endo_nodes;
      if (timings) j["endo_seconds"] = s.endo_seconds;
    }
    if (s.end_isomorphic) j["end_isomorphic"] = *s.end_isomorphic;
    if (!s.note.empty()) j["note"] = s.note;
    stages.push_back(std::move(j));
  }
  return io::Json{{"source", r.source}, {"k", r.k}, {"stages", std::move(stages)}};
}

StageReport describe_stage(std::string name, const ArcColoredDigraph& d) {
  StageReport s;
  s.name = std::move(name);
  s.vertices = d.num_vertices();
  s.arcs = d.num_arcs();
  s.colors = d.num_colors();
  s.loopless = !d.has_loops();
  const DegreeStats st = degree_stats(d);
  s.max_degree = st.max_degree;
  s.min_out = st.min_out;
  s.min_in = st.min_in;
  s.max_color_degree = st.max_color_degree;
  return s;
}

StageReport describe_stage(std::string name, const SimpleGraph& g) {
  StageReport s;
  s.name = std::move(name);
  s.undirected = true;
  s.vertices = g.num_vertices();
  s.arcs = g.num_edges();
  s.colors = 1;
  s.max_degree = g.max_degree();
  s.min_out = s.min_in = g.min_degree();
  return s;
}

void measure_end(StageReport& s, const ArcColoredDigraph& host,
                 const Monoid* target, const EndoOptions& options) {
  measure(s, host, target, options);
}

void measure_end(StageReport& s, const SimpleGraph& host, const Monoid* target,
                 const EndoOptions& options) {
  measure(s, host, target, options);
}

LatticePipeline run_lattice_pipeline(const Lattice& l,
                                     const PipelineOptions& options) {
  LatticePipeline p;
  const Monoid target = l.meet_monoid();
  p.report.source = "lattice of size " + std::to_string(l.size());
  auto enumerate = [&](std::size_t stage) {
    return options.enumerate && stage < options.enumerate_stages;
  };

  auto t0 = Clock::now();
  p.encoding = std::make_unique<LatticeEncoding>(
      l, LinearExtension::canonical(l.poset()));
  StageReport enc = describe_stage("encode", p.encoding->digraph());
  enc.build_seconds = seconds_since(t0);
  if (enumerate(0)) measure_end(enc, p.encoding->digraph(), &target, options.endo);
  p.report.stages.push_back(std::move(enc));

  t0 = Clock::now();
  p.blowup = blow_up(p.encoding->digraph());
  StageReport blow = describe_stage("blowup", p.blowup.digraph);
  blow.build_seconds = seconds_since(t0);
  if (enumerate(1)) measure_end(blow, p.blowup.digraph, &target, options.endo);
  p.report.stages.push_back(std::move(blow));

  t0 = Clock::now();
  p.sip = sip_product(p.blowup.digraph, options.k);
  p.report.k = p.sip.gadget.k;
  StageReport sip = describe_stage("sip", p.sip.graph);
  sip.build_seconds = seconds_since(t0);
  if (enumerate(2)) measure_end(sip, p.sip.graph, &target, options.endo);
  p.report.stages.push_back(std::move(sip));
  return p;
}

MonoidPipeline run_monoid_pipeline(const Monoid& m,
                                   std::span<const Element> generators,
                                   const PipelineOptions& options) {
  MonoidPipeline p;
  p.generators = generators.empty()
                     ? minimal_generating_set(m)
                     : std::vector<Element>(generators.begin(), generators.end());
  p.report.source = "monoid of size " + std::to_string(m.size());
  auto enumerate = [&](std::size_t stage) {
    return options.enumerate && stage < options.enumerate_stages;
  };

  auto t0 = Clock::now();
  p.cayley = cayley_colored(m, p.generators);
  StageReport cay = describe_stage("cayley", p.cayley);
  cay.build_seconds = seconds_since(t0);
  if (enumerate(0)) measure_end(cay, p.cayley, &m, options.endo);
  p.report.stages.push_back(std::move(cay));

  t0 = Clock::now();
  p.blowup = blow_up(p.cayley);
  StageReport blow = describe_stage("blowup", p.blowup.digraph);
  blow.build_seconds = seconds_since(t0);
  if (enumerate(1)) measure_end(blow, p.blowup.digraph, &m, options.endo);
  p.report.stages.push_back(std::move(blow));

  t0 = Clock::now();
  p.sip = sip_product(p.blowup.digraph, options.k);
  p.report.k = p.sip.gadget.k;
  StageReport sip = describe_stage("sip", p.sip.graph);
  sip.build_seconds = seconds_since(t0);
  if (enumerate(2)) measure_end(sip, p.sip.graph, &m, options.endo);
  p.report.stages.push_back(std::move(sip));
  return p;
}

}  // namespace endoforge
