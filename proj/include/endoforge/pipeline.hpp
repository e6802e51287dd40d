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

// End-to-end constructions with per-stage measurements.
//
//   lattice:  encoding -> blow-up -> sip product   (max degree 3)
//   monoid:   colored Cayley graph -> blow-up -> sip product
//
// Each stage is described by its size and degree data; when enumeration is
// requested the stage's End is computed and compared with the source monoid.
// A stage whose enumeration runs out of budget carries a note and no verdict.

#ifndef ENDOFORGE_PIPELINE_HPP_
#define ENDOFORGE_PIPELINE_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endoforge/algebra.hpp"
#include "endoforge/blowup.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/graph.hpp"
#include "endoforge/io.hpp"
#include "endoforge/lattice_encoding.hpp"
#include "endoforge/sip.hpp"

namespace endoforge {

struct StageReport {
  std::string name;
  bool undirected = false;
  std::size_t vertices = 0;
  std::size_t arcs = 0;  // edges for undirected stages
  std::size_t colors = 0;
  bool loopless = true;
  std::size_t max_degree = 0;
  std::size_t min_out = 0, min_in = 0;  // min degree for undirected stages
  std::size_t max_color_degree = 0;
  double build_seconds = 0;

  std::optional<std::size_t> end_size;
  std::optional<bool> end_isomorphic;
  std::uint64_t endo_nodes = 0;
  double endo_seconds = 0;
  std::string note;
};

struct PipelineReport {
  std::string source;
  std::size_t k = 0;
  std::vector<StageReport> stages;

  // All completed verdicts positive and the final degree at most max_degree.
  bool passed(std::size_t max_degree) const;
};

// Wall-clock fields only when `timings` is set, so default output is
// byte-identical across runs.
io::Json to_json(const PipelineReport& r, bool timings = false);

StageReport describe_stage(std::string name, const ArcColoredDigraph& d);
StageReport describe_stage(std::string name, const SimpleGraph& g);

// Enumerates End of the host and compares it with `target` when given.
// Budget overruns are recorded in the report, not thrown.
void measure_end(StageReport& s, const ArcColoredDigraph& host,
                 const Monoid* target, const EndoOptions& options);
void measure_end(StageReport& s, const SimpleGraph& host,
                 const Monoid* target, const EndoOptions& options);

struct PipelineOptions {
  bool enumerate = true;
  // Stages from this index on are built but not enumerated.
  std::size_t enumerate_stages = 3;
  EndoOptions endo;
  std::optional<std::size_t> k;
};

struct LatticePipeline {
  std::unique_ptr<LatticeEncoding> encoding;
  Blowup blowup;
  SipProduct sip;
  PipelineReport report;
};

LatticePipeline run_lattice_pipeline(const Lattice& l,
                                     const PipelineOptions& options = {});

struct MonoidPipeline {
  std::vector<Element> generators;
  ArcColoredDigraph cayley;
  Blowup blowup;
  SipProduct sip;
  PipelineReport report;
};

// Empty `generators` selects minimal_generating_set(m). The trivial monoid
// has no colors and is rejected by the blow-up (NoColors).
MonoidPipeline run_monoid_pipeline(const Monoid& m,
                                   std::span<const Element> generators = {},
                                   const PipelineOptions& options = {});

}  // namespace endoforge

#endif  // ENDOFORGE_PIPELINE_HPP_
