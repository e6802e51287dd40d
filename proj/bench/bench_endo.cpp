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

// Serial reference (jobs = 1) against the OpenMP enumeration on hosts from
// the two pipelines.

#include <benchmark/benchmark.h>

#include "endoforge/blowup.hpp"
#include "endoforge/cayley.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/pipeline.hpp"
#include "endoforge/sip.hpp"

namespace ef = endoforge;

namespace {

const ef::SimpleGraph& z3_sip() {
  static const ef::SimpleGraph g = [] {
    const ef::Element gens[] = {1};
    return ef::sip_product(ef::augment_cayley(ef::cyclic_group(3), gens)).graph;
  }();
  return g;
}

const ef::SimpleGraph& chain_sip() {
  static const ef::SimpleGraph g = [] {
    ef::PipelineOptions o;
    o.enumerate = false;
    const auto l = ef::Lattice::from_poset(ef::chain_poset(2));
    return ef::run_lattice_pipeline(l, o).sip.graph;
  }();
  return g;
}

const ef::ArcColoredDigraph& diamond_blowup() {
  static const ef::ArcColoredDigraph d = [] {
    const auto l = ef::Lattice::from_poset(
        ef::Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    ef::PipelineOptions o;
    o.enumerate = false;
    return ef::run_lattice_pipeline(l, o).blowup.digraph;
  }();
  return d;
}

template <class Host>
void run(benchmark::State& state, const Host& host) {
  ef::EndoOptions o;
  o.jobs = static_cast<int>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    size = ef::enumerate_endomorphisms(host, o).size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["end"] = static_cast<double>(size);
}

void BM_Z3Sip(benchmark::State& s) { run(s, z3_sip()); }
void BM_ChainSip(benchmark::State& s) { run(s, chain_sip()); }
void BM_DiamondBlowup(benchmark::State& s) { run(s, diamond_blowup()); }

}  // namespace

// Arg 1 is the serial path; 0 lets OpenMP pick the thread count.
BENCHMARK(BM_Z3Sip)->Arg(1)->Arg(2)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainSip)->Arg(1)->Arg(2)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiamondBlowup)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
