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

#include "endoforge/cayley.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "endoforge/error.hpp"

namespace endoforge {
namespace {

void check_generators(const Monoid& m, std::span<const Element> gens) {
  std::vector<Element> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kMalformedInput, "repeated generator");
  }
  for (Element g : gens) {
    if (g >= m.size()) {
      throw Error(ErrorCode::kMalformedInput,
                  "generator " + std::to_string(g) + " out of range");
    }
  }
  if (!generates(m, gens)) {
    throw Error(ErrorCode::kNotGenerating, "generators do not generate M");
  }
}

}  // namespace

ArcColoredDigraph cayley_colored(const Monoid& m,
                                 std::span<const Element> gens) {
  check_generators(m, gens);
  DigraphBuilder b;
  for (Element x = 0; x < m.size(); ++x) b.add_vertex(std::to_string(x));
  for (Element g : gens) {
    const Color c = b.add_color(std::to_string(g));
    for (Element x = 0; x < m.size(); ++x) b.add_arc(c, x, m(x, g));
  }
  return std::move(b).build();
}

ArcColoredDigraph augment_cayley(const Monoid& m,
                                 std::span<const Element> gens) {
  check_generators(m, gens);
  const std::size_t n = m.size();
  if (gens.size() + 1 > n && !(n == 1 && gens.empty())) {
    throw Error(ErrorCode::kTooManyGenerators,
                std::to_string(gens.size()) + " generators for |M| = " +
                    std::to_string(n));
  }
  DigraphBuilder b;
  for (Element x = 0; x < n; ++x) b.add_vertex(std::to_string(x));
  auto subdivide = [&](const std::string& name, auto&& target) {
    const Color first = b.add_color(name);
    const Color second = b.add_color(name + "'");
    for (Element x = 0; x < n; ++x) {
      const Element y = target(x);
      const Vertex mid = b.add_vertex("(" + name + "," + std::to_string(x) +
                                      "," + std::to_string(y) + ")");
      b.add_arc(first, x, mid);
      b.add_arc(second, mid, y);
    }
  };
  for (Element g : gens)
    subdivide(std::to_string(g), [&](Element x) { return m(x, g); });
  subdivide("loop", [](Element x) { return x; });
  return std::move(b).build();
}

}  // namespace endoforge
