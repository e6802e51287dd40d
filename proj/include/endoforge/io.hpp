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

// JSON and DOT serialization plus the small textual specs the CLI accepts.
//
//   monoid   {"size": n, "identity": e, "table": [[...], ...]}
//   poset    {"size": n, "leq": [[0/1, ...], ...], "labels": [...]?}
//   digraph  {"vertices": [labels], "colors": [labels],
//             "arcs": [{"color": c, "from": u, "to": v}, ...]}
//   graph    {"vertices": [labels], "edges": [[u, v], ...]}
//   minor    {"target": graph, "branch_sets": [[v...]...],
//             "cover_edges": [[u, v], ...]}
//
// Malformed documents raise Error(kMalformedInput).

#ifndef ENDOFORGE_IO_HPP_
#define ENDOFORGE_IO_HPP_

#include <string>

#include "endoforge/algebra.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/graph.hpp"
#include "endoforge/retracts.hpp"
#include "json.hpp"

namespace endoforge::io {

using Json = nlohmann::ordered_json;

Json to_json(const Monoid& m);
Json to_json(const Poset& p);
Json to_json(const ArcColoredDigraph& d);
Json to_json(const SimpleGraph& g);
Json to_json(const MinorModel& m);
Json to_json(const TransformationMonoid& t);

Monoid monoid_from_json(const Json& j);
Poset poset_from_json(const Json& j);
ArcColoredDigraph digraph_from_json(const Json& j);
SimpleGraph graph_from_json(const Json& j);
MinorModel minor_model_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// "chain:n", "antichain:n", "bn:n" (Boolean lattice on n atoms),
// "example" (0 < a, b < 1), "n5", "m3", or a JSON file holding a poset.
Poset parse_poset_spec(const std::string& spec);
// A poset spec that is a lattice, "ideals:<poset spec>" for its down-set
// lattice, or a JSON file holding a poset or a meet table.
Lattice parse_lattice_spec(const std::string& spec);
// "cyclic:n", "product:<a>,<b>" of cyclic orders, "leftzero:n" (n-1 left
// zeros plus identity), "bp:p", "meet:<lattice spec>", or a JSON file.
Monoid parse_monoid_spec(const std::string& spec);

std::string to_dot(const ArcColoredDigraph& d);
std::string to_dot(const SimpleGraph& g);

}  // namespace endoforge::io

#endif  // ENDOFORGE_IO_HPP_
