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

// endoforge command-line driver. Exit status: 0 success, 1 failed
// verification or violated precondition, 2 malformed input.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "endoforge/algebra.hpp"
#include "endoforge/blowup.hpp"
#include "endoforge/cayley.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/error.hpp"
#include "endoforge/io.hpp"
#include "endoforge/lattice_encoding.hpp"
#include "endoforge/pipeline.hpp"
#include "endoforge/retracts.hpp"
#include "endoforge/sip.hpp"
#include "endoforge/verify.hpp"

namespace ef = endoforge;
using ef::io::Json;

namespace {

struct Common {
  int jobs = 0;
  std::uint64_t budget = ef::default_node_budget();
  std::string out;
  std::string dot;
  bool json = false;
  bool timings = false;

  ef::EndoOptions endo() const {
    ef::EndoOptions o;
    o.jobs = jobs;
    o.node_budget = budget;
    return o;
  }
};

void add_search_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--jobs", c.jobs, "worker threads (0 = OpenMP default)");
  cmd->add_option("--budget", c.budget,
                  "search node budget (default ENDOFORGE_NODE_BUDGET or 1e8)");
}

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("-o,--output", c.out, "write the constructed graph as JSON");
  cmd->add_option("--dot", c.dot, "write the constructed graph as DOT");
  cmd->add_flag("--timings", c.timings, "include wall-clock seconds in the report");
}

std::optional<std::size_t> parse_k(const std::string& k) {
  if (k == "auto") return std::nullopt;
  if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) {
    throw ef::Error(ef::ErrorCode::kMalformedInput,
                    "--k must be a positive integer or auto");
  }
  return std::stoul(k);
}

std::vector<ef::Element> parse_gens(const std::string& s) {
  std::vector<ef::Element> out;
  std::size_t at = 0;
  while (at < s.size()) {
    const auto comma = s.find(',', at);
    const std::string item = s.substr(at, comma - at);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ef::Error(ef::ErrorCode::kMalformedInput, "bad generator list");
    }
    out.push_back(static_cast<ef::Element>(std::stoul(item)));
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  return out;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <class G>
void emit_graph(const Common& c, const G& g) {
  if (!c.out.empty()) ef::io::write_text_file(c.out, ef::io::to_json(g).dump(2) + "\n");
  if (!c.dot.empty()) ef::io::write_text_file(c.dot, ef::io::to_dot(g));
}

int finish(const ef::VerifyReport& r, bool json) {
  if (json) {
    print(ef::to_json(r));
  } else {
    std::cout << r.text();
  }
  if (const ef::Check* f = r.first_failure()) {
    std::cerr << "verification failed: " << f->name;
    if (!f->detail.empty()) std::cerr << " (" << f->detail << ")";
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

struct Host {
  std::optional<ef::ArcColoredDigraph> digraph;
  std::optional<ef::SimpleGraph> graph;
};

Host read_host(const std::string& path) {
  const Json j = ef::io::read_json_file(path);
  Host h;
  if (j.is_object() && j.contains("arcs")) {
    h.digraph = ef::io::digraph_from_json(j);
  } else if (j.is_object() && j.contains("edges")) {
    h.graph = ef::io::graph_from_json(j);
  } else {
    throw ef::Error(ef::ErrorCode::kMalformedInput,
                    path + ": expected a digraph or graph document");
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"endoforge: bounded-degree graphs with prescribed endomorphism monoids"};
  app.require_subcommand(1);
  Common c;
  std::function<int()> action;

  // monoid ------------------------------------------------------------------
  auto* monoid = app.add_subcommand("monoid", "monoid tables and predicates");
  monoid->require_subcommand(1);
  std::string mspec;
  auto* validate = monoid->add_subcommand("validate", "validate a monoid table");
  validate->add_option("monoid", mspec, "JSON file or spec")->required();
  validate->callback([&] {
    action = [&] {
      const ef::Monoid m = ef::io::parse_monoid_spec(mspec);
      print(Json{{"valid", true}, {"size", m.size()}, {"identity", m.identity()}});
      return 0;
    };
  });
  auto* preds = monoid->add_subcommand("predicates", "structural predicates");
  preds->add_option("monoid", mspec, "JSON file or spec")->required();
  preds->callback([&] {
    action = [&] {
      const ef::Monoid m = ef::io::parse_monoid_spec(mspec);
      const auto p = ef::monoid_predicates(m);
      print(Json{{"size", m.size()},
                 {"commutative", p.commutative},
                 {"idempotent", p.idempotent},
                 {"completely_regular", p.completely_regular},
                 {"right_cancellativity", ef::right_cancellativity(m)},
                 {"left_cancellativity", ef::left_cancellativity(m)}});
      return 0;
    };
  });
  auto* gens = monoid->add_subcommand("gens", "minimal generating set");
  gens->add_option("monoid", mspec, "JSON file or spec")->required();
  gens->callback([&] {
    action = [&] {
      const ef::Monoid m = ef::io::parse_monoid_spec(mspec);
      print(Json{{"generators", ef::minimal_generating_set(m)}});
      return 0;
    };
  });
  std::size_t bp_p = 2;
  bool bp_table = false;
  auto* bp = monoid->add_subcommand("bp", "Babai-Pultr completely regular monoid");
  bp->add_option("--p", bp_p, "prime")->required();
  bp->add_flag("--table", bp_table, "print the full table");
  bp->callback([&] {
    action = [&] {
      const auto b = ef::babai_pultr_monoid(bp_p);
      Json j{{"p", bp_p},
             {"size", b.monoid.size()},
             {"completely_regular",
              ef::monoid_predicates(b.monoid).completely_regular},
             {"units", ef::invertible_elements(b.monoid).size()}};
      if (bp_table) j["monoid"] = ef::io::to_json(b.monoid);
      print(j);
      return 0;
    };
  });

  // build -------------------------------------------------------------------
  auto* build = app.add_subcommand("build", "constructions");
  build->require_subcommand(1);
  std::string gens_list, input, kstr = "auto", lattice_spec, monoid_spec;
  bool enumerate = false;

  auto* bcay = build->add_subcommand("cayley", "colored Cayley graph");
  auto* baug = build->add_subcommand("augment", "loopless augmented Cayley graph");
  for (auto* cmd : {bcay, baug}) {
    cmd->add_option("monoid", mspec, "JSON file or spec")->required();
    cmd->add_option("--gens", gens_list, "comma-separated generators (default: minimal)");
    add_output_flags(cmd, c);
  }
  auto cayley_action = [&](bool augment) {
    return [&, augment] {
      const ef::Monoid m = ef::io::parse_monoid_spec(mspec);
      const auto g = gens_list.empty() ? ef::minimal_generating_set(m)
                                       : parse_gens(gens_list);
      const auto d = augment ? ef::augment_cayley(m, g) : ef::cayley_colored(m, g);
      emit_graph(c, d);
      ef::PipelineReport r;
      r.source = "monoid of size " + std::to_string(m.size());
      r.stages.push_back(ef::describe_stage(augment ? "augment" : "cayley", d));
      print(ef::to_json(r, c.timings));
      return 0;
    };
  };
  bcay->callback([&] { action = cayley_action(false); });
  baug->callback([&] { action = cayley_action(true); });

  auto* benc = build->add_subcommand("encode", "lattice encoding digraph");
  benc->add_option("lattice", lattice_spec, "lattice spec or JSON file")->required();
  add_output_flags(benc, c);
  benc->callback([&] {
    action = [&] {
      const ef::Lattice l = ef::io::parse_lattice_spec(lattice_spec);
      ef::LatticeEncoding e(l, ef::LinearExtension::canonical(l.poset()));
      emit_graph(c, e.digraph());
      ef::PipelineReport r;
      r.source = "lattice of size " + std::to_string(l.size());
      r.stages.push_back(ef::describe_stage("encode", e.digraph()));
      print(ef::to_json(r, c.timings));
      return 0;
    };
  });

  auto* bblow = build->add_subcommand("blowup", "degree-reducing blow-up");
  bblow->add_option("input", input, "digraph JSON")->required();
  add_output_flags(bblow, c);
  bblow->callback([&] {
    action = [&] {
      const auto d = ef::io::digraph_from_json(ef::io::read_json_file(input));
      const auto b = ef::blow_up(d);
      emit_graph(c, b.digraph);
      ef::PipelineReport r;
      r.source = input;
      r.stages.push_back(ef::describe_stage("blowup", b.digraph));
      print(ef::to_json(r, c.timings));
      return 0;
    };
  });

  auto* bsip = build->add_subcommand("sip", "sip product with H^k gadgets");
  bsip->add_option("input", input, "digraph JSON")->required();
  bsip->add_option("--k", kstr, "gadget parameter or auto");
  add_output_flags(bsip, c);
  bsip->callback([&] {
    action = [&] {
      const auto d = ef::io::digraph_from_json(ef::io::read_json_file(input));
      const auto s = ef::sip_product(d, parse_k(kstr));
      emit_graph(c, s.graph);
      ef::PipelineReport r;
      r.source = input;
      r.k = s.gadget.k;
      r.stages.push_back(ef::describe_stage("sip", s.graph));
      print(ef::to_json(r, c.timings));
      return 0;
    };
  });

  auto* bpipe = build->add_subcommand("pipeline", "lattice or monoid to a simple graph");
  auto* lopt = bpipe->add_option("--lattice", lattice_spec, "lattice spec");
  auto* mopt = bpipe->add_option("--monoid", monoid_spec, "monoid spec");
  lopt->excludes(mopt);
  bpipe->add_option("--k", kstr, "gadget parameter or auto");
  bpipe->add_flag("--enumerate", enumerate, "enumerate End at every stage");
  add_output_flags(bpipe, c);
  add_search_flags(bpipe, c);
  bpipe->callback([&] {
    action = [&] {
      ef::PipelineOptions o;
      o.enumerate = enumerate;
      o.endo = c.endo();
      o.k = parse_k(kstr);
      if (!lattice_spec.empty()) {
        const auto p = ef::run_lattice_pipeline(
            ef::io::parse_lattice_spec(lattice_spec), o);
        emit_graph(c, p.sip.graph);
        print(ef::to_json(p.report, c.timings));
        return p.report.passed(3) ? 0 : 1;
      }
      if (monoid_spec.empty()) {
        throw ef::Error(ef::ErrorCode::kMalformedInput,
                        "one of --lattice or --monoid is required");
      }
      const ef::Monoid m = ef::io::parse_monoid_spec(monoid_spec);
      const auto p = ef::run_monoid_pipeline(m, {}, o);
      emit_graph(c, p.sip.graph);
      print(ef::to_json(p.report, c.timings));
      const std::size_t k = ef::right_cancellativity(m);
      return p.report.passed(std::max<std::size_t>(k + 1, 3)) ? 0 : 1;
    };
  });

  // endo --------------------------------------------------------------------
  auto* endo = app.add_subcommand("endo", "enumerate endomorphisms");
  bool want_count = false, want_maps = false, want_table = false;
  endo->add_option("input", input, "digraph or graph JSON")->required();
  auto* fc = endo->add_flag("--count", want_count, "print |End|");
  auto* fm = endo->add_flag("--maps", want_maps, "print every map");
  auto* ft = endo->add_flag("--table", want_table, "print the composition table");
  fc->excludes(fm)->excludes(ft);
  fm->excludes(ft);
  add_search_flags(endo, c);
  endo->callback([&] {
    action = [&] {
      const Host h = read_host(input);
      ef::EndoStats st;
      const auto t = h.digraph ? ef::enumerate_endomorphisms(*h.digraph, c.endo(), &st)
                               : ef::enumerate_endomorphisms(*h.graph, c.endo(), &st);
      Json j{{"count", t.size()},
             {"automorphisms", ef::automorphisms(t).size()},
             {"retractions", ef::retractions(t).size()}};
      if (want_maps) j["maps"] = t.maps();
      if (want_table) j["monoid"] = ef::io::to_json(ef::endo_monoid_table(t));
      print(j);
      return 0;
    };
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "property checks");
  verify->require_subcommand(1);
  verify->add_flag("--json", c.json, "JSON report");
  std::size_t gadget_k = 1;
  std::string poset_spec;
  bool allow_non_thick = false;

  auto* venc = verify->add_subcommand("encoding", "End of the lattice encoding");
  venc->add_option("--lattice", lattice_spec, "lattice spec")->required();
  add_search_flags(venc, c);
  venc->callback([&] {
    action = [&] {
      return finish(ef::verify_encoding(ef::io::parse_lattice_spec(lattice_spec),
                                        c.endo()),
                    c.json);
    };
  });
  auto* vblow = verify->add_subcommand("blowup", "End preserved by the blow-up");
  vblow->add_option("--input", input, "digraph JSON")->required();
  add_search_flags(vblow, c);
  vblow->callback([&] {
    action = [&] {
      const auto d = ef::io::digraph_from_json(ef::io::read_json_file(input));
      return finish(ef::verify_blowup(d, c.endo()), c.json);
    };
  });
  auto* vsip = verify->add_subcommand("sip", "End preserved by the sip product");
  vsip->add_option("--input", input, "digraph JSON")->required();
  vsip->add_option("--k", kstr, "gadget parameter or auto");
  add_search_flags(vsip, c);
  vsip->callback([&] {
    action = [&] {
      const auto d = ef::io::digraph_from_json(ef::io::read_json_file(input));
      return finish(ef::verify_sip(d, parse_k(kstr), c.endo()), c.json);
    };
  });
  auto* vpipe = verify->add_subcommand("pipeline", "End along the whole pipeline");
  auto* vl = vpipe->add_option("--lattice", lattice_spec, "lattice spec");
  auto* vm = vpipe->add_option("--monoid", monoid_spec, "monoid spec");
  vl->excludes(vm);
  vpipe->add_option("--k", kstr, "gadget parameter or auto");
  add_search_flags(vpipe, c);
  vpipe->callback([&] {
    action = [&] {
      ef::PipelineOptions o;
      o.endo = c.endo();
      o.k = parse_k(kstr);
      if (!lattice_spec.empty()) {
        return finish(ef::verify_lattice_pipeline(
                          ef::io::parse_lattice_spec(lattice_spec), o),
                      c.json);
      }
      if (monoid_spec.empty()) {
        throw ef::Error(ef::ErrorCode::kMalformedInput,
                        "one of --lattice or --monoid is required");
      }
      return finish(ef::verify_monoid_pipeline(
                        ef::io::parse_monoid_spec(monoid_spec), o),
                    c.json);
    };
  });
  auto* vgad = verify->add_subcommand("gadget", "H^k counts, girth, rigidity");
  vgad->add_option("--k", gadget_k, "gadget parameter")->required()->check(CLI::PositiveNumber);
  add_search_flags(vgad, c);
  vgad->callback([&] {
    action = [&] { return finish(ef::verify_gadget(gadget_k, c.endo()), c.json); };
  });
  auto* vbp = verify->add_subcommand("bp-monoid", "Babai-Pultr monoid properties");
  vbp->add_option("--p", bp_p, "prime")->required();
  vbp->callback([&] {
    action = [&] { return finish(ef::verify_bp_monoid(bp_p), c.json); };
  });
  auto* vmin = verify->add_subcommand("minor", "retracts, private parts, minor witness");
  auto* vpo = vmin->add_option("--poset", poset_spec, "poset P; L is its down-set lattice");
  auto* vla = vmin->add_option("--lattice", lattice_spec, "lattice L");
  vpo->excludes(vla);
  vmin->add_flag("--allow-non-thick", allow_non_thick,
                 "attempt the witness without the thickness precondition");
  add_search_flags(vmin, c);
  auto minor_lattice = [&] {
    if (!poset_spec.empty()) return ef::ideal_lattice(ef::io::parse_poset_spec(poset_spec));
    if (lattice_spec.empty()) {
      throw ef::Error(ef::ErrorCode::kMalformedInput,
                      "one of --poset or --lattice is required");
    }
    return ef::io::parse_lattice_spec(lattice_spec);
  };
  vmin->callback([&] {
    action = [&] {
      const auto v = ef::verify_minor(minor_lattice(), allow_non_thick, c.endo());
      return finish(v.report, c.json);
    };
  });

  // witness -----------------------------------------------------------------
  auto* witness = app.add_subcommand("witness", "minor models");
  witness->require_subcommand(1);
  std::string host_out, host_in, model_in;
  auto* wmin = witness->add_subcommand("minor", "emit a cover-graph minor model");
  auto* wpo = wmin->add_option("--poset", poset_spec, "poset P; L is its down-set lattice");
  auto* wla = wmin->add_option("--lattice", lattice_spec, "lattice L");
  wpo->excludes(wla);
  wmin->add_option("-o,--output", c.out, "model JSON (default: stdout)");
  wmin->add_option("--host-out", host_out, "write the host graph JSON");
  wmin->add_flag("--allow-non-thick", allow_non_thick,
                 "emit a model without the thickness precondition");
  add_search_flags(wmin, c);
  wmin->callback([&] {
    action = [&] {
      const ef::Lattice l = minor_lattice();
      ef::LatticeEncoding e(l, ef::LinearExtension::canonical(l.poset()));
      const auto host = ef::underlying_simple_graph(e.digraph());
      const auto t = ef::enumerate_endomorphisms(e.digraph(), c.endo());
      const auto w = ef::minor_witness(host, ef::retract_lattice(t), allow_non_thick);
      const std::string model = ef::io::to_json(w.model).dump(2) + "\n";
      if (c.out.empty()) {
        std::cout << model;
      } else {
        ef::io::write_text_file(c.out, model);
      }
      if (!host_out.empty()) {
        ef::io::write_text_file(host_out, ef::io::to_json(host).dump(2) + "\n");
      }
      for (const auto& n : w.notes) std::cerr << "note: " << n << "\n";
      return ef::check_minor_model(host, w.model).ok ? 0 : 1;
    };
  });
  auto* wchk = witness->add_subcommand("check", "re-verify a minor model");
  wchk->add_option("--host", host_in, "host graph JSON")->required();
  wchk->add_option("--model", model_in, "model JSON")->required();
  wchk->callback([&] {
    action = [&] {
      const auto host = ef::io::graph_from_json(ef::io::read_json_file(host_in));
      const auto model = ef::io::minor_model_from_json(ef::io::read_json_file(model_in));
      const auto r = ef::check_minor_model(host, model);
      print(Json{{"ok", r.ok}, {"failure", r.failure}});
      return r.ok ? 0 : 1;
    };
  });

  // export ------------------------------------------------------------------
  auto* exp = app.add_subcommand("export", "format conversion");
  exp->require_subcommand(1);
  auto* edot = exp->add_subcommand("dot", "graph or digraph JSON to DOT");
  edot->add_option("input", input, "digraph or graph JSON")->required();
  edot->add_option("-o,--output", c.out, "output file (default: stdout)");
  edot->callback([&] {
    action = [&] {
      const Host h = read_host(input);
      const std::string text = h.digraph ? ef::io::to_dot(*h.digraph)
                                         : ef::io::to_dot(*h.graph);
      if (c.out.empty()) {
        std::cout << text;
      } else {
        ef::io::write_text_file(c.out, text);
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const ef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_malformed_input() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
