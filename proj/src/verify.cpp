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

#include "endoforge/verify.hpp"

#include <algorithm>
#include <sstream>

#include "endoforge/blowup.hpp"
#include "endoforge/error.hpp"
#include "endoforge/lattice_encoding.hpp"
#include "endoforge/sip.hpp"

namespace endoforge {
namespace {

std::string num(std::size_t x) { return std::to_string(x); }

// Enumerates End or records a skipped check and returns nullopt.
template <class Host>
std::optional<TransformationMonoid> try_end(VerifyReport& r,
                                            const std::string& what,
                                            const Host& host,
                                            const EndoOptions& options) {
  try {
    return enumerate_endomorphisms(host, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    r.skip("End(" + what + ") enumeration", e.what());
    return std::nullopt;
  }
}

bool tables_isomorphic(const TransformationMonoid& a,
                       const TransformationMonoid& b) {
  if (a.size() != b.size()) return false;
  return monoid_isomorphic(endo_monoid_table(a), endo_monoid_table(b))
      .has_value();
}

}  // namespace

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) {
    return !c.ok && !c.skipped;
  });
}

Check& VerifyReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, false, std::move(detail)});
  return checks.back();
}

Check& VerifyReport::skip(std::string name, std::string why) {
  checks.push_back({std::move(name), false, true, std::move(why)});
  return checks.back();
}

const Check* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.ok && !c.skipped) return &c;
  }
  return nullptr;
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << subject << "\n";
  for (const auto& c : checks) {
    out << "  " << (c.skipped ? "SKIP" : c.ok ? "ok  " : "FAIL") << "  "
        << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  out << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

io::Json to_json(const VerifyReport& r) {
  io::Json checks = io::Json::array();
  for (const auto& c : r.checks) {
    io::Json j{{"name", c.name},
               {"status", c.skipped ? "skipped" : c.ok ? "ok" : "failed"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return io::Json{{"subject", r.subject}, {"ok", r.ok()},
                  {"checks", std::move(checks)}};
}

VerifyReport verify_encoding(const Lattice& l, const EndoOptions& options) {
  VerifyReport r;
  r.subject = "encoding of a lattice of size " + num(l.size());
  LatticeEncoding enc(l, LinearExtension::canonical(l.poset()));
  const ArcColoredDigraph& d = enc.digraph();
  const DegreeStats st = degree_stats(d);
  r.add("per-color in/out-degree at most 2", st.max_color_degree <= 2,
        "max " + num(st.max_color_degree));
  const auto t = try_end(r, "encoding", d, options);
  if (!t) return r;
  r.add("|End| = |L|", t->size() == l.size(),
        num(t->size()) + " vs " + num(l.size()));

  std::vector<std::size_t> index(l.size());
  bool all_endo = true, all_found = true, ideals = true;
  for (Element w = 0; w < l.size(); ++w) {
    const auto phi = enc.phi(w);
    all_endo = all_endo && is_endomorphism(d, phi);
    const auto at = t->find(phi);
    all_found = all_found && at.has_value();
    if (at) index[w] = *at;
    try {
      ideals = ideals && enc.fixed_petal_ideal(phi) == w;
    } catch (const Error&) {
      ideals = false;
    }
  }
  r.add("every phi_w is an endomorphism", all_endo);
  r.add("End = {phi_w : w in L}", all_found && t->size() == l.size());
  r.add("phi_w fixes exactly the petals below w", ideals);
  if (all_found && t->size() == l.size()) {
    const Monoid table = endo_monoid_table(*t);
    bool hom = true;
    for (Element x = 0; x < l.size(); ++x) {
      for (Element y = 0; y < l.size(); ++y) {
        hom = hom && table(static_cast<Element>(index[x]),
                           static_cast<Element>(index[y])) ==
                         index[l.meet(x, y)];
      }
    }
    r.add("w -> phi_w is an isomorphism (L, meet) -> End", hom);
  }
  return r;
}

VerifyReport verify_gadget(std::size_t k, const EndoOptions& options) {
  VerifyReport r;
  r.subject = "gadget H^" + num(k);
  const HPGraph h = hp_graph(k);
  const SimpleGraph& g = h.graph;
  r.add("|V| = 6k+7", g.num_vertices() == 6 * k + 7, num(g.num_vertices()));
  r.add("|E| = 6k+9", g.num_edges() == 6 * k + 9, num(g.num_edges()));
  const auto gi = girth(g);
  r.add("girth = 2k+5", gi && *gi == 2 * k + 5, gi ? num(*gi) : "acyclic");
  bool apart = true;
  for (Vertex v : h.h_plus) {
    apart = apart && std::find(h.branch.begin(), h.branch.end(), v) ==
                         h.branch.end() &&
            std::find(h.h_minus.begin(), h.h_minus.end(), v) == h.h_minus.end();
  }
  for (Vertex v : h.h_minus) {
    apart = apart &&
            std::find(h.branch.begin(), h.branch.end(), v) == h.branch.end();
  }
  const std::string sizes =
      "|H+| = " + num(h.h_plus.size()) + ", |H-| = " + num(h.h_minus.size());
  if (k >= 2) {
    r.add("H+ and H- disjoint from each other and the branch vertices", apart,
          sizes);
  } else if (!apart) {
    // For k = 1 the far part of Z2 reaches b0; sip products start at k = 2.
    r.skip("H+ and H- disjoint from each other and the branch vertices",
           sizes + "; not used as a sip gadget below k = 2");
  }
  if (const auto t = try_end(r, "H^k", g, options)) {
    r.add("H^k is rigid", t->size() == 1 && t->identity_index().has_value(),
          "|End| = " + num(t->size()));
  }
  return r;
}

VerifyReport verify_blowup(const ArcColoredDigraph& d,
                           const EndoOptions& options) {
  VerifyReport r;
  r.subject = "blow-up of a digraph with " + num(d.num_vertices()) +
              " vertices and " + num(d.num_colors()) + " colors";
  const Blowup b = blow_up(d);
  const DegreeStats sd = degree_stats(d);
  const DegreeStats sb = degree_stats(b.digraph);
  r.add("blow-up is loopless", !b.digraph.has_loops());
  r.add("min in- and out-degree of the blow-up are 1",
        sb.min_out == 1 && sb.min_in == 1,
        num(sb.min_out) + "/" + num(sb.min_in));
  const std::size_t bound = std::max<std::size_t>(sd.max_color_degree + 1, 3);
  r.add("max degree at most max(per-color degree + 1, 3)",
        sb.max_degree <= bound, num(sb.max_degree) + " <= " + num(bound));
  r.add("3|K|+1 colors", b.digraph.num_colors() == 3 * d.num_colors() + 1);
  const auto td = try_end(r, "D", d, options);
  const auto tb = try_end(r, "D'", b.digraph, options);
  if (!td || !tb) return r;
  r.add("|End(D')| = |End(D)|", td->size() == tb->size(),
        num(tb->size()) + " vs " + num(td->size()));
  bool lifts = true;
  for (const auto& phi : td->maps()) {
    lifts = lifts && tb->find(lift_endomorphism(d, b, phi)).has_value();
  }
  r.add("every lifted endomorphism is in End(D')", lifts);
  if (td->size() <= 4096) {
    r.add("End(D') isomorphic to End(D)", tables_isomorphic(*td, *tb));
  }
  return r;
}

VerifyReport verify_sip(const ArcColoredDigraph& d, std::optional<std::size_t> k,
                        const EndoOptions& options) {
  VerifyReport r;
  r.subject = "sip product of a digraph with " + num(d.num_vertices()) +
              " vertices and " + num(d.num_colors()) + " colors";
  const DegreeStats sd = degree_stats(d);
  r.add("input is loopless", !d.has_loops());
  r.add("input has min in- and out-degree at least 1",
        sd.min_out >= 1 && sd.min_in >= 1);
  if (!r.ok()) return r;
  const SipProduct s = sip_product(d, k);
  const SimpleGraph& g = s.graph;
  const std::size_t hv = s.gadget.graph.num_vertices();
  const std::size_t he = s.gadget.graph.num_edges();
  r.add("max degree = max(max degree of D, 3)",
        g.max_degree() == std::max<std::size_t>(sd.max_degree, 3),
        num(g.max_degree()));
  r.add("|V| = |D| + |H^k| * arcs",
        g.num_vertices() == d.num_vertices() + hv * d.num_arcs());
  r.add("|E| = (|E(H^k)| + 2) * arcs", g.num_edges() == (he + 2) * d.num_arcs());
  const auto td = try_end(r, "D", d, options);
  const auto ts = try_end(r, "sip", g, options);
  if (!td || !ts) return r;
  r.add("|End(sip)| = |End(D)|", td->size() == ts->size(),
        num(ts->size()) + " vs " + num(td->size()));
  bool lifts = true;
  for (const auto& phi : td->maps()) {
    lifts = lifts && ts->find(lift_sip(d, s, phi)).has_value();
  }
  r.add("every lifted endomorphism is in End(sip)", lifts);
  if (td->size() <= 4096) {
    r.add("End(sip) isomorphic to End(D)", tables_isomorphic(*td, *ts));
  }
  return r;
}

namespace {

void stage_checks(VerifyReport& r, const PipelineReport& p) {
  for (const auto& s : p.stages) {
    if (s.end_isomorphic) {
      r.add("End(" + s.name + ") isomorphic to the source monoid",
            *s.end_isomorphic, "|End| = " + num(*s.end_size));
    } else if (!s.note.empty()) {
      r.skip("End(" + s.name + ") isomorphic to the source monoid", s.note);
    }
  }
}

}  // namespace

VerifyReport verify_lattice_pipeline(const Lattice& l,
                                     const PipelineOptions& options) {
  VerifyReport r;
  const LatticePipeline p = run_lattice_pipeline(l, options);
  r.subject = "pipeline for a lattice of size " + num(l.size()) + " (k = " +
              num(p.report.k) + ")";
  const StageReport& blow = p.report.stages[1];
  r.add("blow-up is loopless with min in/out-degree 1",
        blow.loopless && blow.min_out == 1 && blow.min_in == 1);
  r.add("final graph has max degree at most 3",
        p.report.stages.back().max_degree <= 3,
        num(p.report.stages.back().max_degree));
  stage_checks(r, p.report);
  return r;
}

VerifyReport verify_monoid_pipeline(const Monoid& m,
                                    const PipelineOptions& options) {
  VerifyReport r;
  const MonoidPipeline p = run_monoid_pipeline(m, {}, options);
  const std::size_t kc = right_cancellativity(m);
  const std::size_t bound = std::max<std::size_t>(kc + 1, 3);
  r.subject = "pipeline for a right " + num(kc) +
              "-cancellative monoid of size " + num(m.size()) + " (k = " +
              num(p.report.k) + ")";
  r.add("per-color in-degree of the Cayley graph at most k",
        p.report.stages[0].max_color_degree <= std::max<std::size_t>(kc, 1),
        num(p.report.stages[0].max_color_degree));
  r.add("final graph has max degree at most max(k+1, 3)",
        p.report.stages.back().max_degree <= bound,
        num(p.report.stages.back().max_degree) + " <= " + num(bound));
  stage_checks(r, p.report);
  return r;
}

VerifyReport verify_bp_monoid(std::size_t p) {
  VerifyReport r;
  r.subject = "Babai-Pultr monoid for p = " + num(p);
  const BabaiPultrMonoid bp = babai_pultr_monoid(p);
  const Monoid& m = bp.monoid;
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= p; ++i) fact *= i;
  const std::size_t expected = fact * fact * fact + p * p + 3 * p;
  r.add("|M| = (p!)^3 + p^2 + 3p", m.size() == expected,
        num(m.size()) + " vs " + num(expected));
  bool valid = true;
  try {
    validate_monoid(m.rows(), m.identity());
  } catch (const Error&) {
    valid = false;
  }
  r.add("multiplication table validates", valid);
  r.add("completely regular", monoid_predicates(m).completely_regular);
  const auto units = invertible_elements(m);
  const Monoid group = m.restrict_to(units);
  const Monoid zp2 = direct_product(cyclic_group(p), cyclic_group(p));
  r.add("units form a group isomorphic to Z_p x Z_p",
        monoid_isomorphic(group, zp2).has_value(),
        num(units.size()) + " units");
  return r;
}

MinorVerification verify_minor(const Lattice& l, bool allow_non_thick,
                               const EndoOptions& options) {
  MinorVerification out;
  VerifyReport& r = out.report;
  r.subject = "retracts and minor witness for a lattice of size " +
              num(l.size());
  LatticeEncoding enc(l, LinearExtension::canonical(l.poset()));
  out.host = underlying_simple_graph(enc.digraph());
  const auto t = try_end(r, "encoding", enc.digraph(), options);
  if (!t) return out;
  out.family = retract_lattice(*t);
  const RetractFamily& fam = *out.family;
  r.add("retracts ordered by inclusion form a lattice isomorphic to L",
        monoid_isomorphic(fam.lattice.meet_monoid(), l.meet_monoid())
            .has_value());

  const JoinIrreducibles j = join_irreducibles(fam.lattice);
  std::vector<std::vector<Vertex>> parts;
  bool nonempty = true;
  std::string problems;
  for (Element y : j.elements) {
    try {
      parts.push_back(private_part(out.host, fam, y));
    } catch (const Error& e) {
      nonempty = false;
      problems += std::string(e.what()) + "; ";
      parts.emplace_back();
    }
  }
  r.add("private parts nonempty and connected", nonempty, problems);
  std::string overlaps;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      std::vector<Vertex> common;
      std::set_intersection(parts[a].begin(), parts[a].end(), parts[b].begin(),
                            parts[b].end(), std::back_inserter(common));
      if (!common.empty()) {
        overlaps += "P(" + num(j.elements[a]) + ") and P(" +
                    num(j.elements[b]) + ") share " + num(common.size()) +
                    " vertices; ";
      }
    }
  }
  r.add("private parts pairwise disjoint", overlaps.empty(), overlaps);

  const bool empty = j.poset.size() == 0;
  const bool thick = empty || (is_lattice(j.poset) && is_thick(j.poset));
  const bool semi = empty || is_meet_semilattice(j.poset);
  if (!thick && !semi && !allow_non_thick) {
    r.skip("cover graph of J(L) is a minor",
           "J(L) is neither a thick lattice nor a meet-semilattice");
    return out;
  }
  try {
    out.witness = minor_witness(out.host, fam, allow_non_thick);
    const MinorCheck c = check_minor_model(out.host, out.witness->model);
    r.add("cover graph of J(L) is a minor (certificate re-checked)", c.ok,
          c.failure);
  } catch (const Error& e) {
    r.add("cover graph of J(L) is a minor (certificate re-checked)", false,
          e.what());
  }
  return out;
}

}  // namespace endoforge
