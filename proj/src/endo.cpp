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

#include "endoforge/endo.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "endoforge/error.hpp"

namespace endoforge {

std::uint64_t default_node_budget() {
  constexpr std::uint64_t kDefault = 100'000'000;
  const char* env = std::getenv("ENDOFORGE_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return v;
}

TransformationMonoid::TransformationMonoid(std::size_t degree,
                                           std::vector<VertexMap> maps)
    : degree_(degree), maps_(std::move(maps)) {
  for (const auto& m : maps_) {
    if (m.size() != degree_) {
      throw Error(ErrorCode::kMalformedInput, "map of wrong degree");
    }
    for (Vertex v : m) {
      if (v >= degree_) {
        throw Error(ErrorCode::kMalformedInput, "map value out of range");
      }
    }
  }
  std::sort(maps_.begin(), maps_.end());
  maps_.erase(std::unique(maps_.begin(), maps_.end()), maps_.end());
}

std::optional<std::size_t> TransformationMonoid::find(
    std::span<const Vertex> map) const {
  auto it = std::lower_bound(
      maps_.begin(), maps_.end(), map, [](const VertexMap& a, auto b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
  if (it == maps_.end() || !std::equal(it->begin(), it->end(), map.begin(),
                                       map.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - maps_.begin());
}

std::optional<std::size_t> TransformationMonoid::identity_index() const {
  VertexMap id(degree_);
  std::iota(id.begin(), id.end(), Vertex{0});
  return find(id);
}

VertexMap compose(std::span<const Vertex> f, std::span<const Vertex> g) {
  VertexMap out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = f[g[v]];
  return out;
}

ArcColoredDigraph symmetric_digraph(const SimpleGraph& g) {
  std::vector<std::vector<Arc>> arcs(1);
  for (auto [u, v] : g.edges()) {
    arcs[0].push_back({u, v});
    arcs[0].push_back({v, u});
  }
  return ArcColoredDigraph(g.labels(), {"e"}, std::move(arcs));
}

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

struct Neighbor {
  Color color;
  Vertex vertex;
  bool outgoing;  // arc v -> vertex when true, vertex -> v otherwise
};

// Immutable per-host data shared by all workers.
struct Host {
  const ArcColoredDigraph& d;
  std::size_t n = 0;
  std::size_t words = 0;
  // Signature bitsets: out-colors, in-colors, loop-colors.
  std::vector<std::uint64_t> sig;
  std::vector<std::vector<Neighbor>> nbrs;  // non-loop arcs
  std::vector<std::vector<Vertex>> undirected;
  std::vector<Vertex> order;

  std::size_t g = 0;  // odd girth in use, 0 if none
  std::vector<std::vector<Vertex>> cycles;
  // (cycle, position) for every cycle through a vertex.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> on_cycle;

  explicit Host(const ArcColoredDigraph& host) : d(host), n(host.num_vertices()) {
    const std::size_t k = host.num_colors();
    words = (k + 63) / 64;
    sig.assign(n * 3 * words, 0);
    nbrs.resize(n);
    std::vector<std::vector<Vertex>> und(n);
    for (Color c = 0; c < k; ++c) {
      for (const Arc& a : host.arcs(c)) {
        set_bit(a.from, 0, c);
        set_bit(a.to, 1, c);
        if (a.from == a.to) {
          set_bit(a.from, 2, c);
          continue;
        }
        nbrs[a.from].push_back({c, a.to, true});
        nbrs[a.to].push_back({c, a.from, false});
        und[a.from].push_back(a.to);
        und[a.to].push_back(a.from);
      }
    }
    for (auto& u : und) {
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
    }
    undirected = std::move(und);
  }

  void set_bit(Vertex v, int kind, Color c) {
    sig[(v * 3 + kind) * words + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  // sig(v) subset of sig(w).
  bool signature_fits(Vertex v, Vertex w) const {
    const std::uint64_t* a = &sig[v * 3 * words];
    const std::uint64_t* b = &sig[w * 3 * words];
    for (std::size_t i = 0; i < 3 * words; ++i) {
      if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
  }

  void find_cycles(std::size_t girth_value, std::uint64_t& work,
                   std::uint64_t work_cap, std::size_t cycle_cap);
  void build_order();
};

// All cycles of length g = 2r + 1 in a graph of girth g. A cycle is listed
// from its least vertex s: the radius-r ball around s among vertices >= s is
// a tree, and the cycle is two tree paths closed by an edge between leaves
// on different branches.
void Host::find_cycles(std::size_t girth_value, std::uint64_t& work,
                       std::uint64_t work_cap, std::size_t cycle_cap) {
  const std::size_t r = girth_value / 2;
  std::vector<std::uint32_t> depth(n, kNone);
  std::vector<Vertex> parent(n), branch(n), queue, leaves;
  std::vector<std::vector<Vertex>> found;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex v : queue) depth[v] = kNone;
    queue.assign(1, s);
    leaves.clear();
    depth[s] = 0;
    parent[s] = s;
    branch[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (++work > work_cap) return;
      if (depth[u] == r) {
        leaves.push_back(u);
        continue;
      }
      for (Vertex w : undirected[u]) {
        if (w <= s || depth[w] != kNone) continue;
        depth[w] = depth[u] + 1;
        parent[w] = u;
        branch[w] = u == s ? w : branch[u];
        queue.push_back(w);
      }
    }
    for (Vertex u : leaves) {
      for (Vertex w : undirected[u]) {
        if (w <= u || depth[w] != r || branch[w] == branch[u]) continue;
        std::vector<Vertex> cyc;
        for (Vertex x = u; x != s; x = parent[x]) cyc.push_back(x);
        cyc.push_back(s);
        std::reverse(cyc.begin(), cyc.end());
        for (Vertex x = w; x != s; x = parent[x]) cyc.push_back(x);
        found.push_back(std::move(cyc));
        if (found.size() > cycle_cap) return;
      }
    }
  }
  g = girth_value;
  cycles = std::move(found);
  on_cycle.assign(n, {});
  for (std::uint32_t i = 0; i < cycles.size(); ++i) {
    for (std::uint32_t p = 0; p < cycles[i].size(); ++p) {
      on_cycle[cycles[i][p]].push_back({i, p});
    }
  }
}

// Maximum-cardinality order. Roots prefer vertices on forced cycles, then
// high degree.
void Host::build_order() {
  auto weight = [&](Vertex v) {
    return std::tuple(on_cycle.empty() ? std::size_t{0} : on_cycle[v].size(),
                      nbrs[v].size(), undirected[v].size());
  };
  std::vector<Vertex> by_weight(n);
  std::iota(by_weight.begin(), by_weight.end(), Vertex{0});
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [&](Vertex a, Vertex b) { return weight(a) > weight(b); });
  std::vector<std::size_t> placed_nbrs(n, 0);
  std::vector<bool> done(n, false);
  using Key = std::tuple<std::size_t, std::size_t, Vertex>;  // count, deg, -v
  std::priority_queue<std::pair<Key, Vertex>> heap;
  order.clear();
  std::size_t next_root = 0;
  while (order.size() < n) {
    Vertex v = kNone;
    while (!heap.empty()) {
      auto [key, u] = heap.top();
      heap.pop();
      if (!done[u] && std::get<0>(key) == placed_nbrs[u]) {
        v = u;
        break;
      }
    }
    if (v == kNone) {
      while (done[by_weight[next_root]]) ++next_root;
      v = by_weight[next_root];
    }
    done[v] = true;
    order.push_back(v);
    for (Vertex u : undirected[v]) {
      if (done[u]) continue;
      ++placed_nbrs[u];
      heap.push({{placed_nbrs[u], nbrs[u].size(), kNone - u}, u});
    }
  }
}

struct SharedBudget {
  std::uint64_t limit;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exhausted{false};
};

class Search {
 public:
  Search(const Host& h, SharedBudget& budget)
      : h_(h), budget_(budget), assign_(h.n, kNone),
        anchored_(h.cycles.size(), false) {}

  // Enumerates all endomorphisms sending order[0] to root_image.
  void run(Vertex root_image);

  std::vector<VertexMap>& results() { return results_; }
  std::uint64_t nodes() const { return nodes_; }
  void flush() {
    budget_.used.fetch_add(pending_nodes_);
    pending_nodes_ = 0;
  }

 private:
  enum class Kind : std::uint8_t { kVertex, kCycle };
  struct Frame {
    Kind kind;
    std::uint32_t subject;
    std::size_t pool_begin, pool_end, next;
    std::size_t trail_mark, anchor_mark, pending_size, pending_head, pos;
  };

  bool consistent(Vertex v, Vertex w) const;
  void candidates(Vertex v, std::vector<Vertex>& out) const;
  bool has_candidate(Vertex v) const;
  bool place(Vertex v, Vertex w);
  bool forward_check(Vertex v) const;
  void cycle_options(std::uint32_t z);
  bool apply_next(Frame& f);
  void restore(const Frame& f);
  void push_frame(Kind kind, std::uint32_t subject, std::size_t pool_begin);
  bool tick();

  const Host& h_;
  SharedBudget& budget_;
  std::vector<Vertex> assign_;
  std::vector<Vertex> trail_;
  std::vector<bool> anchored_;
  std::vector<std::uint32_t> anchor_trail_;
  std::vector<std::uint32_t> pending_;
  std::size_t pending_head_ = 0;
  std::size_t pos_ = 0;
  std::vector<Frame> frames_;
  std::vector<Vertex> pool_;
  mutable std::vector<Vertex> scratch_;
  std::vector<VertexMap> results_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_nodes_ = 0;
};

bool Search::tick() {
  ++nodes_;
  if (++pending_nodes_ >= 4096) {
    const std::uint64_t total =
        budget_.used.fetch_add(pending_nodes_) + pending_nodes_;
    pending_nodes_ = 0;
    if (total > budget_.limit) budget_.exhausted = true;
  }
  return !budget_.exhausted.load(std::memory_order_relaxed);
}

bool Search::consistent(Vertex v, Vertex w) const {
  if (!h_.signature_fits(v, w)) return false;
  for (const Neighbor& nb : h_.nbrs[v]) {
    const Vertex img = assign_[nb.vertex];
    if (img == kNone) continue;
    if (nb.outgoing ? !h_.d.has_arc(nb.color, w, img)
                    : !h_.d.has_arc(nb.color, img, w)) {
      return false;
    }
  }
  return true;
}

// Images allowed by the placed neighbors; every host vertex if none placed.
void Search::candidates(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  std::span<const Vertex> best;
  bool have = false;
  for (const Neighbor& nb : h_.nbrs[v]) {
    const Vertex img = assign_[nb.vertex];
    if (img == kNone) continue;
    auto s = nb.outgoing ? h_.d.in(nb.color, img) : h_.d.out(nb.color, img);
    if (!have || s.size() < best.size()) {
      best = s;
      have = true;
    }
  }
  if (have) {
    for (Vertex w : best) {
      if (consistent(v, w)) out.push_back(w);
    }
  } else {
    for (Vertex w = 0; w < h_.n; ++w) {
      if (consistent(v, w)) out.push_back(w);
    }
  }
}

bool Search::has_candidate(Vertex v) const {
  std::span<const Vertex> best;
  bool have = false;
  for (const Neighbor& nb : h_.nbrs[v]) {
    const Vertex img = assign_[nb.vertex];
    if (img == kNone) continue;
    auto s = nb.outgoing ? h_.d.in(nb.color, img) : h_.d.out(nb.color, img);
    if (!have || s.size() < best.size()) {
      best = s;
      have = true;
    }
  }
  if (!have) return true;
  for (Vertex w : best) {
    if (consistent(v, w)) return true;
  }
  return false;
}

bool Search::forward_check(Vertex v) const {
  for (Vertex u : h_.undirected[v]) {
    if (assign_[u] == kNone && !has_candidate(u)) return false;
  }
  return true;
}

// Records v -> w, queues the unanchored cycles through v.
bool Search::place(Vertex v, Vertex w) {
  if (assign_[v] != kNone) return assign_[v] == w;
  if (!consistent(v, w)) return false;
  assign_[v] = w;
  trail_.push_back(v);
  if (!h_.on_cycle.empty()) {
    for (auto [z, p] : h_.on_cycle[v]) {
      if (!anchored_[z]) pending_.push_back(z);
    }
  }
  return true;
}

// Options for cycle z are (host cycle, offset, direction) triples, stored
// flat in the pool.
void Search::cycle_options(std::uint32_t z) {
  const auto& cyc = h_.cycles[z];
  const std::size_t g = cyc.size();
  std::size_t p = 0;
  while (assign_[cyc[p]] == kNone) ++p;
  const Vertex w = assign_[cyc[p]];
  for (auto [y, q] : h_.on_cycle[w]) {
    const auto& target = h_.cycles[y];
    for (int dir : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; i < g && ok; ++i) {
        const std::size_t step = (i + g - p) % g;
        const Vertex img =
            target[dir == 1 ? (q + step) % g : (q + g - step) % g];
        const Vertex cur = assign_[cyc[i]];
        ok = cur == kNone ? h_.signature_fits(cyc[i], img) : cur == img;
      }
      if (ok) {
        pool_.push_back(y);
        pool_.push_back(q);
        pool_.push_back(static_cast<Vertex>(dir == 1 ? 0 : 1));
      }
    }
  }
}

void Search::restore(const Frame& f) {
  while (trail_.size() > f.trail_mark) {
    assign_[trail_.back()] = kNone;
    trail_.pop_back();
  }
  while (anchor_trail_.size() > f.anchor_mark) {
    anchored_[anchor_trail_.back()] = false;
    anchor_trail_.pop_back();
  }
  pending_.resize(f.pending_size);
  pending_head_ = f.pending_head;
  pos_ = f.pos;
}

bool Search::apply_next(Frame& f) {
  const std::size_t stride = f.kind == Kind::kVertex ? 1 : 3;
  while (f.pool_begin + f.next * stride < f.pool_end) {
    const std::size_t at = f.pool_begin + f.next * stride;
    ++f.next;
    restore(f);
    if (f.kind == Kind::kVertex) {
      const Vertex v = f.subject;
      if (place(v, pool_[at]) && forward_check(v)) {
        pos_ = f.pos + 1;
        return true;
      }
      continue;
    }
    const std::uint32_t z = f.subject;
    const auto& cyc = h_.cycles[z];
    const std::size_t g = cyc.size();
    const auto& target = h_.cycles[pool_[at]];
    const std::size_t q = pool_[at + 1];
    const bool forward = pool_[at + 2] == 0;
    std::size_t p = 0;
    while (assign_[cyc[p]] == kNone) ++p;
    anchored_[z] = true;
    anchor_trail_.push_back(z);
    bool ok = true;
    for (std::size_t i = 0; i < g && ok; ++i) {
      const std::size_t step = (i + g - p) % g;
      const Vertex img = target[forward ? (q + step) % g : (q + g - step) % g];
      ok = place(cyc[i], img);
    }
    for (std::size_t i = 0; i < g && ok; ++i) ok = forward_check(cyc[i]);
    if (ok) {
      pending_head_ = f.pending_head + 1;
      return true;
    }
  }
  return false;
}

void Search::push_frame(Kind kind, std::uint32_t subject,
                        std::size_t pool_begin) {
  frames_.push_back({kind, subject, pool_begin, pool_.size(), 0, trail_.size(),
                     anchor_trail_.size(), pending_.size(), pending_head_,
                     pos_});
}

void Search::run(Vertex root_image) {
  frames_.clear();
  pool_.clear();
  pending_.clear();
  pending_head_ = 0;
  pos_ = 0;
  pool_.push_back(root_image);
  push_frame(Kind::kVertex, h_.order[0], 0);
  bool advancing = apply_next(frames_.back());
  for (;;) {
    if (advancing) {
      if (!tick()) break;
      if (pending_head_ < pending_.size()) {
        const std::uint32_t z = pending_[pending_head_];
        if (anchored_[z]) {
          ++pending_head_;
          continue;
        }
        const std::size_t begin = pool_.size();
        cycle_options(z);
        push_frame(Kind::kCycle, z, begin);
        advancing = apply_next(frames_.back());
        continue;
      }
      if (pos_ == h_.n) {
        results_.push_back(assign_);
        advancing = false;
        continue;
      }
      const Vertex v = h_.order[pos_];
      if (assign_[v] != kNone) {
        ++pos_;
        continue;
      }
      const std::size_t begin = pool_.size();
      candidates(v, scratch_);
      pool_.insert(pool_.end(), scratch_.begin(), scratch_.end());
      push_frame(Kind::kVertex, v, begin);
      advancing = apply_next(frames_.back());
      continue;
    }
    // Backtrack.
    while (!frames_.empty()) {
      Frame& top = frames_.back();
      if (apply_next(top)) {
        advancing = true;
        break;
      }
      restore(top);
      pool_.resize(top.pool_begin);
      frames_.pop_back();
    }
    if (frames_.empty()) break;
  }
  // Leave the state clean for the next root.
  while (!frames_.empty()) {
    restore(frames_.front());
    frames_.clear();
  }
  for (Vertex v : trail_) assign_[v] = kNone;
  trail_.clear();
  for (std::uint32_t z : anchor_trail_) anchored_[z] = false;
  anchor_trail_.clear();
}

std::size_t resolve_jobs(int jobs) {
  if (jobs > 0) return static_cast<std::size_t>(jobs);
  return static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
}

}  // namespace

TransformationMonoid enumerate_endomorphisms(const ArcColoredDigraph& host,
                                             const EndoOptions& options,
                                             EndoStats* stats) {
  const std::size_t n = host.num_vertices();
  EndoStats local;
  if (n == 0) {
    if (stats) *stats = local;
    return TransformationMonoid(0, {VertexMap{}});
  }
  Host h(host);
  std::uint64_t work = 0;
  if (options.use_cycle_constraint && !host.has_loops()) {
    const SimpleGraph und = underlying_simple_graph(host);
    const auto g = girth(und);
    if (g && *g % 2 == 1) {
      h.find_cycles(*g, work, options.node_budget, 4 * n + 1024);
    }
  }
  h.build_order();

  SharedBudget budget{options.node_budget};
  budget.used = work;
  std::vector<Vertex> roots;
  for (Vertex w = 0; w < n; ++w) {
    if (h.signature_fits(h.order[0], w)) roots.push_back(w);
  }
  local.root_candidates = roots.size();
  local.forced_cycles = h.cycles.size();
  local.odd_girth = h.g;

  std::vector<VertexMap> all;
  std::uint64_t nodes = 0;
  const std::size_t jobs = resolve_jobs(options.jobs);
  if (jobs == 1) {
    Search s(h, budget);
    for (Vertex w : roots) {
      if (budget.exhausted) break;
      s.run(w);
    }
    s.flush();
    nodes = s.nodes();
    all = std::move(s.results());
  } else {
    std::mutex mu;
    std::exception_ptr failure;
#pragma omp parallel num_threads(static_cast<int>(jobs))
    {
      Search s(h, budget);
      try {
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = 0; i < roots.size(); ++i) {
          if (budget.exhausted) continue;
          s.run(roots[i]);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        budget.exhausted = true;
      }
      s.flush();
      std::lock_guard lock(mu);
      nodes += s.nodes();
      auto& r = s.results();
      all.insert(all.end(), std::make_move_iterator(r.begin()),
                 std::make_move_iterator(r.end()));
    }
    if (failure) std::rethrow_exception(failure);
  }
  local.nodes = nodes + work;
  if (stats) *stats = local;
  if (budget.exhausted || budget.used > budget.limit) {
    throw Error(ErrorCode::kBudgetExceeded,
                "endomorphism search exceeded node budget of " +
                    std::to_string(options.node_budget));
  }
  return TransformationMonoid(n, std::move(all));
}

TransformationMonoid enumerate_endomorphisms(const SimpleGraph& host,
                                             const EndoOptions& options,
                                             EndoStats* stats) {
  return enumerate_endomorphisms(symmetric_digraph(host), options, stats);
}

Monoid endo_monoid_table(const TransformationMonoid& t,
                         const SizeLimits& limits) {
  if (t.size() > limits.max_monoid) {
    throw Error(ErrorCode::kSizeOverflow,
                "endomorphism monoid has " + std::to_string(t.size()) +
                    " elements");
  }
  const auto id = t.identity_index();
  if (!id) throw Error(ErrorCode::kNotClosed, "identity map missing");
  std::vector<std::vector<Element>> table(t.size(),
                                          std::vector<Element>(t.size()));
  for (std::size_t f = 0; f < t.size(); ++f) {
    for (std::size_t g = 0; g < t.size(); ++g) {
      const auto fg = t.find(compose(t[f], t[g]));
      if (!fg) {
        throw Error(ErrorCode::kNotClosed,
                    "composite of maps " + std::to_string(f) + " and " +
                        std::to_string(g) + " missing");
      }
      table[f][g] = static_cast<Element>(*fg);
    }
  }
  return Monoid::from_table(std::move(table), static_cast<Element>(*id),
                            limits);
}

std::vector<std::size_t> retractions(const TransformationMonoid& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (compose(t[i], t[i]) == t[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> automorphisms(const TransformationMonoid& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<bool> hit(t.degree(), false);
    bool bijective = true;
    for (Vertex v : t[i]) {
      if (hit[v]) {
        bijective = false;
        break;
      }
      hit[v] = true;
    }
    if (bijective) out.push_back(i);
  }
  return out;
}

}  // namespace endoforge
