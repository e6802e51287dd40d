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

// Encoding a finite lattice L as an arc-colored digraph D with End(D) = L.
//
// Vertices are pairs (chain, level) where the chain lives in L+ = L with an
// extra minimal element 0' placed below everything but the bottom. Seven
// color families (s, r, c, c', h, i, j) shape the walks so that the only
// endomorphisms are the retractions phi_w, one per w in L.

#ifndef ENDOFORGE_LATTICE_ENCODING_HPP_
#define ENDOFORGE_LATTICE_ENCODING_HPP_

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "endoforge/algebra.hpp"
#include "endoforge/graph.hpp"

namespace endoforge {

// The extra bottom 0' of L+.
inline constexpr Element kZeroPrime = std::numeric_limits<Element>::max();

// Chain of L+, sorted upwards; 0' (if present) comes first.
using Chain = std::vector<Element>;

// Order of L+ with the lattice's linear extension attached.
class ExtendedOrder {
 public:
  ExtendedOrder(const Lattice& l, const LinearExtension& ext);

  const Lattice& lattice() const { return *lattice_; }
  const LinearExtension& extension() const { return *ext_; }
  Element bottom() const { return lattice_->bottom(); }
  Element top() const { return lattice_->top(); }

  bool leq(Element x, Element y) const;  // in L+
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool before(Element x, Element y) const;  // strict <* (0' first)
  // down-set of x in L, ascending in <*
  const std::vector<Element>& down(Element x) const { return down_[x]; }
  // <*-successor; nullopt for the last element
  std::optional<Element> successor(Element x) const;

  Chain sorted(Chain q) const;
  bool is_chain(const Chain& q) const;
  // Member of Q'_{L+}: a chain meeting {bottom, 0'} other than {0'}.
  bool is_rooted_chain(const Chain& q) const;

  // Q_i (1-based, from below) and Q^i (1-based, from above).
  static Element low(const Chain& q, std::size_t i) { return q[i - 1]; }
  static Element high(const Chain& q, std::size_t i) {
    return q[q.size() - i];
  }

  std::string chain_name(const Chain& q) const;

 private:
  const Lattice* lattice_;
  const LinearExtension* ext_;
  std::vector<std::vector<Element>> down_;
};

// All of Q'_{L+}, ordered by the number of non-bottom elements, then by the
// <*-positions of those elements, then bottom before 0'.
std::vector<Chain> rooted_chains(const ExtendedOrder& o,
                                 const SizeLimits& limits = {});

// [Q]_x
Chain bracket(const ExtendedOrder& o, const Chain& q, Element x);
// Q~, the chain whose base walk continues the base walk of Q.
Chain tilde(const ExtendedOrder& o, const Chain& q);

enum class EncFamily { kS, kR, kC, kCPrime, kH, kI, kJ };

struct EncColor {
  EncFamily family;
  Element x = 0;
  Element y = 0;  // unused for s and r
};

struct EncVertex {
  Chain chain;
  Element level = 0;
  auto operator<=>(const EncVertex&) const = default;
};

class LatticeEncoding {
 public:
  LatticeEncoding(Lattice lattice, const LinearExtension& ext,
                  const SizeLimits& limits = {});
  // Non-copyable: order_ points into the members.
  LatticeEncoding(const LatticeEncoding&) = delete;
  LatticeEncoding& operator=(const LatticeEncoding&) = delete;

  const Lattice& lattice() const { return lattice_; }
  const LinearExtension& extension() const { return ext_; }
  const ExtendedOrder& order() const { return order_; }
  const ArcColoredDigraph& digraph() const { return digraph_; }
  const std::vector<Chain>& chains() const { return chains_; }
  const EncVertex& vertex(Vertex v) const { return vertices_[v]; }
  std::optional<Vertex> find(const Chain& q, Element level) const;
  Vertex at(const Chain& q, Element level) const;
  const EncColor& color(Color c) const { return colors_[c]; }
  Color s_color(Element x) const { return s_colors_[x]; }

  // W_Q for Q in Q'_{L+}: length n, colors s(L_1) ... s(L_n).
  Walk base_walk(const Chain& q) const;
  // W_Q for a nonempty chain avoiding bottom and 0', by recursive
  // concatenation of base walks. Throws BadChain otherwise.
  Walk composite_walk(const Chain& q) const;
  // The closed walk W_{{x}}; for the bottom this is the base walk W_{{0}}.
  Walk petal(Element x) const;

  // phi_w as a vertex map.
  std::vector<Vertex> phi(Element w) const;

  // Largest x whose petal is mapped onto itself pointwise by `map`; throws
  // NotPrincipal if the fixed petals do not form a principal down-set.
  Element fixed_petal_ideal(std::span<const Vertex> map) const;

 private:
  Lattice lattice_;
  LinearExtension ext_;
  ExtendedOrder order_;
  std::vector<Chain> chains_;
  std::vector<EncVertex> vertices_;
  std::map<EncVertex, Vertex> index_;
  std::vector<EncColor> colors_;
  std::vector<Color> s_colors_;
  ArcColoredDigraph digraph_;
};

std::string color_name(const EncColor& c);

}  // namespace endoforge

#endif  // ENDOFORGE_LATTICE_ENCODING_HPP_
