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

#include "endoforge/lattice_encoding.hpp"

#include <algorithm>

#include "endoforge/error.hpp"

namespace endoforge {

// ---------------------------------------------------------------------------
// ExtendedOrder

ExtendedOrder::ExtendedOrder(const Lattice& l, const LinearExtension& ext)
    : lattice_(&l), ext_(&ext), down_(l.size()) {
  for (std::size_t pos = 0; pos < ext.size(); ++pos) {
    const Element y = ext.at(pos);
    for (Element x = 0; x < l.size(); ++x)
      if (l.leq(y, x)) down_[x].push_back(y);
  }
}

bool ExtendedOrder::leq(Element x, Element y) const {
  if (x == y) return true;
  if (x == kZeroPrime) return y != bottom();
  if (y == kZeroPrime) return false;
  return lattice_->leq(x, y);
}

bool ExtendedOrder::before(Element x, Element y) const {
  if (x == y) return false;
  if (x == kZeroPrime) return true;
  if (y == kZeroPrime) return false;
  return ext_->before(x, y);
}

std::optional<Element> ExtendedOrder::successor(Element x) const {
  const std::size_t pos = ext_->position(x);
  if (pos + 1 >= ext_->size()) return std::nullopt;
  return ext_->at(pos + 1);
}

Chain ExtendedOrder::sorted(Chain q) const {
  std::sort(q.begin(), q.end(),
            [this](Element a, Element b) { return before(a, b); });
  return q;
}

bool ExtendedOrder::is_chain(const Chain& q) const {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] != kZeroPrime && q[i] >= lattice_->size()) return false;
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (q[i] == q[j] || !(leq(q[i], q[j]) || leq(q[j], q[i]))) return false;
  }
  return true;
}

bool ExtendedOrder::is_rooted_chain(const Chain& q) const {
  if (q.empty() || !is_chain(q)) return false;
  const bool rooted = std::any_of(q.begin(), q.end(), [this](Element e) {
    return e == bottom() || e == kZeroPrime;
  });
  return rooted && !(q.size() == 1 && q[0] == kZeroPrime);
}

std::string ExtendedOrder::chain_name(const Chain& q) const {
  std::string s = "{";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) s += ",";
    s += q[i] == kZeroPrime ? std::string("0'") : std::to_string(q[i]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Chains

std::vector<Chain> rooted_chains(const ExtendedOrder& o,
                                 const SizeLimits& limits) {
  const LinearExtension& ext = o.extension();
  const Element bottom = o.bottom();
  std::vector<Chain> out;
  auto emit = [&](Chain q) {
    if (out.size() >= limits.max_chains) {
      throw Error(ErrorCode::kSizeOverflow,
                  "more than " + std::to_string(limits.max_chains) + " chains");
    }
    out.push_back(std::move(q));
  };
  // Chains of L minus the bottom, grown upwards along <*.
  Chain upper;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    Chain with_bottom{bottom};
    with_bottom.insert(with_bottom.end(), upper.begin(), upper.end());
    emit(with_bottom);
    if (!upper.empty()) {
      with_bottom[0] = kZeroPrime;
      emit(std::move(with_bottom));
    }
    for (std::size_t pos = from; pos < ext.size(); ++pos) {
      const Element x = ext.at(pos);
      if (x == bottom) continue;
      if (!upper.empty() && !o.lattice().leq(upper.back(), x)) continue;
      upper.push_back(x);
      self(self, pos + 1);
      upper.pop_back();
    }
  };
  grow(grow, 0);
  auto key = [&](const Chain& q) {
    std::vector<std::size_t> k{q.size()};
    for (std::size_t i = 1; i < q.size(); ++i) k.push_back(ext.position(q[i]));
    k.push_back(q[0] == kZeroPrime ? 1 : 0);
    return k;
  };
  std::sort(out.begin(), out.end(),
            [&](const Chain& a, const Chain& b) { return key(a) < key(b); });
  return out;
}

Chain bracket(const ExtendedOrder& o, const Chain& q, Element x) {
  if (q.size() == 2) {
    const bool collapse = (q[0] == o.bottom() && o.before(x, q[1])) ||
                          (q[0] == kZeroPrime && !o.before(x, q[1]));
    if (collapse) return Chain{o.bottom()};
  }
  return q;
}

Chain tilde(const ExtendedOrder& o, const Chain& q) {
  const Element bottom = o.bottom();
  if (q.size() == 1 && q[0] == bottom) return q;
  if (q.size() < 2 || !(q[0] == bottom || q[0] == kZeroPrime)) {
    throw Error(ErrorCode::kBadChain, "tilde of " + o.chain_name(q));
  }
  if (q[0] == bottom) {
    const auto& d = o.down(q[1]);
    Chain r = q;
    if (d.size() >= 3) {
      r.push_back(d[1]);
      return o.sorted(std::move(r));
    }
    r[0] = kZeroPrime;
    return r;
  }
  if (q.size() == 2) return Chain{bottom};
  const auto& d = o.down(q[2]);
  const std::size_t i = static_cast<std::size_t>(
      std::find(d.begin(), d.end(), q[1]) - d.begin()) + 1;
  if (i > d.size()) throw Error(ErrorCode::kBadChain, "Q_2 not below Q_3");
  Chain r;
  if (d.size() >= i + 2) {
    r = {bottom, d[i]};
    r.insert(r.end(), q.begin() + 2, q.end());
  } else {
    r = {kZeroPrime};
    r.insert(r.end(), q.begin() + 2, q.end());
  }
  return o.sorted(std::move(r));
}

std::string color_name(const EncColor& c) {
  const std::string pair = std::to_string(c.x) + "," + std::to_string(c.y);
  switch (c.family) {
    case EncFamily::kS: return "s:" + std::to_string(c.x);
    case EncFamily::kR: return "r:" + std::to_string(c.x);
    case EncFamily::kC: return "c:" + pair;
    case EncFamily::kCPrime: return "c':" + pair;
    case EncFamily::kH: return "h:" + pair;
    case EncFamily::kI: return "i:" + pair;
    case EncFamily::kJ: return "j:" + pair;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// LatticeEncoding

LatticeEncoding::LatticeEncoding(Lattice lattice, const LinearExtension& ext,
                                 const SizeLimits& limits)
    : lattice_(std::move(lattice)),
      ext_(LinearExtension::from_order(lattice_.poset(), ext.order())),
      order_(lattice_, ext_) {
  const std::size_t n = lattice_.size();
  const Element bottom = lattice_.bottom();
  const Element top = lattice_.top();
  chains_ = rooted_chains(order_, limits);

  for (const Chain& q : chains_) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      const Element x = ext_.at(pos);
      EncVertex v{bracket(order_, q, x), x};
      if (index_.count(v)) continue;
      index_.emplace(v, static_cast<Vertex>(vertices_.size()));
      vertices_.push_back(std::move(v));
    }
  }

  const auto& L = ext_.order();  // elements in <* order
  std::vector<std::pair<Element, Element>> strict;  // bottom < x < y
  std::vector<std::pair<Element, Element>> parallel;  // x || y, x <* y
  for (Element x : L) {
    for (Element y : L) {
      if (x != bottom && lattice_.poset().less(x, y)) strict.emplace_back(x, y);
      if (ext_.before(x, y) && !lattice_.poset().comparable(x, y))
        parallel.emplace_back(x, y);
    }
  }

  std::vector<std::vector<Arc>> arcs;
  auto new_color = [&](EncFamily f, Element x, Element y) {
    colors_.push_back({f, x, y});
    arcs.emplace_back();
    return static_cast<Color>(colors_.size() - 1);
  };
  auto add = [&](Color c, const Chain& q1, Element l1, const Chain& q2,
                 Element l2) { arcs[c].push_back({at(q1, l1), at(q2, l2)}); };
  auto rooted_with = [&](auto&& pred) {
    std::vector<Chain> out;
    for (const Chain& q : chains_)
      if (pred(q)) out.push_back(q);
    return out;
  };
  const Chain zero{bottom};

  s_colors_.assign(n, 0);
  for (Element x : L) {
    const Color c = new_color(EncFamily::kS, x, 0);
    s_colors_[x] = c;
    if (x != top) {
      const Element y = *order_.successor(x);
      for (const Chain& q : chains_)
        add(c, bracket(order_, q, x), x, bracket(order_, q, y), y);
    } else {
      for (const Chain& q : chains_)
        add(c, bracket(order_, q, top), top,
            bracket(order_, tilde(order_, q), bottom), bottom);
    }
  }
  for (Element x : L) {
    if (x == bottom) continue;
    const Color c = new_color(EncFamily::kR, x, 0);
    auto qs = rooted_with([&](const Chain& q) {
      return (q.size() >= 2 && q[1] != x) || q == zero;
    });
    for (const Chain& q : qs)
      for (Element y : L) {
        const Chain b = bracket(order_, q, y);
        add(c, b, y, b, y);
      }
  }
  for (auto [x, y] : strict) {
    const Color c = new_color(EncFamily::kC, x, y);
    auto qs = rooted_with([&](const Chain& q) {
      return (q.size() >= 2 && q[0] == bottom && q[1] == x &&
              lattice_.leq(q.back(), y)) ||
             q == zero;
    });
    for (const Chain& q : qs) add(c, q, y, bracket(order_, q, bottom), bottom);
  }
  for (auto [x, y] : strict) {
    const Color c = new_color(EncFamily::kCPrime, x, y);
    auto qs = rooted_with([&](const Chain& q) {
      return (q.size() >= 2 && q[0] == kZeroPrime && q[1] == x &&
              lattice_.leq(q.back(), y)) ||
             q == zero;
    });
    for (const Chain& q : qs) {
      Chain origin = q;
      if (origin[0] == kZeroPrime) origin[0] = bottom;
      add(c, origin, y, q, bottom);
      add(c, origin, y, bracket(order_, q, top), top);
    }
  }
  for (auto [x, y] : strict) {
    const Color c = new_color(EncFamily::kH, x, y);
    add(c, order_.sorted({bottom, y}), y, order_.sorted({bottom, x, y}),
        bottom);
    add(c, zero, y, zero, bottom);
  }
  for (auto [x, y] : strict) {
    const Color c = new_color(EncFamily::kI, x, y);
    auto qs = rooted_with([&](const Chain& q) {
      return q.size() >= 3 && q[0] == bottom && q[q.size() - 2] == x &&
             q.back() == y;
    });
    for (const Chain& q : qs) {
      const Chain no_y(q.begin(), q.end() - 1);
      const Chain no_xy(q.begin(), q.end() - 2);
      add(c, q, y, no_y, y);
      add(c, no_y, y, no_y, y);
      add(c, no_xy, y, no_xy, y);
    }
  }
  for (auto [x, y] : parallel) {
    const Color c = new_color(EncFamily::kJ, x, y);
    const Element z = lattice_.join(x, y);
    add(c, order_.sorted({bottom, x, z}), z, order_.sorted({bottom, y, z}), z);
    add(c, order_.sorted({bottom, x}), z, zero, z);
    add(c, zero, z, order_.sorted({bottom, y}), z);
    add(c, zero, z, zero, z);
  }

  std::vector<std::string> vlabels, clabels;
  for (const EncVertex& v : vertices_)
    vlabels.push_back("(" + order_.chain_name(v.chain) + "," +
                      std::to_string(v.level) + ")");
  for (const EncColor& c : colors_) clabels.push_back(color_name(c));
  digraph_ = ArcColoredDigraph(std::move(vlabels), std::move(clabels),
                               std::move(arcs));
}

std::optional<Vertex> LatticeEncoding::find(const Chain& q,
                                            Element level) const {
  auto it = index_.find(EncVertex{q, level});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex LatticeEncoding::at(const Chain& q, Element level) const {
  auto v = find(q, level);
  if (!v) {
    throw Error(ErrorCode::kInvariantViolated,
                "no vertex (" + order_.chain_name(q) + "," +
                    std::to_string(level) + ")");
  }
  return *v;
}

Walk LatticeEncoding::base_walk(const Chain& q) const {
  if (!order_.is_rooted_chain(q)) {
    throw Error(ErrorCode::kBadChain, order_.chain_name(q));
  }
  Walk w;
  for (Element x : ext_.order()) {
    w.vertices.push_back(at(bracket(order_, q, x), x));
    w.colors.push_back(s_colors_[x]);
  }
  w.vertices.push_back(at(tilde(order_, q), lattice_.bottom()));
  return w;
}

Walk LatticeEncoding::composite_walk(const Chain& q) const {
  const Element bottom = lattice_.bottom();
  if (q.empty() || !order_.is_chain(q) ||
      std::find(q.begin(), q.end(), bottom) != q.end() ||
      std::find(q.begin(), q.end(), kZeroPrime) != q.end()) {
    throw Error(ErrorCode::kBadChain, order_.chain_name(q));
  }
  const Chain sq = order_.sorted(q);
  const auto& d = order_.down(sq[0]);
  auto extended = [&](Element e) {
    Chain r = sq;
    r.push_back(e);
    return order_.sorted(std::move(r));
  };
  Walk w = base_walk(extended(bottom));
  for (std::size_t i = 1; i + 1 < d.size(); ++i)
    w = concatenate(w, composite_walk(extended(d[i])));
  return concatenate(w, base_walk(extended(kZeroPrime)));
}

Walk LatticeEncoding::petal(Element x) const {
  if (x == lattice_.bottom()) return base_walk(Chain{x});
  return composite_walk(Chain{x});
}

std::vector<Vertex> LatticeEncoding::phi(Element w) const {
  std::vector<Vertex> out(vertices_.size());
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    const EncVertex& ev = vertices_[v];
    Chain inter;
    for (Element e : ev.chain)
      if (order_.leq(e, w)) inter.push_back(e);
    if (inter.empty() || (inter.size() == 1 && inter[0] == kZeroPrime)) {
      out[v] = at(Chain{lattice_.bottom()}, ev.level);
    } else {
      out[v] = at(bracket(order_, inter, ev.level), ev.level);
    }
  }
  return out;
}

Element LatticeEncoding::fixed_petal_ideal(std::span<const Vertex> map) const {
  std::vector<Element> fixed;
  for (Element x = 0; x < lattice_.size(); ++x) {
    const Walk p = petal(x);
    bool same = true;
    for (Vertex v : p.vertices)
      if (map[v] != v) {
        same = false;
        break;
      }
    if (same) fixed.push_back(x);
  }
  const Element ell = lattice_.join_all(fixed);
  const auto down = lattice_.poset().down_set(ell);
  if (down != fixed) {
    throw Error(ErrorCode::kNotPrincipal,
                "fixed petals do not form a principal down-set");
  }
  return ell;
}

}  // namespace endoforge
