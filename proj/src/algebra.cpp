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

#include "endoforge/algebra.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "endoforge/error.hpp"

namespace endoforge {
namespace {

std::string triple(std::size_t x, std::size_t y, std::size_t z) {
  std::ostringstream out;
  out << "(" << x << "," << y << "," << z << ")";
  return out.str();
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Greatest lower bound / least upper bound tables over an order relation.
// Returns the first pair lacking a bound through `bad`.
bool bound_tables(const Poset& p, std::vector<Element>& meet,
                  std::vector<Element>& join,
                  std::pair<Element, Element>& bad, bool& bad_is_join) {
  const std::size_t n = p.size();
  meet.assign(n * n, 0);
  join.assign(n * n, 0);
  std::vector<Element> bounds;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      for (int pass = 0; pass < 2; ++pass) {
        const bool lower = pass == 0;
        bounds.clear();
        for (Element z = 0; z < n; ++z) {
          if (lower ? (p.leq(z, x) && p.leq(z, y))
                    : (p.leq(x, z) && p.leq(y, z))) {
            bounds.push_back(z);
          }
        }
        std::optional<Element> best;
        for (Element z : bounds) {
          bool extremal = true;
          for (Element w : bounds) {
            if (lower ? !p.leq(w, z) : !p.leq(z, w)) {
              extremal = false;
              break;
            }
          }
          if (extremal) {
            best = z;
            break;
          }
        }
        if (!best) {
          bad = {x, y};
          bad_is_join = !lower;
          return false;
        }
        auto& table = lower ? meet : join;
        table[x * n + y] = table[y * n + x] = *best;
      }
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monoid

Monoid Monoid::from_table(const std::vector<std::vector<Element>>& table,
                          Element identity, const SizeLimits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::kMalformedTable, "empty table");
  if (n > limits.max_monoid) {
    throw Error(ErrorCode::kSizeOverflow,
                "monoid of size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits.max_monoid));
  }
  if (identity >= n) {
    throw Error(ErrorCode::kMalformedTable, "identity index out of range");
  }
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw Error(ErrorCode::kMalformedTable,
                  "row " + std::to_string(x) + " has wrong length");
    }
    for (Element v : table[x]) {
      if (v >= n) {
        throw Error(ErrorCode::kMalformedTable,
                    "entry out of range in row " + std::to_string(x));
      }
      flat.push_back(v);
    }
  }
  Monoid m(n, identity, std::move(flat));
  for (Element x = 0; x < n; ++x) {
    if (m(identity, x) != x || m(x, identity) != x) {
      throw Error(ErrorCode::kBadIdentity, std::to_string(x));
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = m(x, y);
      for (Element z = 0; z < n; ++z) {
        if (m(xy, z) != m(x, m(y, z))) {
          throw Error(ErrorCode::kNotAssociative,
                      "(xy)z != x(yz) at (x,y,z) = " + triple(x, y, z));
        }
      }
    }
  }
  return m;
}

Element Monoid::power(Element x, std::size_t exponent) const {
  Element result = identity_;
  for (std::size_t i = 0; i < exponent; ++i) result = (*this)(result, x);
  return result;
}

std::vector<std::vector<Element>> Monoid::rows() const {
  std::vector<std::vector<Element>> out(size_);
  for (std::size_t x = 0; x < size_; ++x) {
    out[x].assign(table_.begin() + x * size_, table_.begin() + (x + 1) * size_);
  }
  return out;
}

Monoid Monoid::opposite() const {
  std::vector<Element> flat(size_ * size_);
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y)
      flat[x * size_ + y] = table_[y * size_ + x];
  return Monoid(size_, identity_, std::move(flat));
}

Monoid Monoid::restrict_to(std::span<const Element> elements) const {
  constexpr Element kNone = std::numeric_limits<Element>::max();
  std::vector<Element> index(size_, kNone);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= size_ || index[elements[i]] != kNone) {
      throw Error(ErrorCode::kMalformedInput, "bad submonoid element list");
    }
    index[elements[i]] = static_cast<Element>(i);
  }
  if (index[identity_] == kNone) {
    throw Error(ErrorCode::kNotClosed, "submonoid lacks the identity");
  }
  const std::size_t k = elements.size();
  std::vector<Element> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element v = index[(*this)(elements[i], elements[j])];
      if (v == kNone) throw Error(ErrorCode::kNotClosed, "product escapes");
      flat[i * k + j] = v;
    }
  }
  return Monoid(k, index[identity_], std::move(flat));
}

MonoidPredicates monoid_predicates(const Monoid& m) {
  const std::size_t n = m.size();
  MonoidPredicates out{true, true, true};
  for (Element x = 0; x < n && out.commutative; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (m(x, y) != m(y, x)) {
        out.commutative = false;
        break;
      }
  for (Element x = 0; x < n; ++x)
    if (m(x, x) != x) {
      out.idempotent = false;
      break;
    }
  for (Element x = 0; x < n && out.completely_regular; ++x) {
    Element power = x;
    bool found = false;
    for (std::size_t e = 1; e <= n; ++e) {
      power = m(power, x);  // x^(e+1)
      if (power == x) {
        found = true;
        break;
      }
    }
    out.completely_regular = found;
  }
  return out;
}

std::size_t right_cancellativity(const Monoid& m) {
  const std::size_t n = m.size();
  std::size_t worst = 0;
  std::vector<std::size_t> count(n);
  for (Element y = 0; y < n; ++y) {
    std::fill(count.begin(), count.end(), 0);
    for (Element x = 0; x < n; ++x) worst = std::max(worst, ++count[m(x, y)]);
  }
  return worst;
}

std::size_t left_cancellativity(const Monoid& m) {
  const std::size_t n = m.size();
  std::size_t worst = 0;
  std::vector<std::size_t> count(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(count.begin(), count.end(), 0);
    for (Element y = 0; y < n; ++y) worst = std::max(worst, ++count[m(x, y)]);
  }
  return worst;
}

bool is_right_k_cancellative(const Monoid& m, std::size_t k) {
  return right_cancellativity(m) <= k;
}
bool is_left_k_cancellative(const Monoid& m, std::size_t k) {
  return left_cancellativity(m) <= k;
}
bool is_k_cancellative(const Monoid& m, std::size_t k) {
  return is_left_k_cancellative(m, k) || is_right_k_cancellative(m, k);
}

std::vector<bool> generated_submonoid(const Monoid& m,
                                      std::span<const Element> gens) {
  std::vector<bool> in(m.size(), false);
  std::vector<Element> queue{m.identity()};
  in[m.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element g : gens) {
      const Element y = m(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

bool generates(const Monoid& m, std::span<const Element> gens) {
  const auto in = generated_submonoid(m, gens);
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

std::vector<Element> minimal_generating_set(const Monoid& m) {
  const std::size_t n = m.size();
  const Element e = m.identity();
  // Elements that are not a product of two non-identity elements belong to
  // every generating set.
  std::vector<bool> decomposable(n, false);
  for (Element x = 0; x < n; ++x) {
    if (x == e) continue;
    for (Element y = 0; y < n; ++y)
      if (y != e) decomposable[m(x, y)] = true;
  }
  std::vector<Element> forced, free;
  for (Element x = 0; x < n; ++x) {
    if (x == e) continue;
    (decomposable[x] ? free : forced).push_back(x);
  }
  std::vector<Element> trial;
  for (std::size_t extra = 0; extra <= free.size(); ++extra) {
    // Lexicographic enumeration of extra-subsets of `free`; with the forced
    // part fixed this is also the lexicographic order of the full sets.
    std::vector<std::size_t> pick(extra);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      trial = forced;
      for (std::size_t i : pick) trial.push_back(free[i]);
      if (generates(m, trial)) {
        std::sort(trial.begin(), trial.end());
        return trial;
      }
      std::size_t i = extra;
      while (i > 0 && pick[i - 1] == free.size() - extra + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInvariantViolated, "monoid not generated by itself");
}

std::vector<Element> invertible_elements(const Monoid& m) {
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x) {
    for (Element y = 0; y < m.size(); ++y) {
      if (m(x, y) == m.identity() && m(y, x) == m.identity()) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

namespace {

using Invariant = std::array<std::size_t, 8>;

std::vector<Invariant> element_invariants(const Monoid& m) {
  const std::size_t n = m.size();
  std::vector<Invariant> inv(n);
  std::vector<std::size_t> seen(n);
  std::vector<std::size_t> square_roots(n, 0);
  for (Element y = 0; y < n; ++y) ++square_roots[m(y, y)];
  for (Element x = 0; x < n; ++x) {
    // index and period of the cyclic subsemigroup <x>
    std::fill(seen.begin(), seen.end(), 0);
    Element power = x;
    std::size_t step = 1;
    while (seen[power] == 0) {
      seen[power] = step++;
      power = m(power, x);
    }
    const std::size_t index = seen[power];
    const std::size_t period = step - seen[power];
    std::size_t fix_left = 0, fix_right = 0, inv_left = 0, inv_right = 0;
    for (Element y = 0; y < n; ++y) {
      fix_left += m(y, x) == x;
      fix_right += m(x, y) == x;
      inv_left += m(y, x) == m.identity();
      inv_right += m(x, y) == m.identity();
    }
    inv[x] = {static_cast<std::size_t>(m(x, x) == x), index, period, fix_left,
              fix_right, inv_left, inv_right, square_roots[x]};
  }
  return inv;
}

struct IsoSearch {
  const Monoid& a;
  const Monoid& b;
  std::vector<Invariant> inv_a, inv_b;
  std::vector<Element> gens;
  std::vector<Element> images;
  std::vector<Element> f, g;  // forward and inverse partial maps
  static constexpr Element kNone = std::numeric_limits<Element>::max();

  // Propagates f along right multiplication by the assigned generators.
  bool propagate() {
    const std::size_t n = a.size();
    std::fill(f.begin(), f.end(), kNone);
    std::fill(g.begin(), g.end(), kNone);
    auto assign = [&](Element x, Element y) {
      if (f[x] != kNone) return f[x] == y;
      if (g[y] != kNone || inv_a[x] != inv_b[y]) return false;
      f[x] = y;
      g[y] = x;
      return true;
    };
    if (!assign(a.identity(), b.identity())) return false;
    for (std::size_t i = 0; i < images.size(); ++i)
      if (!assign(gens[i], images[i])) return false;
    std::vector<Element> queue{a.identity()};
    std::vector<bool> queued(n, false);
    queued[a.identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (std::size_t i = 0; i < images.size(); ++i) {
        const Element y = a(x, gens[i]);
        if (!assign(y, b(f[x], images[i]))) return false;
        if (!queued[y]) {
          queued[y] = true;
          queue.push_back(y);
        }
      }
    }
    return true;
  }

  bool search() {
    if (!propagate()) return false;
    if (images.size() == gens.size()) {
      for (Element x = 0; x < a.size(); ++x)
        if (f[x] == kNone) return false;
      for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y)
          if (f[a(x, y)] != b(f[x], f[y])) return false;
      return true;
    }
    const Element gen = gens[images.size()];
    std::vector<Element> order;
    if (gen < b.size()) order.push_back(gen);
    for (Element y = 0; y < b.size(); ++y)
      if (y != gen) order.push_back(y);
    for (Element y : order) {
      if (inv_a[gen] != inv_b[y]) continue;
      if (std::find(images.begin(), images.end(), y) != images.end()) continue;
      images.push_back(y);
      if (search()) return true;
      images.pop_back();
    }
    // restore f for the caller's level
    propagate();
    return false;
  }
};

}  // namespace

std::optional<std::vector<Element>> monoid_isomorphic(const Monoid& a,
                                                      const Monoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, element_invariants(a), element_invariants(b), {}, {}, {},
              {}};
  auto sa = s.inv_a, sb = s.inv_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  // Greedy generating set: rare invariants first, then by index.
  std::vector<std::size_t> frequency(a.size(), 0);
  {
    std::map<Invariant, std::size_t> count;
    for (const auto& v : s.inv_a) ++count[v];
    for (Element x = 0; x < a.size(); ++x) frequency[x] = count[s.inv_a[x]];
  }
  std::vector<Element> candidates;
  for (Element x = 0; x < a.size(); ++x)
    if (x != a.identity()) candidates.push_back(x);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Element x, Element y) {
                     return frequency[x] < frequency[y];
                   });
  std::vector<bool> covered = generated_submonoid(a, s.gens);
  for (Element x : candidates) {
    if (covered[x]) continue;
    s.gens.push_back(x);
    covered = generated_submonoid(a, s.gens);
  }
  s.f.assign(a.size(), IsoSearch::kNone);
  s.g.assign(a.size(), IsoSearch::kNone);
  if (!s.search()) return std::nullopt;
  return s.f;
}

Monoid cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<Element>((x + y) % n);
  return Monoid::from_table(t, 0);
}

Monoid direct_product(const Monoid& a, const Monoid& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t n = na * nb;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<Element>(
          a(x / nb, y / nb) * nb + b(x % nb, y % nb));
  return Monoid::from_table(t, static_cast<Element>(a.identity() * nb + b.identity()));
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_relation(const std::vector<std::vector<bool>>& leq,
                           std::vector<std::string> labels) {
  const std::size_t n = leq.size();
  std::vector<char> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[x].size() != n) {
      throw Error(ErrorCode::kMalformedInput, "order matrix is not square");
    }
    for (std::size_t y = 0; y < n; ++y) flat[x * n + y] = leq[x][y];
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!flat[x * n + x]) {
      throw Error(ErrorCode::kNotPartialOrder,
                  "not reflexive at " + std::to_string(x));
    }
    for (std::size_t y = x + 1; y < n; ++y) {
      if (flat[x * n + y] && flat[y * n + x]) {
        throw Error(ErrorCode::kNotPartialOrder,
                    "not antisymmetric at (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (flat[x * n + y])
        for (std::size_t z = 0; z < n; ++z)
          if (flat[y * n + z] && !flat[x * n + z])
            throw Error(ErrorCode::kNotPartialOrder,
                        "not transitive at " + triple(x, y, z));
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) {
    throw Error(ErrorCode::kMalformedInput, "label count mismatch");
  }
  return Poset(n, std::move(flat), std::move(labels));
}

Poset Poset::from_covers(
    std::size_t size,
    const std::vector<std::pair<Element, Element>>& below_above,
    std::vector<std::string> labels) {
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t x = 0; x < size; ++x) leq[x][x] = true;
  for (auto [x, y] : below_above) {
    if (x >= size || y >= size) {
      throw Error(ErrorCode::kMalformedInput, "cover pair out of range");
    }
    leq[x][y] = true;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return from_relation(leq, std::move(labels));
}

bool Poset::covers(Element x, Element y) const {
  if (!less(x, y)) return false;
  for (Element z = 0; z < size_; ++z)
    if (less(x, z) && less(z, y)) return false;
  return true;
}

std::vector<Element> Poset::lower_covers(Element y) const {
  std::vector<Element> out;
  for (Element x = 0; x < size_; ++x)
    if (covers(x, y)) out.push_back(x);
  return out;
}

std::vector<Element> Poset::down_set(Element y) const {
  std::vector<Element> out;
  for (Element x = 0; x < size_; ++x)
    if (leq(x, y)) out.push_back(x);
  return out;
}

std::vector<std::vector<bool>> Poset::relation() const {
  std::vector<std::vector<bool>> out(size_, std::vector<bool>(size_));
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y) out[x][y] = leq_[x * size_ + y];
  return out;
}

Poset Poset::induced(std::span<const Element> elements) const {
  const std::size_t k = elements.size();
  std::vector<char> flat(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (elements[i] >= size_) {
      throw Error(ErrorCode::kMalformedInput, "induced element out of range");
    }
    labels[i] = labels_[elements[i]];
    for (std::size_t j = 0; j < k; ++j)
      flat[i * k + j] = leq(elements[i], elements[j]);
  }
  return Poset(k, std::move(flat), std::move(labels));
}

std::vector<std::size_t> Poset::heights() const {
  std::vector<Element> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(size_, 0);
  for (Element y = 0; y < size_; ++y)
    for (Element x = 0; x < size_; ++x) below[y] += less(x, y);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element x, Element y) { return below[x] < below[y]; });
  std::vector<std::size_t> h(size_, 0);
  for (Element y : order)
    for (Element x = 0; x < size_; ++x)
      if (less(x, y)) h[y] = std::max(h[y], h[x] + 1);
  return h;
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::from_poset(Poset poset) {
  if (poset.size() == 0) {
    throw Error(ErrorCode::kNotLattice, "empty poset has no top");
  }
  std::vector<Element> meet, join;
  std::pair<Element, Element> bad;
  bool bad_is_join = false;
  if (!bound_tables(poset, meet, join, bad, bad_is_join)) {
    throw Error(ErrorCode::kNotLattice,
                std::string(bad_is_join ? "no join" : "no meet") + " for (" +
                    std::to_string(bad.first) + "," +
                    std::to_string(bad.second) + ")");
  }
  const std::size_t n = poset.size();
  Element bottom = 0, top = 0;
  for (Element x = 1; x < n; ++x) {
    bottom = meet[bottom * n + x];
    top = join[top * n + x];
  }
  return Lattice(std::move(poset), std::move(meet), std::move(join), bottom,
                 top);
}

Element Lattice::join_all(std::span<const Element> xs) const {
  Element out = bottom_;
  for (Element x : xs) out = join(out, x);
  return out;
}

Element Lattice::meet_all(std::span<const Element> xs) const {
  Element out = top_;
  for (Element x : xs) out = meet(out, x);
  return out;
}

Monoid Lattice::meet_monoid() const {
  std::vector<std::vector<Element>> t(size(), std::vector<Element>(size()));
  for (Element x = 0; x < size(); ++x)
    for (Element y = 0; y < size(); ++y) t[x][y] = meet(x, y);
  return Monoid::from_table(t, top_);
}

bool Lattice::is_distributive() const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
  return true;
}

Lattice lattice_from_meet_monoid(const Monoid& m) {
  const auto pred = monoid_predicates(m);
  if (!pred.commutative || !pred.idempotent) {
    throw Error(ErrorCode::kNotCommutativeIdempotent,
                "meet monoid must be commutative and idempotent");
  }
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) leq[x][y] = m(x, y) == x;
  Poset poset = Poset::from_relation(leq);
  std::vector<Element> meet, join;
  std::pair<Element, Element> bad;
  bool bad_is_join = false;
  if (!bound_tables(poset, meet, join, bad, bad_is_join)) {
    throw Error(ErrorCode::kNoJoin, "(" + std::to_string(bad.first) + "," +
                                        std::to_string(bad.second) + ")");
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (meet[x * n + y] != m(x, y))
        throw Error(ErrorCode::kInvariantViolated, "meet table mismatch");
  Lattice l = Lattice::from_poset(std::move(poset));
  if (l.top() != m.identity()) {
    throw Error(ErrorCode::kInvariantViolated, "identity is not the top");
  }
  return l;
}

bool is_lattice(const Poset& p) {
  if (p.size() == 0) return false;
  std::vector<Element> meet, join;
  std::pair<Element, Element> bad;
  bool bad_is_join = false;
  return bound_tables(p, meet, join, bad, bad_is_join);
}

bool is_meet_semilattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      std::vector<Element> lower;
      for (Element z = 0; z < p.size(); ++z)
        if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
      const bool has_glb =
          std::any_of(lower.begin(), lower.end(), [&](Element z) {
            return std::all_of(lower.begin(), lower.end(),
                               [&](Element w) { return p.leq(w, z); });
          });
      if (!has_glb) return false;
    }
  }
  return true;
}

JoinIrreducibles join_irreducibles(const Lattice& l) {
  std::vector<Element> elements;
  for (Element x = 0; x < l.size(); ++x)
    if (l.poset().lower_covers(x).size() == 1) elements.push_back(x);
  Poset j = l.poset().induced(elements);
  return JoinIrreducibles{std::move(j), std::move(elements)};
}

std::vector<std::vector<bool>> down_sets(const Poset& p,
                                         const SizeLimits& limits) {
  const std::size_t n = p.size();
  const auto ext = LinearExtension::canonical(p);
  std::vector<std::vector<bool>> out;
  std::vector<bool> current(n, false);
  // Depth-first over the linear extension: an element may join only when its
  // whole strict down-set is present.
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (out.size() >= limits.max_ideals) {
        throw Error(ErrorCode::kSizeOverflow,
                    "ideal lattice exceeds cap " +
                        std::to_string(limits.max_ideals));
      }
      out.push_back(current);
      return;
    }
    const Element x = ext.at(pos);
    self(self, pos + 1);
    bool allowed = true;
    for (Element y = 0; y < n && allowed; ++y)
      if (p.less(y, x) && !current[y]) allowed = false;
    if (allowed) {
      current[x] = true;
      self(self, pos + 1);
      current[x] = false;
    }
  };
  recurse(recurse, 0);
  auto members = [](const std::vector<bool>& s) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) m.push_back(i);
    return m;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto ma = members(a), mb = members(b);
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return ma < mb;
  });
  return out;
}

Lattice ideal_lattice(const Poset& p, const SizeLimits& limits) {
  const auto ideals = down_sets(p, limits);
  const std::size_t n = ideals.size();
  std::map<std::vector<bool>, Element> index;
  for (std::size_t i = 0; i < n; ++i) index[ideals[i]] = static_cast<Element>(i);
  std::vector<char> leq(n * n);
  std::vector<Element> meet(n * n), join(n * n);
  std::vector<bool> tmp(p.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool subset = true;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (ideals[i][k] && !ideals[j][k]) subset = false;
        tmp[k] = ideals[i][k] && ideals[j][k];
      }
      leq[i * n + j] = subset;
      meet[i * n + j] = index.at(tmp);
      for (std::size_t k = 0; k < p.size(); ++k)
        tmp[k] = ideals[i][k] || ideals[j][k];
      join[i * n + j] = index.at(tmp);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!ideals[i][k]) continue;
      if (!first) s += ",";
      s += p.label(static_cast<Element>(k));
      first = false;
    }
    labels[i] = s + "}";
  }
  Poset order(n, std::move(leq), std::move(labels));
  return Lattice(std::move(order), std::move(meet), std::move(join), 0,
                 static_cast<Element>(n - 1));
}

Poset boolean_lattice_poset(std::size_t n, const SizeLimits& limits) {
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "B_n needs n >= 1");
  if (n >= 63 || (std::size_t{1} << n) > limits.max_ideals) {
    throw Error(ErrorCode::kSizeOverflow,
                "2^" + std::to_string(n) + " exceeds cap");
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<char> leq(size * size);
  std::vector<std::string> labels(size);
  for (std::size_t a = 0; a < size; ++a) {
    std::string s = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    labels[a] = s + "}";
    for (std::size_t b = 0; b < size; ++b) leq[a * size + b] = (a & ~b) == 0;
  }
  return Poset(size, std::move(leq), std::move(labels));
}

Poset chain_poset(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq[x][y] = x <= y;
  return Poset::from_relation(leq);
}

bool is_thick(const Poset& p) {
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    // BFS along covers from x gives the shortest maximal chain to every z.
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::vector<Element> queue{x};
    dist[x] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element u = queue[head];
      for (Element v = 0; v < n; ++v) {
        if (dist[v] == std::numeric_limits<std::size_t>::max() &&
            p.covers(u, v)) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (Element z = 0; z < n; ++z) {
      if (dist[z] != 2) continue;
      std::size_t interval = 0;
      for (Element y = 0; y < n; ++y) interval += p.leq(x, y) && p.leq(y, z);
      if (interval < 4) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// LinearExtension

LinearExtension::LinearExtension(std::vector<Element> order)
    : order_(std::move(order)), position_(order_.size()) {
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
}

LinearExtension LinearExtension::canonical(const Poset& p) {
  const auto h = p.heights();
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element x, Element y) { return h[x] < h[y]; });
  return LinearExtension(std::move(order));
}

LinearExtension LinearExtension::from_order(const Poset& p,
                                            std::vector<Element> order) {
  if (order.size() != p.size()) {
    throw Error(ErrorCode::kMalformedInput, "linear extension length mismatch");
  }
  std::vector<bool> seen(p.size(), false);
  for (Element x : order) {
    if (x >= p.size() || seen[x]) {
      throw Error(ErrorCode::kMalformedInput, "linear extension not a permutation");
    }
    seen[x] = true;
  }
  LinearExtension ext(std::move(order));
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.less(x, y) && !ext.before(x, y))
        throw Error(ErrorCode::kMalformedInput, "order violates the poset");
  return ext;
}

// ---------------------------------------------------------------------------
// Babai-Pultr monoid

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BabaiPultrMonoid babai_pultr_monoid(std::size_t p, const SizeLimits& limits) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p));
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= p; ++i) {
    fact *= i;
    if (fact > limits.max_monoid) break;
  }
  const std::size_t cube = fact > limits.max_monoid
                               ? limits.max_monoid + 1
                               : fact * fact * fact;
  const std::size_t expected = cube + p * p + 3 * p;
  if (expected > limits.max_monoid) {
    throw Error(ErrorCode::kSizeOverflow,
                "|M| for p=" + std::to_string(p) + " exceeds cap");
  }
  const std::size_t omega = 3 * p;
  auto at = [p](std::size_t a, std::size_t i) {  // (a, i), i in {1,2,3}
    return static_cast<std::uint32_t>((i - 1) * p + a);
  };
  std::vector<BPTransformation> roster;
  for (std::size_t c = 0; c < p; ++c) {
    for (std::size_t d = 0; d < p; ++d) {
      BPTransformation t{BPTransformation::Family::kTranslation,
                         std::vector<std::uint32_t>(omega)};
      for (std::size_t a = 0; a < p; ++a) {
        t.map[at(a, 1)] = at((a + c) % p, 1);
        t.map[at(a, 2)] = at((a + d) % p, 2);
        t.map[at(a, 3)] = at((a + c + d) % p, 3);
      }
      roster.push_back(std::move(t));
    }
  }
  std::vector<std::vector<std::uint32_t>> perms;
  {
    std::vector<std::uint32_t> s(p);
    std::iota(s.begin(), s.end(), 0);
    do perms.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
  }
  for (const auto& s1 : perms) {
    for (const auto& s2 : perms) {
      for (const auto& s3 : perms) {
        BPTransformation t{BPTransformation::Family::kPermutationTriple,
                           std::vector<std::uint32_t>(omega)};
        for (std::size_t k = 0; k < p; ++k) {
          t.map[at(k, 1)] = at(s1[k], 1);
          t.map[at(k, 2)] = at(s2[k], 1);
          t.map[at(k, 3)] = at(s3[k], 1);
        }
        roster.push_back(std::move(t));
      }
    }
  }
  for (std::uint32_t x = 0; x < omega; ++x) {
    roster.push_back({BPTransformation::Family::kConstant,
                      std::vector<std::uint32_t>(omega, x)});
  }
  std::map<std::vector<std::uint32_t>, Element> index;
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (!index.emplace(roster[i].map, static_cast<Element>(i)).second) {
      throw Error(ErrorCode::kInvariantViolated, "duplicate transformation");
    }
  }
  const std::size_t n = roster.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::uint32_t> composed(omega);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t w = 0; w < omega; ++w)
        composed[w] = roster[f].map[roster[g].map[w]];
      auto it = index.find(composed);
      if (it == index.end()) {
        throw Error(ErrorCode::kNotClosed, "composition leaves the roster");
      }
      table[f][g] = it->second;
    }
  }
  BabaiPultrMonoid out;
  out.p = p;
  out.monoid = Monoid::from_table(table, 0, limits);
  out.roster = std::move(roster);
  return out;
}

}  // namespace endoforge
