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

// Finite monoids, posets and lattices given by explicit tables.
//
// Elements are 0-based indices. A Monoid stores its multiplication table
// row-major, table[x][y] = x*y. Lattices are kept together with their order,
// meet and join tables so that both the order view and the (L, meet) monoid
// view are available without recomputation.

#ifndef ENDOFORGE_ALGEBRA_HPP_
#define ENDOFORGE_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace endoforge {

using Element = std::uint32_t;

struct SizeLimits {
  std::size_t max_monoid = 4096;
  std::size_t max_ideals = 4096;
  std::size_t max_chains = 1 << 16;
};

class Lattice;
class Poset;

class Monoid {
 public:
  Monoid() = default;
  // Checks shape, identity law and associativity (full n^3 scan).
  static Monoid from_table(const std::vector<std::vector<Element>>& table,
                           Element identity,
                           const SizeLimits& limits = {});

  std::size_t size() const { return size_; }
  Element identity() const { return identity_; }
  Element operator()(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x) * size_ + y];
  }
  Element power(Element x, std::size_t exponent) const;

  std::vector<std::vector<Element>> rows() const;

  // The opposite monoid, x *op y = y * x.
  Monoid opposite() const;

  // Submonoid on `elements` (which must contain the identity and be closed),
  // re-indexed in the given order.
  Monoid restrict_to(std::span<const Element> elements) const;

  bool operator==(const Monoid&) const = default;

 private:
  Monoid(std::size_t size, Element identity, std::vector<Element> table)
      : size_(size), identity_(identity), table_(std::move(table)) {}

  std::size_t size_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
};

inline Monoid validate_monoid(const std::vector<std::vector<Element>>& table,
                              Element identity,
                              const SizeLimits& limits = {}) {
  return Monoid::from_table(table, identity, limits);
}

struct MonoidPredicates {
  bool commutative = false;
  bool idempotent = false;
  bool completely_regular = false;
};

MonoidPredicates monoid_predicates(const Monoid& m);

// |{x : x*y = z}| <= k for all y, z.
bool is_right_k_cancellative(const Monoid& m, std::size_t k);
// |{y : x*y = z}| <= k for all x, z.
bool is_left_k_cancellative(const Monoid& m, std::size_t k);
bool is_k_cancellative(const Monoid& m, std::size_t k);
// Smallest k for which the monoid is right (resp. left) k-cancellative.
std::size_t right_cancellativity(const Monoid& m);
std::size_t left_cancellativity(const Monoid& m);

// Submonoid generated by `gens`; always contains the identity. Returned as a
// membership mask of length m.size().
std::vector<bool> generated_submonoid(const Monoid& m,
                                      std::span<const Element> gens);
bool generates(const Monoid& m, std::span<const Element> gens);

// Smallest generating set; among those of minimum size the lexicographically
// least index set. The trivial monoid yields the empty set.
std::vector<Element> minimal_generating_set(const Monoid& m);

std::vector<Element> invertible_elements(const Monoid& m);

// Returns f with f[x] the image of x, or nullopt if the monoids are not
// isomorphic. Exact backtracking over images of a generating set.
std::optional<std::vector<Element>> monoid_isomorphic(const Monoid& a,
                                                      const Monoid& b);

Monoid cyclic_group(std::size_t n);
Monoid direct_product(const Monoid& a, const Monoid& b);

class Poset {
 public:
  Poset() = default;
  // `leq` must be reflexive, antisymmetric and transitive.
  static Poset from_relation(const std::vector<std::vector<bool>>& leq,
                             std::vector<std::string> labels = {});
  // Reflexive-transitive closure of the given strict relations.
  static Poset from_covers(
      std::size_t size,
      const std::vector<std::pair<Element, Element>>& below_above,
      std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  bool leq(Element x, Element y) const { return leq_[x * size_ + y]; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const {
    return leq(x, y) || leq(y, x);
  }
  // y covers x.
  bool covers(Element x, Element y) const;
  std::vector<Element> lower_covers(Element y) const;
  std::vector<Element> down_set(Element y) const;
  std::vector<std::vector<bool>> relation() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }

  Poset induced(std::span<const Element> elements) const;

  // Length of the longest chain from a minimal element up to x.
  std::vector<std::size_t> heights() const;

 private:
  friend Lattice ideal_lattice(const Poset&, const SizeLimits&);
  friend Poset boolean_lattice_poset(std::size_t, const SizeLimits&);

  Poset(std::size_t size, std::vector<char> leq, std::vector<std::string> labels)
      : size_(size), leq_(std::move(leq)), labels_(std::move(labels)) {}

  std::size_t size_ = 0;
  std::vector<char> leq_;
  std::vector<std::string> labels_;
};

class Lattice {
 public:
  Lattice() = default;
  static Lattice from_poset(Poset poset);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  // Join of a set; the empty join is the bottom.
  Element join_all(std::span<const Element> xs) const;
  Element meet_all(std::span<const Element> xs) const;

  // (L, meet) with identity top.
  Monoid meet_monoid() const;

  bool is_distributive() const;

 private:
  friend Lattice ideal_lattice(const Poset&, const SizeLimits&);

  Lattice(Poset poset, std::vector<Element> meet, std::vector<Element> join,
          Element bottom, Element top)
      : poset_(std::move(poset)),
        meet_(std::move(meet)),
        join_(std::move(join)),
        bottom_(bottom),
        top_(top) {}

  Poset poset_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Order x <= y iff x*y = x. The identity becomes the top.
Lattice lattice_from_meet_monoid(const Monoid& m);

bool is_lattice(const Poset& p);
bool is_meet_semilattice(const Poset& p);

struct JoinIrreducibles {
  Poset poset;                    // induced subposet J(L)
  std::vector<Element> elements;  // elements[i] = lattice element of J-vertex i
};

JoinIrreducibles join_irreducibles(const Lattice& l);

// Down-closed subsets of p, sorted by (size, membership vector).
std::vector<std::vector<bool>> down_sets(const Poset& p,
                                         const SizeLimits& limits = {});
// Lattice of down-sets ordered by inclusion. Labels list the members.
Lattice ideal_lattice(const Poset& p, const SizeLimits& limits = {});

Poset boolean_lattice_poset(std::size_t n, const SizeLimits& limits = {});
Poset chain_poset(std::size_t n);

// Every interval whose shortest maximal chain has length 2 has at least four
// elements.
bool is_thick(const Poset& p);

class LinearExtension {
 public:
  // Sorted by (height above the minimal elements, index).
  static LinearExtension canonical(const Poset& p);
  static LinearExtension from_order(const Poset& p, std::vector<Element> order);

  std::size_t size() const { return order_.size(); }
  Element at(std::size_t position) const { return order_[position]; }
  std::size_t position(Element x) const { return position_[x]; }
  bool before(Element x, Element y) const {
    return position_[x] < position_[y];
  }
  const std::vector<Element>& order() const { return order_; }

 private:
  explicit LinearExtension(std::vector<Element> order);

  std::vector<Element> order_;
  std::vector<std::size_t> position_;
};

// Transformation monoid on Omega = Z_p x {1,2,3} with the invertible part
// isomorphic to Z_p^2 and every element lying in a subgroup.
struct BPTransformation {
  enum class Family { kTranslation, kPermutationTriple, kConstant };
  Family family;
  std::vector<std::uint32_t> map;  // image of (a, i) stored at (i-1)*p + a
};

struct BabaiPultrMonoid {
  std::size_t p = 0;
  Monoid monoid;
  std::vector<BPTransformation> roster;  // roster[x] realizes element x
};

BabaiPultrMonoid babai_pultr_monoid(std::size_t p,
                                    const SizeLimits& limits = {});

bool is_prime(std::size_t p);

}  // namespace endoforge

#endif  // ENDOFORGE_ALGEBRA_HPP_
