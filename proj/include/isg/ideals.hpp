// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_IDEALS_HPP_
#define ISG_IDEALS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "isg/lattice.hpp"
#include "isg/semigroup.hpp"

namespace isg {

// Whether `small` is isomorphic to a flavor subgraph of `big` in the order
// that governs ideals of `kind`: subgraph embedding (Fisg), induced embedding
// (Iisg), root-preserving induced embedding (Tisg), or isomorphism onto
// the pair cut out by a prefix of big's path (Pisg).
bool flavor_embeds(Kind kind, const SubgraphRef& small, const SubgraphRef& big);

// Isomorphism of flavor subgraphs: mutual embeddability for the kind.
bool flavor_isomorphic(Kind kind, const SubgraphRef& a, const SubgraphRef& b);

// Iso-classes of element domains for one semigroup, ordered by
// (vertex count, edge count, key) so that embedding never goes backwards.
class IdealSpace {
 public:
  // Throws ResourceLimitError above caps.max_classes classes.
  explicit IdealSpace(const InverseSemigroup& s, const Caps& caps = {});

  const InverseSemigroup& semigroup() const noexcept { return *s_; }
  std::size_t class_count() const noexcept { return reps_.size(); }
  std::size_t class_of(std::size_t element) const { return element_class_.at(element); }
  const SubgraphRef& representative(std::size_t c) const { return reps_.at(c); }
  const std::string& key(std::size_t c) const { return keys_.at(c); }
  // Class c embeds into class d.
  bool embeds(std::size_t c, std::size_t d) const { return below_.at(d).test(c); }
  // Elements whose domain lies in class c.
  const std::vector<std::size_t>& class_members(std::size_t c) const {
    return members_.at(c);
  }

 private:
  const InverseSemigroup* s_;
  std::vector<SubgraphRef> reps_;
  std::vector<std::string> keys_;
  std::vector<std::size_t> element_class_;
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<std::vector<std::size_t>> members_;
};

// Canonical key of a flavor subgraph: canonical_form, rooted_canonical_form
// or path_pair_form according to the kind.
std::string class_key(Kind kind, const SubgraphRef& s);

struct Ideal {
  const InverseSemigroup* parent = nullptr;
  boost::dynamic_bitset<> members;
  // Maximal domain classes present among the members.
  std::vector<std::size_t> basis;

  std::size_t size() const { return members.count(); }
  bool contains(std::size_t element) const { return members.test(element); }
  bool operator==(const Ideal& other) const {
    return parent == other.parent && members == other.members;
  }
};

// Members plus the maximal classes among their domains.
Ideal make_ideal(const IdealSpace& space, boost::dynamic_bitset<> members);

// Elements whose domain embeds into the domain of a.
Ideal principal_ideal(const IdealSpace& space, std::size_t a);

// All elements whose class lies below some class of `classes`.
Ideal ideal_from_classes(const IdealSpace& space, const std::vector<std::size_t>& classes);

struct IdealCheck {
  bool ok = true;
  // Member x, semigroup element y and the side: 'l' for y*x, 'r' for x*y.
  std::size_t x = 0;
  std::size_t y = 0;
  char side = 0;
};

IdealCheck is_ideal(const InverseSemigroup& s, const boost::dynamic_bitset<>& members);

// { x a y : x, y in s }, by direct composition.
boost::dynamic_bitset<> sandwich_ideal(const InverseSemigroup& s, std::size_t a);

// Basis by bucketing member domains on class_key and keeping the classes not
// embeddable into another. One representative subgraph per class.
std::vector<SubgraphRef> extract_basis(const IdealSpace& space, const Ideal& ideal);

// Basis by the greedy argument: start from all member domains and drop any
// domain that embeds into another remaining one. Uses no canonical forms.
std::vector<SubgraphRef> greedy_basis(const InverseSemigroup& s,
                                      const boost::dynamic_bitset<>& members);

// Multiset equality up to flavor isomorphism.
bool bases_isomorphic(Kind kind, const std::vector<SubgraphRef>& a,
                      const std::vector<SubgraphRef>& b);

// One subgraph per flavor-isomorphism class, first occurrence kept.
std::vector<SubgraphRef> distinct_classes(Kind kind, const std::vector<SubgraphRef>& subs);

// Throw DomainError when the parents differ.
Ideal union_ideal(const IdealSpace& space, const Ideal& i, const Ideal& j);
Ideal intersect_ideal(const IdealSpace& space, const Ideal& i, const Ideal& j);

// One ideal per antichain of the class poset; Ideal::basis holds the
// antichain. Throws ResourceLimitError past max_ideals.
std::vector<Ideal> enumerate_ideals(const IdealSpace& space, bool include_empty = true,
                                    std::size_t max_ideals = 100'000);

struct IdealLattice {
  std::vector<Ideal> ideals;
  FinitePoset poset;  // inclusion
  LatticeReport report;
};

IdealLattice ideal_lattice(const IdealSpace& space, bool include_empty = true,
                           const Caps& caps = {});

struct ReesQuotient {
  // Class 0 is the collapsed ideal; classes 1.. are the non-members in order.
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> representative;
  CompositionTable table;
  bool zero_absorbing = false;
  VerifyReport axioms;

  std::size_t size() const noexcept { return table.size(); }
};

// Throws DomainError for an empty ideal and ConsistencyError when the
// induced product is not well defined.
ReesQuotient rees_quotient(const InverseSemigroup& s, const Ideal& ideal,
                           const Caps& caps = {});

// S - Aut(host) for Fisg or Iisg. Throws UnsupportedError for rooted kinds.
Ideal aut_complement_ideal(const IdealSpace& space);

// Host minus one edge (Fisg) or the induced subgraph on all but one vertex
// (Iisg), one per edge or vertex.
std::vector<SubgraphRef> deleted_subgraphs(const InverseSemigroup& s);

}  // namespace isg

#endif  // ISG_IDEALS_HPP_
