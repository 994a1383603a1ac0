// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_LATTICE_HPP_
#define ISG_LATTICE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "isg/semigroup.hpp"

namespace isg {

// A finite partial order stored as down-sets: below(i) holds every j <= i.
class FinitePoset {
 public:
  FinitePoset() = default;
  // Builds from a relation; throws StructureError unless it is reflexive,
  // antisymmetric and transitive.
  FinitePoset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
              std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return below_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool covers(std::size_t upper, std::size_t lower) const;

  const boost::dynamic_bitset<>& below(std::size_t i) const { return below_[i]; }
  const boost::dynamic_bitset<>& above(std::size_t i) const { return above_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const {
    return lower_covers_[i];
  }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const {
    return upper_covers_[i];
  }
  // (upper, lower) for every cover relation.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  const std::string& label(std::size_t i) const { return labels_[i]; }

  // Greatest lower bound / least upper bound, nullopt when absent.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

 private:
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<boost::dynamic_bitset<>> above_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::string> labels_;
};

enum class Truth { True, False, NotApplicable };

const char* to_string(Truth t) noexcept;

struct Verdict {
  Truth value = Truth::NotApplicable;
  // Poset indices of a counterexample when value is False.
  std::vector<std::size_t> witness;
  std::string detail;

  bool holds() const noexcept { return value == Truth::True; }
};

struct LatticeReport {
  Verdict meet_semilattice;
  Verdict lattice;
  Verdict bounded;
  Verdict graded;
  Verdict distributive;
  Verdict complemented;
  Verdict boolean;
  Verdict semimodular;
  Verdict atomic;
  Verdict bi_heyting;
  // rank[i] when graded and every element has a well-defined rank.
  std::vector<std::size_t> rank;

  std::vector<std::pair<const char*, const Verdict*>> verdicts() const;
};

// Brute-force decision of every verdict. Throws ResourceLimitError when the
// poset has more than max_elements elements.
LatticeReport analyze(const FinitePoset& p, std::size_t max_elements = 6'000);

// The idempotents of s under the natural order; element k of the poset is
// s.element(indices[k]).
struct IdempotentPoset {
  FinitePoset poset;
  std::vector<std::size_t> indices;
};

IdempotentPoset idempotent_poset(const InverseSemigroup& s);

// Checks that id_H -> H is an order isomorphism from the idempotent poset
// onto the flavor subgraphs ordered by inclusion (by path prefix for Pisg).
// The witness holds the poset pair on which the orders disagree, or the
// poset index whose subgraph is missing or repeated.
Verdict check_subgraph_order_isomorphism(const InverseSemigroup& s,
                                         const IdempotentPoset& ip);

// Induced subgraph on the component of the root in h1 & h2, and on the union
// of the vertex sets. Throws DomainError on a root or host mismatch.
SubgraphRef tisg_meet(const SubgraphRef& h1, const SubgraphRef& h2);
SubgraphRef tisg_join(const SubgraphRef& h1, const SubgraphRef& h2);

// True iff g is a simple path graph with v as an endpoint.
bool pisg_lattice_criterion(const Graph& g, VertexIndex v);

// Hasse diagram, bottom at the bottom.
std::string hasse_dot(const FinitePoset& p, std::string_view name = "hasse");

}  // namespace isg

#endif  // ISG_LATTICE_HPP_
