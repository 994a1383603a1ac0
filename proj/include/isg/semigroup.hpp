// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_SEMIGROUP_HPP_
#define ISG_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "isg/partial_iso.hpp"

namespace isg {

struct Caps {
  std::size_t max_elements = 200'000;
  // The composition table is materialised only up to this many elements;
  // larger semigroups compose lazily.
  std::size_t max_table_elements = 1'500;
  std::size_t max_subgraphs = std::size_t{1} << 20;
  std::size_t max_classes = 64;
  std::size_t max_ideals = 100'000;
  // The quadratic ideal checks (sandwich ideals, Rees quotients) run only on
  // semigroups up to this size.
  std::size_t max_ideal_elements = 400;
  // Past this many triples associativity is checked on a seeded sample.
  std::uint64_t max_verify_triples = 4'000'000'000ULL;
  std::uint64_t sample_triples = 2'000'000;
  std::uint64_t seed = 0;
};

// Row-major n x n table; cell (i, j) is the index of element_i ∘ element_j,
// or kMissing when the product fell outside the element list.
class CompositionTable {
 public:
  static constexpr std::uint32_t kMissing =
      std::numeric_limits<std::uint32_t>::max();

  CompositionTable() = default;
  explicit CompositionTable(std::size_t n)
      : n_(n), cells_(n * n, kMissing) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint32_t value) {
    cells_[i * n_ + j] = value;
  }
  std::span<const std::uint32_t> cells() const noexcept { return cells_; }

  bool operator==(const CompositionTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

// A finite inverse semigroup of partial isomorphisms, immutable after
// construction.
class InverseSemigroup {
 public:
  // Keeps `elements` in the given order. Duplicate elements throw
  // FormatError.
  InverseSemigroup(Kind kind, Host host, std::optional<VertexIndex> root,
                   std::vector<PartialIso> elements, const Caps& caps = {});

  Kind kind() const noexcept { return kind_; }
  const Host& host() const noexcept { return host_; }
  std::optional<VertexIndex> root() const noexcept { return root_; }

  std::size_t size() const noexcept { return elements_.size(); }
  const PartialIso& element(std::size_t i) const { return elements_.at(i); }
  std::span<const PartialIso> elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(const PartialIso& f) const;

  PartialIso compose(const PartialIso& psi, const PartialIso& phi) const {
    return isg::compose(kind_, psi, phi);
  }

  // Index of element_psi ∘ element_phi, nullopt when it is not an element.
  std::optional<std::size_t> try_multiply(std::size_t psi,
                                          std::size_t phi) const;
  // As try_multiply; throws ConsistencyError when closure fails.
  std::size_t multiply(std::size_t psi, std::size_t phi) const;

  bool has_table() const noexcept { return table_.size() == size() && size() > 0; }
  const CompositionTable& table() const noexcept { return table_; }

  // Index of invert(element_i), nullopt when absent.
  std::optional<std::size_t> inverse_index(std::size_t i) const {
    return inverses_.at(i);
  }

  std::span<const std::size_t> idempotent_indices() const noexcept {
    return idempotents_;
  }
  bool is_idempotent(std::size_t i) const { return idempotent_flag_.at(i); }

 private:
  Kind kind_;
  Host host_;
  std::optional<VertexIndex> root_;
  std::vector<PartialIso> elements_;
  std::unordered_map<PartialIso, std::size_t, PartialIsoHash> index_;
  std::vector<std::optional<std::size_t>> inverses_;
  std::vector<std::size_t> idempotents_;
  std::vector<bool> idempotent_flag_;
  CompositionTable table_;
};

// Subgraphs of the flavor belonging to `kind`, i.e. the domains of elements.
std::vector<SubgraphRef> flavor_subgraphs(Kind kind, const Host& g,
                                          std::optional<VertexIndex> root,
                                          std::size_t max_count);

// Every isomorphism between every ordered pair of flavor subgraphs, sorted by
// (domain, codomain, vertex map, edge map). Throws UsageError when a root is
// missing for a rooted kind or given for an unrooted one, DomainError when
// the root is not a vertex, ResourceLimitError past caps.max_elements.
InverseSemigroup build(Kind kind, const Host& g,
                       std::optional<VertexIndex> root = std::nullopt,
                       const Caps& caps = {});

struct AxiomCheck {
  std::string name;
  bool passed = true;
  bool sampled = false;
  std::uint64_t checked = 0;
  // Element indices of the first counterexample (pair or triple).
  std::vector<std::size_t> witness;
  std::string detail;
};

struct VerifyReport {
  AxiomCheck closure{"closure", true, false, 0, {}, {}};
  AxiomCheck associativity{"associativity", true, false, 0, {}, {}};
  AxiomCheck regularity{"regularity", true, false, 0, {}, {}};
  AxiomCheck idempotents_commute{"idempotents-commute", true, false, 0, {}, {}};
  AxiomCheck unique_inverses{"unique-inverses", true, false, 0, {}, {}};

  bool all_passed() const noexcept;
  std::vector<const AxiomCheck*> checks() const;
};

// Product oracle used by the axiom checks; nullopt marks a closure failure.
using Multiplier =
    std::function<std::optional<std::size_t>(std::size_t, std::size_t)>;

// Axioms on an abstract multiplication. `inverses` may be empty, in which
// case regularity searches for any inverse.
VerifyReport verify_axioms(std::size_t n, const Multiplier& mul,
                           std::span<const std::optional<std::size_t>> inverses,
                           const Caps& caps = {});

VerifyReport verify_table(const CompositionTable& table, const Caps& caps = {});

// Closure under composition and inversion, then the remaining axioms.
VerifyReport verify_inverse_semigroup(const InverseSemigroup& s,
                                      const Caps& caps = {});

std::vector<std::size_t> idempotents(const InverseSemigroup& s);

// Elements with domain = codomain = the whole host. Throws UnsupportedError
// for the rooted kinds.
std::vector<std::size_t> automorphism_subgroup(const InverseSemigroup& s);

// Full table, built even when the semigroup did not cache one. Throws
// ResourceLimitError above `max_elements`.
CompositionTable composition_table(const InverseSemigroup& s,
                                   std::size_t max_elements = 4'000);

}  // namespace isg

#endif  // ISG_SEMIGROUP_HPP_
