// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_RECONSTRUCTION_HPP_
#define ISG_RECONSTRUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isg/semigroup.hpp"

namespace isg {

// A bare multiplication table. `origin[i]` is the index in the source
// semigroup of abstract element i; recovery never reads it.
struct AbstractSemigroup {
  CompositionTable table;
  std::vector<std::size_t> origin;

  std::size_t size() const noexcept { return table.size(); }
};

// The table of s with its elements shuffled by a seeded permutation. Throws
// ResourceLimitError above max_elements.
AbstractSemigroup forget(const InverseSemigroup& s, std::uint64_t seed,
                         std::size_t max_elements = 4'000);

// Rebuilds the host of a Fisg image from its table alone: atoms of the
// idempotent order are vertices, join-irreducible non-atoms are edges, and an
// edge is a loop when a single atom lies below it. Vertex ids are v0, v1, ...
// and edge ids e0, e1, .... Throws StructureError when there is no bottom
// idempotent or an edge candidate has more than two atoms below it.
Graph recover_graph(const AbstractSemigroup& a);

struct SemigroupMap {
  // forward[i] is the image of element i, or npos when it has none.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> forward;
  bool bijective = false;
  bool homomorphism = false;
  // First pair (i, j) with forward[i j] != forward[i] forward[j].
  std::vector<std::size_t> witness;

  bool holds() const noexcept { return bijective && homomorphism; }
};

// Checks a candidate element map against both tables.
void check_semigroup_map(const InverseSemigroup& from, const InverseSemigroup& to,
                         SemigroupMap& m);

// f -> phi f phi^-1 from s (host g) to t (host h), where s and t have the
// same kind. Throws DomainError unless phi is an isomorphism g -> h that
// carries the root of s to the root of t.
SemigroupMap transport_isomorphism(const InverseSemigroup& s, const InverseSemigroup& t,
                                   const GraphIso& phi);

struct CharacterizationVerdict {
  bool graphs_isomorphic = false;
  bool recovered_isomorphic = false;
  bool round_trip_g = false;
  bool round_trip_h = false;

  bool holds() const noexcept {
    return graphs_isomorphic == recovered_isomorphic && round_trip_g && round_trip_h;
  }
};

CharacterizationVerdict verify_characterization(const Graph& g, const Graph& h,
                                                std::uint64_t seed = 0,
                                                const Caps& caps = {});

// Iisg(g) -> Iisg(complement(g)) keeping each vertex map. Throws DomainError
// when g is not simple.
SemigroupMap iisg_complement_functor(const Graph& g, const Caps& caps = {});

// Brute-force isomorphism between two tables of at most 16 elements.
std::optional<std::vector<std::size_t>> find_semigroup_isomorphism(
    const CompositionTable& a, const CompositionTable& b);

struct CounterexampleVerdict {
  std::size_t iisg_k1_size = 0;
  std::size_t iisg_loop_size = 0;
  std::optional<std::vector<std::size_t>> iisg_bijection;
  bool graphs_isomorphic = true;
  // Fisg control: recovered graphs differ.
  bool fisg_distinguishes = false;

  bool holds() const noexcept {
    return iisg_bijection.has_value() && !graphs_isomorphic && fisg_distinguishes;
  }
};

// Iisg(K1) against Iisg(vertex with a loop).
CounterexampleVerdict iisg_counterexample_check();

}  // namespace isg

#endif  // ISG_RECONSTRUCTION_HPP_
