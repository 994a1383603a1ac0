// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_ISOMORPHISM_HPP_
#define ISG_ISOMORPHISM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isg/graph.hpp"
#include "isg/subgraph.hpp"

namespace isg {

// Vertex and edge bijection. Entries are target indices; kUnmapped marks
// source indices outside the domain (partial isomorphisms inside one host
// use host-sized maps).
struct GraphIso {
  static constexpr std::int32_t kUnmapped = -1;

  std::vector<std::int32_t> vertex_map;
  std::vector<std::int32_t> edge_map;

  bool operator==(const GraphIso&) const = default;
  auto operator<=>(const GraphIso&) const = default;
};

// True iff `iso` is a full isomorphism g -> h (bijective, incidence
// preserving, loops to loops).
bool is_isomorphism(const Graph& g, const Graph& h, const GraphIso& iso);

// Deterministic witness: source vertices are assigned in index order and
// candidates tried in increasing target index; parallel edges are matched in
// increasing id order.
std::optional<GraphIso> find_isomorphism(const Graph& g, const Graph& h);

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

using VertexPairs = std::vector<std::pair<VertexIndex, VertexIndex>>;

// Enumerates every isomorphism from subgraph `a` onto subgraph `b` of the same
// host, honouring the forced vertex pairs. Maps are host-indexed. Distinct
// pairings of parallel edges are distinct isomorphisms. The callback returns
// false to stop early.
void for_each_subgraph_isomorphism(
    const SubgraphRef& a, const SubgraphRef& b, const VertexPairs& forced,
    const std::function<bool(const GraphIso&)>& callback);

std::vector<GraphIso> subgraph_isomorphisms(const SubgraphRef& a,
                                            const SubgraphRef& b,
                                            const VertexPairs& forced = {});

enum class EmbeddingMode {
  Subgraph,  // injective, multiplicities may grow
  Induced,   // injective, multiplicities preserved exactly
};

// Whether `small` is isomorphic to a subgraph (resp. induced subgraph) of
// `big`. The two may live in different hosts.
bool embeds(const SubgraphRef& small, const SubgraphRef& big, EmbeddingMode mode,
            const VertexPairs& forced = {});

inline constexpr std::size_t kDefaultCanonicalVertexCap = 12;

// Equal strings iff the graphs are isomorphic. Vertices are ordered by
// (degree, id); the search permutes only within equal-degree blocks and keeps
// the lexicographically least edge list. Throws ResourceLimitError above
// max_vertices.
std::string canonical_form(const Graph& g,
                           std::size_t max_vertices = kDefaultCanonicalVertexCap);
std::string canonical_form(const SubgraphRef& s,
                           std::size_t max_vertices = kDefaultCanonicalVertexCap);

// As canonical_form with the root pinned to the first position.
std::string rooted_canonical_form(
    const SubgraphRef& s, std::size_t max_vertices = kDefaultCanonicalVertexCap);

// Encoding of a path pair in path order; equal iff the pairs are isomorphic.
std::string path_pair_form(const SubgraphRef& s);

inline constexpr std::string_view kEmptyCanonicalForm = "0|";

}  // namespace isg

#endif  // ISG_ISOMORPHISM_HPP_
