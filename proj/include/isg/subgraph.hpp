// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_SUBGRAPH_HPP_
#define ISG_SUBGRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isg/graph.hpp"

namespace isg {

enum class Flavor {
  Any,                     // arbitrary subgraph
  VertexInduced,           // G[X]
  RootedConnectedInduced,  // G[X], root in X, G[X] connected
  RootedPathPair,          // (G[V(P)], P) for a simple path P from the root
};

const char* to_string(Flavor f) noexcept;

// A subgraph of a fixed host. `root` is set for the rooted flavors; `path` is
// the distinguished vertex sequence of a RootedPathPair (path.front() == root).
struct SubgraphRef {
  Host host;
  VertexMask vertices = 0;
  EdgeMask edges = 0;
  Flavor flavor = Flavor::Any;
  std::optional<VertexIndex> root;
  std::vector<VertexIndex> path;

  std::size_t vertex_count() const noexcept { return popcount(vertices); }
  std::size_t edge_count() const noexcept { return popcount(edges); }
  bool empty() const noexcept { return vertices == 0; }

  // Same vertices, edges and distinguished path. Flavor tags and the host
  // pointer are not compared.
  bool same_subgraph(const SubgraphRef& other) const noexcept {
    return vertices == other.vertices && edges == other.edges &&
           path == other.path;
  }
};

bool same_host(const Host& a, const Host& b);

// True iff `inner` is contained in `outer` (vertices and edges).
inline bool is_contained(const SubgraphRef& inner, const SubgraphRef& outer) {
  return (inner.vertices & ~outer.vertices) == 0 &&
         (inner.edges & ~outer.edges) == 0;
}

// Checks the invariants of the flavor tag. Returns an explanation on failure.
std::optional<std::string> validate(const SubgraphRef& s);

// Human-readable "{a,b | 1}" (with "[a b]" path suffix for path pairs).
std::string describe(const SubgraphRef& s);

// The standalone graph formed by the subgraph (ids preserved, host order).
Graph extract(const SubgraphRef& s);

SubgraphRef whole_graph(const Host& g);
SubgraphRef empty_subgraph(const Host& g);

// G[X]. Throws DomainError when x has bits outside V(g).
SubgraphRef induced_subgraph(const Host& g, VertexMask x);

// Vertex set reachable from `from` in the subgraph (vs, es).
VertexMask reachable(const Graph& g, VertexIndex from, VertexMask vs,
                     EdgeMask es);
bool is_connected(const Graph& g, VertexMask vs, EdgeMask es);

// Every (vertex set, edge set) pair with edges supported on the vertices,
// ordered by vertex mask then edge mask. Throws ResourceLimitError when the
// count would exceed max_count.
std::vector<SubgraphRef> enumerate_subgraphs(const Host& g,
                                             std::size_t max_count = 1U << 20);
std::size_t count_subgraphs(const Graph& g);

// One G[X] per X subset of V(g), ordered by mask.
std::vector<SubgraphRef> enumerate_induced_subgraphs(
    const Host& g, std::size_t max_count = 1U << 20);

// Connected G[X] with root in X. Throws DomainError when root is not a vertex.
std::vector<SubgraphRef> enumerate_rooted_connected_induced(
    const Host& g, VertexIndex root, std::size_t max_count = 1U << 20);

// One pair per simple path starting at root (the trivial path included),
// in depth-first order with neighbours visited by increasing index.
std::vector<SubgraphRef> enumerate_rooted_path_pairs(
    const Host& g, VertexIndex root, std::size_t max_count = 1U << 20);

// Makes a path pair from an explicit vertex sequence. Throws DomainError when
// the sequence is not a simple path of the host.
SubgraphRef path_pair(const Host& g, std::vector<VertexIndex> path);

// (a.V & b.V, a.E & b.E). Tagged VertexInduced when both inputs are induced.
// Throws DomainError on a host mismatch.
SubgraphRef subgraph_intersection(const SubgraphRef& a, const SubgraphRef& b);

}  // namespace isg

#endif  // ISG_SUBGRAPH_HPP_
