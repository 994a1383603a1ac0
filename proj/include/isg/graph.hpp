// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_GRAPH_HPP_
#define ISG_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace isg {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// Subsets of a host's vertices / edges, bit i = index i. Hosts are capped at
// kMaxVertices vertices and kMaxEdges edges so these fit one word.
using VertexMask = std::uint64_t;
using EdgeMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxEdges = 64;

inline constexpr std::uint64_t bit(std::size_t i) noexcept {
  return std::uint64_t{1} << i;
}
inline constexpr bool has_bit(std::uint64_t mask, std::size_t i) noexcept {
  return (mask >> i) & 1U;
}
inline int popcount(std::uint64_t mask) noexcept { return std::popcount(mask); }

// Calls f(i) for every set bit of mask in increasing order.
template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    f(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

struct Edge {
  std::string id;
  VertexIndex u;
  VertexIndex w;

  bool is_loop() const noexcept { return u == w; }
  VertexIndex other(VertexIndex x) const noexcept { return x == u ? w : u; }
  bool operator==(const Edge&) const = default;
};

// Finite undirected multigraph with loops. Vertices and edges carry opaque
// string ids; all algorithms work on the dense indices.
class Graph {
 public:
  Graph() = default;

  // Throws FormatError on a duplicate id, ResourceLimitError past kMaxVertices.
  VertexIndex add_vertex(std::string id);
  // Throws FormatError on a duplicate edge id or an out-of-range endpoint.
  EdgeIndex add_edge(std::string id, VertexIndex u, VertexIndex w);

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertex_ids_.empty(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::string> vertex_ids() const noexcept { return vertex_ids_; }

  VertexMask all_vertices() const noexcept;
  EdgeMask all_edges() const noexcept;

  // Edges with both endpoints in vs.
  EdgeMask edges_within(VertexMask vs) const noexcept;
  // Edges incident to v (loops included).
  EdgeMask incident_edges(VertexIndex v) const { return incident_.at(v); }
  // Neighbours of v through edges in es (v itself when es holds a loop at v).
  VertexMask neighbours(VertexIndex v, EdgeMask es) const;

  // Degree with loops counted twice.
  std::size_t degree(VertexIndex v) const;
  std::size_t multiplicity(VertexIndex u, VertexIndex w) const;

  bool has_loops() const noexcept;
  bool has_parallel_edges() const noexcept;
  bool is_simple() const noexcept { return !has_loops() && !has_parallel_edges(); }

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<EdgeMask> incident_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

using Host = std::shared_ptr<const Graph>;

inline Host share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Text format, one directive per line:
//   v <id>            vertex
//   e <eid> <u> <w>   edge (loop when u == w)
//   # comment
// Edge endpoints that were not declared are created on first use, so an
// explicit `v` line is only needed for isolated vertices.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

// Inverse of parse_graph: every vertex gets a `v` line, then all edges.
std::string to_text(const Graph& g);

// Graphviz export. Vertices in `highlight_vertices` and edges in
// `highlight_edges` are drawn bold/red.
std::string to_dot(const Graph& g, std::string_view name = "G",
                   VertexMask highlight_vertices = 0,
                   EdgeMask highlight_edges = 0);

// Simple complement on the same vertex ids. Edge ids are "<u>~<w>".
// Throws DomainError when g has loops or parallel edges.
Graph complement(const Graph& g);

// Small named graphs, vertex ids "a", "b", ... and edge ids "1", "2", ...
namespace graphs {
Graph empty();
Graph complete(std::size_t n);
Graph edgeless(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph loop_vertex();
}  // namespace graphs

}  // namespace isg

#endif  // ISG_GRAPH_HPP_
