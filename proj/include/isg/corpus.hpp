// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_CORPUS_HPP_
#define ISG_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "isg/graph.hpp"

namespace isg {

// Small graphs up to isomorphism, in order of (vertices, edges, canonical
// form). Vertex ids are letters, edge ids "1", "2", ....

// Multigraphs with loops and parallel edges, the empty graph included.
std::vector<Graph> multigraphs_up_to(std::size_t max_vertices, std::size_t max_edges);

// Simple graphs, the empty graph included.
std::vector<Graph> simple_graphs_up_to(std::size_t max_vertices);

// Connected simple graphs with at least one vertex.
std::vector<Graph> connected_simple_graphs_up_to(std::size_t max_vertices);

struct RootedGraph {
  Graph graph;
  VertexIndex root;
};

// Every connected simple graph paired with each of its vertices.
std::vector<RootedGraph> rooted_connected_simple_up_to(std::size_t max_vertices);

// File stem such as "n3_m2_04".
std::string corpus_name(const Graph& g, std::size_t ordinal);

// Writes the bundled corpus: multigraphs with <= 3 vertices and <= 3 edges
// plus the simple graphs on 4 vertices. Returns the files written.
std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir);

}  // namespace isg

#endif  // ISG_CORPUS_HPP_
