// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/petersen.hpp"

#include "isg/error.hpp"
#include "isg/lattice.hpp"

namespace isg {

Graph petersen_graph() {
  Graph g;
  for (int i = 0; i < 5; ++i) g.add_vertex("o" + std::to_string(i));
  for (int i = 0; i < 5; ++i) g.add_vertex("i" + std::to_string(i));
  int id = 0;
  auto edge = [&](VertexIndex u, VertexIndex w) { g.add_edge(std::to_string(++id), u, w); };
  for (VertexIndex i = 0; i < 5; ++i) edge(i, (i + 1) % 5);
  for (VertexIndex i = 0; i < 5; ++i) edge(i, 5 + i);
  for (VertexIndex i = 0; i < 5; ++i) edge(5 + i, 5 + (i + 2) % 5);
  return g;
}

PetersenDemo petersen_demo() {
  PetersenDemo d;
  d.host = share(petersen_graph());
  const Graph& g = *d.host;
  d.root = 0;
  const VertexMask nbrs = g.neighbours(d.root, g.all_edges());
  std::vector<VertexIndex> adj;
  for_each_bit(nbrs, [&](std::size_t x) { adj.push_back(static_cast<VertexIndex>(x)); });
  const VertexIndex u = adj[0];
  const VertexIndex w = adj[1];

  // Paths u - x - y - w avoiding the root close 5-cycles through v-u and v-w.
  std::vector<std::vector<VertexIndex>> paths;
  for_each_bit(g.neighbours(u, g.all_edges()) & ~bit(d.root), [&](std::size_t x) {
    for_each_bit(g.neighbours(static_cast<VertexIndex>(x), g.all_edges()), [&](std::size_t y) {
      if (y == u || y == d.root || y == w) return;
      if (g.multiplicity(static_cast<VertexIndex>(y), w) == 0) return;
      paths.push_back({d.root, u, static_cast<VertexIndex>(x), static_cast<VertexIndex>(y), w});
    });
  });
  if (paths.size() != 2) {
    throw ConsistencyError("petersen_demo: expected two 5-cycles through the root's edges");
  }
  d.first = path_pair(d.host, paths[0]);
  d.second = path_pair(d.host, paths[1]);

  const SubgraphRef both = subgraph_intersection(d.first, d.second);
  const VertexMask comp = reachable(g, d.root, both.vertices, both.edges);
  d.intersection = induced_subgraph(d.host, comp);
  d.intersection.flavor = Flavor::RootedConnectedInduced;
  d.intersection.root = d.root;

  const auto& p = d.first.path;
  const auto& q = d.second.path;
  for (std::size_t k = 0; k < p.size() && k < q.size() && p[k] == q[k]; ++k) {
    d.common_prefix.push_back(p[k]);
  }

  const Graph t = extract(d.intersection);
  d.is_tree = t.vertex_count() > 0 && t.edge_count() + 1 == t.vertex_count() &&
              is_connected(t, t.all_vertices(), t.all_edges());
  d.is_rooted_path = pisg_lattice_criterion(t, *t.find_vertex(g.vertex_id(d.root)));
  return d;
}

std::string PetersenDemo::dot_first() const {
  return to_dot(*host, "first_cycle", first.vertices, first.edges);
}

std::string PetersenDemo::dot_second() const {
  return to_dot(*host, "second_cycle", second.vertices, second.edges);
}

std::string PetersenDemo::dot_intersection() const {
  return to_dot(*host, "intersection", intersection.vertices, intersection.edges);
}

}  // namespace isg
