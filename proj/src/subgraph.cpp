// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/subgraph.hpp"

#include <algorithm>
#include <sstream>

#include "isg/error.hpp"

namespace isg {

const char* to_string(Flavor f) noexcept {
  switch (f) {
    case Flavor::Any:
      return "any";
    case Flavor::VertexInduced:
      return "vertex-induced";
    case Flavor::RootedConnectedInduced:
      return "rooted-connected-induced";
    case Flavor::RootedPathPair:
      return "rooted-path-pair";
  }
  return "?";
}

bool same_host(const Host& a, const Host& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

bool is_simple_path(const Graph& g, const std::vector<VertexIndex>& path) {
  VertexMask seen = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.vertex_count() || has_bit(seen, path[i])) return false;
    seen |= bit(path[i]);
    if (i > 0 && g.multiplicity(path[i - 1], path[i]) == 0) {
      return false;
    }
  }
  return true;
}

VertexMask mask_of(const std::vector<VertexIndex>& vs) {
  VertexMask m = 0;
  for (VertexIndex v : vs) m |= bit(v);
  return m;
}

}  // namespace

std::optional<std::string> validate(const SubgraphRef& s) {
  if (!s.host) return "missing host";
  const Graph& g = *s.host;
  if ((s.vertices & ~g.all_vertices()) != 0) return "vertex outside host";
  if ((s.edges & ~g.all_edges()) != 0) return "edge outside host";
  if ((s.edges & ~g.edges_within(s.vertices)) != 0) {
    return "edge with an endpoint outside the vertex set";
  }
  if (s.flavor == Flavor::Any) return std::nullopt;
  if (s.edges != g.edges_within(s.vertices)) return "not vertex-induced";
  if (s.flavor == Flavor::VertexInduced) return std::nullopt;

  if (!s.root || !has_bit(s.vertices, *s.root)) return "root not in subgraph";
  if (s.flavor == Flavor::RootedConnectedInduced) {
    if (!is_connected(g, s.vertices, s.edges)) return "not connected";
    return std::nullopt;
  }
  if (s.path.empty() || s.path.front() != *s.root) {
    return "path does not start at the root";
  }
  if (!is_simple_path(g, s.path)) return "path is not a simple path";
  if (mask_of(s.path) != s.vertices) return "vertex set differs from path";
  return std::nullopt;
}

std::string describe(const SubgraphRef& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for_each_bit(s.vertices, [&](std::size_t v) {
    out << (first ? "" : ",") << s.host->vertex_id(static_cast<VertexIndex>(v));
    first = false;
  });
  out << " |";
  for_each_bit(s.edges, [&](std::size_t e) {
    out << ' ' << s.host->edge(static_cast<EdgeIndex>(e)).id;
  });
  out << '}';
  if (!s.path.empty()) {
    out << '[';
    for (std::size_t i = 0; i < s.path.size(); ++i) {
      out << (i ? " " : "") << s.host->vertex_id(s.path[i]);
    }
    out << ']';
  }
  return out.str();
}

Graph extract(const SubgraphRef& s) {
  Graph out;
  std::vector<VertexIndex> local(s.host->vertex_count(), 0);
  for_each_bit(s.vertices, [&](std::size_t v) {
    local[v] = out.add_vertex(s.host->vertex_id(static_cast<VertexIndex>(v)));
  });
  for_each_bit(s.edges, [&](std::size_t e) {
    const Edge& ed = s.host->edge(static_cast<EdgeIndex>(e));
    out.add_edge(ed.id, local[ed.u], local[ed.w]);
  });
  return out;
}

SubgraphRef whole_graph(const Host& g) {
  return SubgraphRef{g, g->all_vertices(), g->all_edges(),
                     Flavor::VertexInduced, std::nullopt, {}};
}

SubgraphRef empty_subgraph(const Host& g) {
  return SubgraphRef{g, 0, 0, Flavor::VertexInduced, std::nullopt, {}};
}

SubgraphRef induced_subgraph(const Host& g, VertexMask x) {
  if ((x & ~g->all_vertices()) != 0) {
    throw DomainError("induced_subgraph: vertex set not contained in host");
  }
  return SubgraphRef{g, x, g->edges_within(x), Flavor::VertexInduced,
                     std::nullopt, {}};
}

VertexMask reachable(const Graph& g, VertexIndex from, VertexMask vs,
                     EdgeMask es) {
  if (!has_bit(vs, from)) return 0;
  VertexMask seen = bit(from);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_bit(frontier, [&](std::size_t v) {
      next |= g.neighbours(static_cast<VertexIndex>(v), es);
    });
    next &= vs & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, VertexMask vs, EdgeMask es) {
  if (vs == 0) return true;
  const auto first = static_cast<VertexIndex>(std::countr_zero(vs));
  return reachable(g, first, vs, es) == vs;
}

std::size_t count_subgraphs(const Graph& g) {
  if (g.vertex_count() > 30) return static_cast<std::size_t>(-1);
  std::size_t total = 0;
  for (VertexMask vs = 0; vs <= g.all_vertices(); ++vs) {
    const int k = popcount(g.edges_within(vs));
    if (k >= 60) return static_cast<std::size_t>(-1);
    total += std::size_t{1} << k;
    if (vs == g.all_vertices()) break;
  }
  return total;
}

std::vector<SubgraphRef> enumerate_subgraphs(const Host& g,
                                             std::size_t max_count) {
  const std::size_t n = count_subgraphs(*g);
  if (n > max_count) {
    throw ResourceLimitError("enumerate_subgraphs: " +
                             (n == static_cast<std::size_t>(-1)
                                  ? std::string("astronomically many")
                                  : std::to_string(n)) +
                             " subgraphs exceed the cap of " +
                             std::to_string(max_count));
  }
  std::vector<SubgraphRef> out;
  out.reserve(n);
  const VertexMask all = g->all_vertices();
  for (VertexMask vs = 0;; ++vs) {
    const EdgeMask within = g->edges_within(vs);
    // Submasks of `within` in increasing order.
    EdgeMask sub = 0;
    while (true) {
      out.push_back(SubgraphRef{g, vs, sub, Flavor::Any, std::nullopt, {}});
      if (sub == within) break;
      sub = (sub - within) & within;
    }
    if (vs == all) break;
  }
  return out;
}

std::vector<SubgraphRef> enumerate_induced_subgraphs(const Host& g,
                                                     std::size_t max_count) {
  if (g->vertex_count() >= 63 ||
      (std::size_t{1} << g->vertex_count()) > max_count) {
    throw ResourceLimitError("enumerate_induced_subgraphs: 2^" +
                             std::to_string(g->vertex_count()) +
                             " subsets exceed the cap");
  }
  std::vector<SubgraphRef> out;
  const VertexMask all = g->all_vertices();
  for (VertexMask vs = 0;; ++vs) {
    out.push_back(induced_subgraph(g, vs));
    if (vs == all) break;
  }
  return out;
}

std::vector<SubgraphRef> enumerate_rooted_connected_induced(
    const Host& g, VertexIndex root, std::size_t max_count) {
  if (root >= g->vertex_count()) {
    throw DomainError("root is not a vertex of the graph");
  }
  // Only v's component can contribute; scan subsets of it.
  const VertexMask comp =
      reachable(*g, root, g->all_vertices(), g->all_edges());
  const VertexMask others = comp & ~bit(root);
  if (popcount(others) >= 40) {
    throw ResourceLimitError("enumerate_rooted_connected_induced: component "
                             "too large to scan");
  }
  std::vector<SubgraphRef> out;
  VertexMask sub = 0;
  while (true) {
    const VertexMask vs = sub | bit(root);
    const EdgeMask es = g->edges_within(vs);
    if (is_connected(*g, vs, es)) {
      if (out.size() >= max_count) {
        throw ResourceLimitError(
            "enumerate_rooted_connected_induced: count exceeds the cap of " +
            std::to_string(max_count));
      }
      out.push_back(SubgraphRef{g, vs, es, Flavor::RootedConnectedInduced,
                                root, {}});
    }
    if (sub == others) break;
    sub = (sub - others) & others;
  }
  return out;
}

namespace {

void extend_paths(const Host& g, std::vector<VertexIndex>& path,
                  VertexMask used, std::vector<SubgraphRef>& out,
                  std::size_t max_count) {
  if (out.size() >= max_count) {
    throw ResourceLimitError(
        "enumerate_rooted_path_pairs: count exceeds the cap of " +
        std::to_string(max_count));
  }
  const VertexMask vs = used;
  out.push_back(SubgraphRef{g, vs, g->edges_within(vs),
                            Flavor::RootedPathPair, path.front(), path});
  const VertexMask next =
      g->neighbours(path.back(), g->all_edges()) & ~used;
  for_each_bit(next, [&](std::size_t w) {
    path.push_back(static_cast<VertexIndex>(w));
    extend_paths(g, path, used | bit(w), out, max_count);
    path.pop_back();
  });
}

}  // namespace

std::vector<SubgraphRef> enumerate_rooted_path_pairs(const Host& g,
                                                     VertexIndex root,
                                                     std::size_t max_count) {
  if (root >= g->vertex_count()) {
    throw DomainError("root is not a vertex of the graph");
  }
  std::vector<SubgraphRef> out;
  std::vector<VertexIndex> path{root};
  extend_paths(g, path, bit(root), out, max_count);
  return out;
}

SubgraphRef path_pair(const Host& g, std::vector<VertexIndex> path) {
  if (path.empty() || !is_simple_path(*g, path)) {
    throw DomainError("path_pair: not a simple path of the host");
  }
  const VertexMask vs = mask_of(path);
  const VertexIndex root = path.front();
  return SubgraphRef{g, vs, g->edges_within(vs), Flavor::RootedPathPair, root,
                     std::move(path)};
}

SubgraphRef subgraph_intersection(const SubgraphRef& a, const SubgraphRef& b) {
  if (!same_host(a.host, b.host)) {
    throw DomainError("subgraph_intersection: host mismatch");
  }
  const bool induced = a.flavor != Flavor::Any && b.flavor != Flavor::Any;
  return SubgraphRef{a.host, a.vertices & b.vertices, a.edges & b.edges,
                     induced ? Flavor::VertexInduced : Flavor::Any,
                     std::nullopt, {}};
}

}  // namespace isg
