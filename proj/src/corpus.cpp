// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <tuple>
#include <utility>

#include "isg/error.hpp"
#include "isg/isomorphism.hpp"
#include "isg/subgraph.hpp"

namespace isg {

namespace {

std::string letter(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

Graph assemble(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(letter(i));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    g.add_edge(std::to_string(k + 1), static_cast<VertexIndex>(edges[k].first),
               static_cast<VertexIndex>(edges[k].second));
  }
  return g;
}

// Keeps one graph per canonical form, sorted by (n, m, form).
class Deduper {
 public:
  void add(Graph g) {
    std::string key = canonical_form(g);
    auto k = std::make_tuple(g.vertex_count(), g.edge_count(), std::move(key));
    seen_.try_emplace(std::move(k), std::move(g));
  }
  std::vector<Graph> take() {
    std::vector<Graph> out;
    for (auto& [k, g] : seen_) out.push_back(std::move(g));
    return out;
  }

 private:
  std::map<std::tuple<std::size_t, std::size_t, std::string>, Graph> seen_;
};

}  // namespace

std::vector<Graph> multigraphs_up_to(std::size_t max_vertices, std::size_t max_edges) {
  Deduper d;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = u; w < n; ++w) slots.emplace_back(u, w);
    }
    // Multisets of slots of size <= max_edges, as non-decreasing sequences.
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    auto extend = [&](auto&& self, std::size_t from) -> void {
      d.add(assemble(n, chosen));
      if (chosen.size() == max_edges) return;
      for (std::size_t s = from; s < slots.size(); ++s) {
        chosen.push_back(slots[s]);
        self(self, s);
        chosen.pop_back();
      }
    };
    extend(extend, 0);
  }
  return d.take();
}

std::vector<Graph> simple_graphs_up_to(std::size_t max_vertices) {
  Deduper d;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = u + 1; w < n; ++w) slots.emplace_back(u, w);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for_each_bit(mask, [&](std::size_t s) { edges.push_back(slots[s]); });
      d.add(assemble(n, edges));
    }
  }
  return d.take();
}

std::vector<Graph> connected_simple_graphs_up_to(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (Graph& g : simple_graphs_up_to(max_vertices)) {
    if (!g.empty() && is_connected(g, g.all_vertices(), g.all_edges())) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<RootedGraph> rooted_connected_simple_up_to(std::size_t max_vertices) {
  std::vector<RootedGraph> out;
  for (const Graph& g : connected_simple_graphs_up_to(max_vertices)) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back({g, v});
  }
  return out;
}

std::string corpus_name(const Graph& g, std::size_t ordinal) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "n%zu_m%zu_%02zu", g.vertex_count(), g.edge_count(),
                ordinal);
  return buf;
}

std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<Graph> all = multigraphs_up_to(3, 3);
  for (Graph& g : simple_graphs_up_to(4)) {
    if (g.vertex_count() == 4) all.push_back(std::move(g));
  }
  std::vector<std::filesystem::path> written;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ordinal;
  for (const Graph& g : all) {
    const std::size_t k = ordinal[{g.vertex_count(), g.edge_count()}]++;
    const auto path = dir / (corpus_name(g, k) + ".graph");
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << to_text(g);
    written.push_back(path);
  }
  return written;
}

}  // namespace isg
