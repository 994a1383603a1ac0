// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementations. They read only raw vertex/edge data
// and share no code with the library's enumerators, isomorphism search or
// composition rules.

#ifndef ISG_TESTS_ORACLES_HPP_
#define ISG_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "isg/graph.hpp"
#include "isg/partial_iso.hpp"

namespace oracle {

struct OGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int mult(int u, int w) const;
  // Edges of `es` joining u and w.
  int mult_in(std::uint64_t es, int u, int w) const;
  std::uint64_t edges_within(std::uint64_t vs) const;
};

OGraph from(const isg::Graph& g);

// Vertex set reachable from `from` using only edges in es (within vs).
std::uint64_t component(const OGraph& g, int from, std::uint64_t vs, std::uint64_t es);

// (vertex mask, edge mask)
using Sub = std::pair<std::uint64_t, std::uint64_t>;

std::vector<Sub> all_subgraphs(const OGraph& g);
std::vector<Sub> induced_subgraphs(const OGraph& g);
// Induced subgraphs containing v that are connected.
std::vector<Sub> rooted_connected(const OGraph& g, int v);
// Vertex sets of the trees (edge subsets, acyclic and connected) containing v,
// the single vertex included.
std::set<std::uint64_t> rooted_tree_vertex_sets(const OGraph& g, int v);
// Every simple path from v as a vertex sequence, found by permuting subsets.
std::set<std::vector<int>> simple_paths(const OGraph& g, int v);

// Number of isomorphisms a -> b. `forced` pairs are fixed; the remaining
// vertices are permuted. Parallel bundles contribute mult! edge pairings.
std::uint64_t iso_count(const OGraph& g, const Sub& a, const Sub& b,
                        const std::vector<std::pair<int, int>>& forced = {});

std::uint64_t fisg_size(const OGraph& g);
std::uint64_t iisg_size(const OGraph& g);
std::uint64_t tisg_size(const OGraph& g, int v);
std::uint64_t pisg_size(const OGraph& g, int v);

// Isomorphism of whole graphs by permuting vertices of b.
bool isomorphic(const OGraph& a, const OGraph& b);

// A partial isomorphism as plain maps.
struct Map {
  std::uint64_t dom_v = 0, dom_e = 0, cod_v = 0, cod_e = 0;
  std::map<int, int> v, e;
  std::vector<int> path_dom, path_cod;
};

Map from(const isg::PartialIso& f);
bool same(const Map& m, const isg::PartialIso& f);

// psi after phi under each rule, evaluated directly from the definitions.
Map compose(isg::Kind kind, const OGraph& g, int root, const Map& psi, const Map& phi);

// All ideals of a finite semigroup given by its product: the closure under
// union of the empty set and the sets S^1 a S^1.
using Mul = std::function<std::size_t(std::size_t, std::size_t)>;
std::vector<bool> sandwich(std::size_t n, const Mul& mul, std::size_t a);
std::set<std::vector<bool>> all_ideals(std::size_t n, const Mul& mul);

}  // namespace oracle

#endif  // ISG_TESTS_ORACLES_HPP_
