// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/reconstruction.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "isg/error.hpp"
#include "isg/lattice.hpp"

namespace isg {

AbstractSemigroup forget(const InverseSemigroup& s, std::uint64_t seed,
                         std::size_t max_elements) {
  if (s.size() > max_elements) {
    throw ResourceLimitError("forget: " + std::to_string(s.size()) +
                             " elements exceed the cap of " + std::to_string(max_elements));
  }
  const CompositionTable t = composition_table(s, max_elements);
  const std::size_t n = t.size();
  AbstractSemigroup a;
  a.origin.resize(n);
  std::iota(a.origin.begin(), a.origin.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(a.origin.begin(), a.origin.end(), rng);
  std::vector<std::uint32_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[a.origin[i]] = static_cast<std::uint32_t>(i);
  a.table = CompositionTable(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = t(a.origin[i], a.origin[j]);
      if (k == CompositionTable::kMissing) {
        throw ConsistencyError("forget: semigroup is not closed");
      }
      a.table.set(i, j, position[k]);
    }
  }
  return a;
}

Graph recover_graph(const AbstractSemigroup& a) {
  const CompositionTable& t = a.table;
  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t(i, i) == i) idem.push_back(i);
  }
  const FinitePoset p(idem.size(), [&](std::size_t x, std::size_t y) {
    return t(idem[x], idem[y]) == idem[x];
  });
  const auto bottom = p.bottom();
  if (!bottom) throw StructureError("recover_graph: no bottom idempotent");

  const std::vector<std::size_t>& atoms = p.upper_covers(*bottom);
  Graph g;
  std::vector<VertexIndex> vertex_of(idem.size(), 0);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    vertex_of[atoms[k]] = g.add_vertex("v" + std::to_string(k));
  }
  std::size_t edges = 0;
  for (std::size_t x = 0; x < idem.size(); ++x) {
    if (x == *bottom || p.lower_covers(x).size() != 1 || p.covers(x, *bottom)) continue;
    std::vector<std::size_t> below;
    for (std::size_t at : atoms) {
      if (p.leq(at, x)) below.push_back(at);
    }
    if (below.empty() || below.size() > 2) {
      throw StructureError("recover_graph: join-irreducible idempotent with " +
                           std::to_string(below.size()) + " atoms below");
    }
    const VertexIndex u = vertex_of[below.front()];
    const VertexIndex w = vertex_of[below.back()];
    g.add_edge("e" + std::to_string(edges++), u, w);
  }
  return g;
}

void check_semigroup_map(const InverseSemigroup& from, const InverseSemigroup& to,
                         SemigroupMap& m) {
  m.bijective = from.size() == to.size() && m.forward.size() == from.size();
  if (m.bijective) {
    std::vector<bool> hit(to.size(), false);
    for (std::size_t img : m.forward) {
      if (img == SemigroupMap::npos || hit[img]) {
        m.bijective = false;
        break;
      }
      hit[img] = true;
    }
  }
  m.homomorphism = false;
  m.witness.clear();
  if (!m.bijective) return;
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < from.size(); ++j) {
      if (m.forward[from.multiply(i, j)] != to.multiply(m.forward[i], m.forward[j])) {
        m.witness = {i, j};
        return;
      }
    }
  }
  m.homomorphism = true;
}

namespace {

std::uint64_t map_mask(std::uint64_t mask, const std::vector<std::int32_t>& f) {
  std::uint64_t out = 0;
  for_each_bit(mask, [&](std::size_t i) { out |= bit(static_cast<std::size_t>(f[i])); });
  return out;
}

}  // namespace

SemigroupMap transport_isomorphism(const InverseSemigroup& s, const InverseSemigroup& t,
                                   const GraphIso& phi) {
  const Graph& g = *s.host();
  const Graph& h = *t.host();
  if (s.kind() != t.kind()) throw DomainError("transport_isomorphism: kinds differ");
  if (!is_isomorphism(g, h, phi)) {
    throw DomainError("transport_isomorphism: map is not a graph isomorphism");
  }
  if (s.root() &&
      (!t.root() || static_cast<VertexIndex>(phi.vertex_map[*s.root()]) != *t.root())) {
    throw DomainError("transport_isomorphism: map does not carry root to root");
  }
  auto carry = [&](const SubgraphRef& x) {
    SubgraphRef y;
    y.host = t.host();
    y.vertices = map_mask(x.vertices, phi.vertex_map);
    y.edges = map_mask(x.edges, phi.edge_map);
    y.flavor = x.flavor;
    y.root = t.root();
    for (VertexIndex v : x.path) y.path.push_back(static_cast<VertexIndex>(phi.vertex_map[v]));
    return y;
  };
  SemigroupMap m;
  m.forward.reserve(s.size());
  for (const PartialIso& f : s.elements()) {
    PartialIso image{carry(f.dom), carry(f.cod), {}};
    image.map.vertex_map.assign(h.vertex_count(), GraphIso::kUnmapped);
    image.map.edge_map.assign(h.edge_count(), GraphIso::kUnmapped);
    for_each_bit(f.dom.vertices, [&](std::size_t v) {
      image.map.vertex_map[phi.vertex_map[v]] = phi.vertex_map[f.map.vertex_map[v]];
    });
    for_each_bit(f.dom.edges, [&](std::size_t e) {
      image.map.edge_map[phi.edge_map[e]] = phi.edge_map[f.map.edge_map[e]];
    });
    m.forward.push_back(t.index_of(image).value_or(SemigroupMap::npos));
  }
  check_semigroup_map(s, t, m);
  return m;
}

CharacterizationVerdict verify_characterization(const Graph& g, const Graph& h,
                                                std::uint64_t seed, const Caps& caps) {
  CharacterizationVerdict v;
  v.graphs_isomorphic = are_isomorphic(g, h);
  const Graph rg = recover_graph(forget(build(Kind::Fisg, share(g), {}, caps), seed));
  const Graph rh = recover_graph(forget(build(Kind::Fisg, share(h), {}, caps), seed + 1));
  v.recovered_isomorphic = are_isomorphic(rg, rh);
  v.round_trip_g = are_isomorphic(rg, g);
  v.round_trip_h = are_isomorphic(rh, h);
  return v;
}

SemigroupMap iisg_complement_functor(const Graph& g, const Caps& caps) {
  if (!g.is_simple()) throw DomainError("iisg_complement_functor: graph is not simple");
  const Host host = share(g);
  const Host comp = share(complement(g));
  const InverseSemigroup s = build(Kind::Iisg, host, {}, caps);
  const InverseSemigroup t = build(Kind::Iisg, comp, {}, caps);

  const std::size_t n = comp->vertex_count();
  std::vector<std::int32_t> edge_between(n * n, GraphIso::kUnmapped);
  for (const Edge& e : comp->edges()) {
    const auto idx = static_cast<std::int32_t>(*comp->find_edge(e.id));
    edge_between[e.u * n + e.w] = edge_between[e.w * n + e.u] = idx;
  }
  SemigroupMap m;
  for (const PartialIso& f : s.elements()) {
    PartialIso image{induced_subgraph(comp, f.dom.vertices),
                     induced_subgraph(comp, f.cod.vertices),
                     {f.map.vertex_map, std::vector<std::int32_t>(comp->edge_count(),
                                                                  GraphIso::kUnmapped)}};
    for_each_bit(image.dom.edges, [&](std::size_t e) {
      const Edge& ed = comp->edge(static_cast<EdgeIndex>(e));
      const auto u = static_cast<std::size_t>(f.map.vertex_map[ed.u]);
      const auto w = static_cast<std::size_t>(f.map.vertex_map[ed.w]);
      image.map.edge_map[e] = edge_between[u * n + w];
    });
    m.forward.push_back(t.index_of(image).value_or(SemigroupMap::npos));
  }
  check_semigroup_map(s, t, m);
  return m;
}

std::optional<std::vector<std::size_t>> find_semigroup_isomorphism(
    const CompositionTable& a, const CompositionTable& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n > 16) throw ResourceLimitError("find_semigroup_isomorphism: more than 16 elements");
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(n, kFree);
  std::vector<bool> used(n, false);
  // Consistency of the products among assigned elements.
  auto consistent = [&](std::size_t last) {
    for (std::size_t i = 0; i <= last; ++i) {
      for (std::size_t j = 0; j <= last; ++j) {
        if (i != last && j != last) continue;
        const std::size_t k = a(i, j);
        if (k <= last && map[k] != b(map[i], map[j])) return false;
      }
    }
    // Products landing on later elements must agree once those are placed.
    for (std::size_t i = 0; i <= last; ++i) {
      for (std::size_t j = 0; j <= last; ++j) {
        const std::size_t k = a(i, j);
        if (k > last && used[b(map[i], map[j])]) return false;
      }
    }
    return true;
  };
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || (a(i, i) == i) != (b(c, c) == c)) continue;
      map[i] = c;
      used[c] = true;
      if (consistent(i) && self(self, i + 1)) return true;
      used[c] = false;
      map[i] = kFree;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return map;
}

CounterexampleVerdict iisg_counterexample_check() {
  CounterexampleVerdict v;
  const Host k1 = share(graphs::complete(1));
  const Host loop = share(graphs::loop_vertex());
  const InverseSemigroup a = build(Kind::Iisg, k1);
  const InverseSemigroup b = build(Kind::Iisg, loop);
  v.iisg_k1_size = a.size();
  v.iisg_loop_size = b.size();
  v.iisg_bijection = find_semigroup_isomorphism(composition_table(a), composition_table(b));
  v.graphs_isomorphic = are_isomorphic(*k1, *loop);
  const Graph ra = recover_graph(forget(build(Kind::Fisg, k1), 0));
  const Graph rb = recover_graph(forget(build(Kind::Fisg, loop), 0));
  v.fisg_distinguishes = !are_isomorphic(ra, rb);
  return v;
}

}  // namespace isg
