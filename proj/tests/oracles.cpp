// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace oracle {

namespace {

bool in(std::uint64_t mask, int i) { return (mask >> i) & 1U; }

std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if (in(mask, i)) out.push_back(i);
  }
  return out;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t mask_of(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

int OGraph::mult(int u, int w) const {
  return mult_in(~std::uint64_t{0}, u, w);
}

int OGraph::mult_in(std::uint64_t es, int u, int w) const {
  int k = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!in(es, static_cast<int>(i))) continue;
    const auto [a, b] = edges[i];
    if ((a == u && b == w) || (a == w && b == u)) ++k;
  }
  return k;
}

std::uint64_t OGraph::edges_within(std::uint64_t vs) const {
  std::uint64_t es = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in(vs, edges[i].first) && in(vs, edges[i].second)) es |= std::uint64_t{1} << i;
  }
  return es;
}

OGraph from(const isg::Graph& g) {
  OGraph o;
  o.n = static_cast<int>(g.vertex_count());
  for (const isg::Edge& e : g.edges()) {
    o.edges.emplace_back(static_cast<int>(e.u), static_cast<int>(e.w));
  }
  return o;
}

std::uint64_t component(const OGraph& g, int from, std::uint64_t vs, std::uint64_t es) {
  if (!in(vs, from)) return 0;
  std::uint64_t seen = std::uint64_t{1} << from;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (!in(es, static_cast<int>(i))) continue;
      const auto [a, b] = g.edges[i];
      for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
        if (p == x && in(vs, q) && !in(seen, q)) {
          seen |= std::uint64_t{1} << q;
          queue.push_back(q);
        }
      }
    }
  }
  return seen;
}

std::vector<Sub> all_subgraphs(const OGraph& g) {
  std::vector<Sub> out;
  const auto m = static_cast<int>(g.edges.size());
  for (std::uint64_t vs = 0; vs < (std::uint64_t{1} << g.n); ++vs) {
    for (std::uint64_t es = 0; es < (std::uint64_t{1} << m); ++es) {
      if ((es & ~g.edges_within(vs)) == 0) out.emplace_back(vs, es);
    }
  }
  return out;
}

std::vector<Sub> induced_subgraphs(const OGraph& g) {
  std::vector<Sub> out;
  for (std::uint64_t vs = 0; vs < (std::uint64_t{1} << g.n); ++vs) {
    out.emplace_back(vs, g.edges_within(vs));
  }
  return out;
}

std::vector<Sub> rooted_connected(const OGraph& g, int v) {
  std::vector<Sub> out;
  for (const Sub& s : induced_subgraphs(g)) {
    if (in(s.first, v) && component(g, v, s.first, s.second) == s.first) out.push_back(s);
  }
  return out;
}

std::set<std::uint64_t> rooted_tree_vertex_sets(const OGraph& g, int v) {
  std::set<std::uint64_t> out{std::uint64_t{1} << v};
  const auto m = static_cast<int>(g.edges.size());
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << m); ++t) {
    std::uint64_t vs = 0;
    bool loop = false;
    for (int i : members(t)) {
      const auto [a, b] = g.edges[static_cast<std::size_t>(i)];
      loop = loop || a == b;
      vs |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    }
    if (loop || !in(vs, v)) continue;
    const bool acyclic = std::popcount(t) == std::popcount(vs) - 1;
    if (acyclic && component(g, v, vs, t) == vs) out.insert(vs);
  }
  return out;
}

std::set<std::vector<int>> simple_paths(const OGraph& g, int v) {
  std::set<std::vector<int>> out;
  for (std::uint64_t vs = 0; vs < (std::uint64_t{1} << g.n); ++vs) {
    if (!in(vs, v)) continue;
    std::vector<int> rest = members(vs & ~(std::uint64_t{1} << v));
    do {
      std::vector<int> seq{v};
      seq.insert(seq.end(), rest.begin(), rest.end());
      bool ok = true;
      for (std::size_t i = 1; i < seq.size() && ok; ++i) ok = g.mult(seq[i - 1], seq[i]) > 0;
      if (ok) out.insert(seq);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

std::uint64_t iso_count(const OGraph& g, const Sub& a, const Sub& b,
                        const std::vector<std::pair<int, int>>& forced) {
  const std::vector<int> va = members(a.first);
  std::vector<int> vb = members(b.first);
  if (va.size() != vb.size() || std::popcount(a.second) != std::popcount(b.second)) return 0;
  std::uint64_t pairings = 1;
  for (std::size_t i = 0; i < va.size(); ++i) {
    for (std::size_t j = i; j < va.size(); ++j) pairings *= factorial(g.mult_in(a.second, va[i], va[j]));
  }
  std::uint64_t total = 0;
  do {
    std::map<int, int> sigma;
    for (std::size_t i = 0; i < va.size(); ++i) sigma[va[i]] = vb[i];
    bool ok = std::all_of(forced.begin(), forced.end(),
                          [&](auto p) { return sigma.count(p.first) && sigma[p.first] == p.second; });
    for (std::size_t i = 0; i < va.size() && ok; ++i) {
      for (std::size_t j = i; j < va.size() && ok; ++j) {
        ok = g.mult_in(a.second, va[i], va[j]) == g.mult_in(b.second, sigma[va[i]], sigma[va[j]]);
      }
    }
    if (ok) total += pairings;
  } while (std::next_permutation(vb.begin(), vb.end()));
  return total;
}

namespace {

std::uint64_t pair_sum(const OGraph& g, const std::vector<Sub>& subs,
                       const std::vector<std::pair<int, int>>& forced) {
  std::uint64_t total = 0;
  for (const Sub& a : subs) {
    for (const Sub& b : subs) total += iso_count(g, a, b, forced);
  }
  return total;
}

}  // namespace

std::uint64_t fisg_size(const OGraph& g) { return pair_sum(g, all_subgraphs(g), {}); }
std::uint64_t iisg_size(const OGraph& g) { return pair_sum(g, induced_subgraphs(g), {}); }
std::uint64_t tisg_size(const OGraph& g, int v) {
  return pair_sum(g, rooted_connected(g, v), {{v, v}});
}

std::uint64_t pisg_size(const OGraph& g, int v) {
  const auto paths = simple_paths(g, v);
  std::uint64_t total = 0;
  for (const auto& p : paths) {
    for (const auto& q : paths) {
      if (p.size() != q.size()) continue;
      std::vector<std::pair<int, int>> forced;
      for (std::size_t i = 0; i < p.size(); ++i) forced.emplace_back(p[i], q[i]);
      const std::uint64_t mp = mask_of(p);
      const std::uint64_t mq = mask_of(q);
      total += iso_count(g, {mp, g.edges_within(mp)}, {mq, g.edges_within(mq)}, forced);
    }
  }
  return total;
}

bool isomorphic(const OGraph& a, const OGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(b.n));
  for (int i = 0; i < b.n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i) {
      for (int j = i; j < a.n && ok; ++j) {
        ok = a.mult(i, j) == b.mult(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Map from(const isg::PartialIso& f) {
  Map m;
  m.dom_v = f.dom.vertices;
  m.dom_e = f.dom.edges;
  m.cod_v = f.cod.vertices;
  m.cod_e = f.cod.edges;
  for (int x : members(m.dom_v)) m.v[x] = f.map.vertex_map[static_cast<std::size_t>(x)];
  for (int e : members(m.dom_e)) m.e[e] = f.map.edge_map[static_cast<std::size_t>(e)];
  for (auto x : f.dom.path) m.path_dom.push_back(static_cast<int>(x));
  for (auto x : f.cod.path) m.path_cod.push_back(static_cast<int>(x));
  return m;
}

bool same(const Map& m, const isg::PartialIso& f) {
  const Map o = from(f);
  return m.dom_v == o.dom_v && m.dom_e == o.dom_e && m.cod_v == o.cod_v && m.cod_e == o.cod_e &&
         m.v == o.v && m.e == o.e && m.path_dom == o.path_dom && m.path_cod == o.path_cod;
}

namespace {

// phi restricted to the preimage of (cv, ce), followed by psi.
Map restrict(const Map& psi, const Map& phi, std::uint64_t cv, std::uint64_t ce) {
  Map r;
  for (auto [x, y] : phi.v) {
    if (!in(cv, y)) continue;
    r.dom_v |= std::uint64_t{1} << x;
    r.v[x] = psi.v.at(y);
    r.cod_v |= std::uint64_t{1} << r.v[x];
  }
  for (auto [e, f] : phi.e) {
    if (!in(ce, f)) continue;
    r.dom_e |= std::uint64_t{1} << e;
    r.e[e] = psi.e.at(f);
    r.cod_e |= std::uint64_t{1} << r.e[e];
  }
  return r;
}

}  // namespace

Map compose(isg::Kind kind, const OGraph& g, int root, const Map& psi, const Map& phi) {
  switch (kind) {
    case isg::Kind::Fisg:
    case isg::Kind::Iisg:
      return restrict(psi, phi, phi.cod_v & psi.dom_v, phi.cod_e & psi.dom_e);
    case isg::Kind::Tisg: {
      const std::uint64_t cv =
          component(g, root, phi.cod_v & psi.dom_v, phi.cod_e & psi.dom_e);
      return restrict(psi, phi, cv, g.edges_within(cv));
    }
    case isg::Kind::Pisg: {
      std::vector<int> prefix;
      for (std::size_t i = 0; i < phi.path_cod.size() && i < psi.path_dom.size(); ++i) {
        if (phi.path_cod[i] != psi.path_dom[i]) break;
        prefix.push_back(phi.path_cod[i]);
      }
      const std::uint64_t cv = mask_of(prefix);
      Map r = restrict(psi, phi, cv, g.edges_within(cv));
      std::map<int, int> back;
      for (auto [x, y] : phi.v) back[y] = x;
      for (int y : prefix) {
        r.path_dom.push_back(back.at(y));
        r.path_cod.push_back(psi.v.at(y));
      }
      return r;
    }
  }
  return {};
}

std::vector<bool> sandwich(std::size_t n, const Mul& mul, std::size_t a) {
  std::vector<bool> out(n, false);
  out[a] = true;
  for (std::size_t x = 0; x < n; ++x) {
    out[mul(x, a)] = true;
    out[mul(a, x)] = true;
    for (std::size_t y = 0; y < n; ++y) out[mul(mul(x, a), y)] = true;
  }
  return out;
}

std::set<std::vector<bool>> all_ideals(std::size_t n, const Mul& mul) {
  std::vector<std::vector<bool>> principal;
  for (std::size_t a = 0; a < n; ++a) principal.push_back(sandwich(n, mul, a));
  std::set<std::vector<bool>> found{std::vector<bool>(n, false)};
  std::deque<std::vector<bool>> queue(found.begin(), found.end());
  while (!queue.empty()) {
    const std::vector<bool> cur = queue.front();
    queue.pop_front();
    for (const auto& p : principal) {
      std::vector<bool> next = cur;
      for (std::size_t i = 0; i < n; ++i) next[i] = next[i] || p[i];
      if (found.insert(next).second) queue.push_back(next);
    }
  }
  return found;
}

}  // namespace oracle
