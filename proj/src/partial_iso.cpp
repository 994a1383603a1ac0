// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/partial_iso.hpp"

#include <sstream>

#include "isg/error.hpp"

namespace isg {

const char* to_string(Kind k) noexcept {
  switch (k) {
    case Kind::Fisg:
      return "fisg";
    case Kind::Iisg:
      return "iisg";
    case Kind::Tisg:
      return "tisg";
    case Kind::Pisg:
      return "pisg";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  if (name == "fisg") return Kind::Fisg;
  if (name == "iisg") return Kind::Iisg;
  if (name == "tisg") return Kind::Tisg;
  if (name == "pisg") return Kind::Pisg;
  throw FormatError("unknown semigroup kind '" + std::string(name) + "'");
}

Flavor flavor_of(Kind k) noexcept {
  switch (k) {
    case Kind::Fisg:
      return Flavor::Any;
    case Kind::Iisg:
      return Flavor::VertexInduced;
    case Kind::Tisg:
      return Flavor::RootedConnectedInduced;
    case Kind::Pisg:
      return Flavor::RootedPathPair;
  }
  return Flavor::Any;
}

bool PartialIso::operator==(const PartialIso& other) const {
  return dom.same_subgraph(other.dom) && cod.same_subgraph(other.cod) &&
         map == other.map;
}

std::size_t PartialIsoHash::operator()(const PartialIso& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(f.dom.vertices);
  mix(f.dom.edges);
  mix(f.cod.vertices);
  mix(f.cod.edges);
  for (auto v : f.map.vertex_map) mix(static_cast<std::uint64_t>(v + 1));
  for (auto e : f.map.edge_map) mix(static_cast<std::uint64_t>(e + 1));
  for (auto p : f.dom.path) mix(p);
  return h;
}

PartialIso empty_map(const Host& g) { return identity_on(empty_subgraph(g)); }

PartialIso identity_on(const SubgraphRef& s) {
  PartialIso f{s, s, {}};
  f.map.vertex_map.assign(s.host->vertex_count(), GraphIso::kUnmapped);
  f.map.edge_map.assign(s.host->edge_count(), GraphIso::kUnmapped);
  for_each_bit(s.vertices, [&](std::size_t v) {
    f.map.vertex_map[v] = static_cast<std::int32_t>(v);
  });
  for_each_bit(s.edges, [&](std::size_t e) {
    f.map.edge_map[e] = static_cast<std::int32_t>(e);
  });
  return f;
}

PartialIso invert(const PartialIso& f) {
  PartialIso g{f.cod, f.dom, {}};
  g.map.vertex_map.assign(f.map.vertex_map.size(), GraphIso::kUnmapped);
  g.map.edge_map.assign(f.map.edge_map.size(), GraphIso::kUnmapped);
  for (std::size_t v = 0; v < f.map.vertex_map.size(); ++v) {
    if (f.map.vertex_map[v] >= 0) {
      g.map.vertex_map[f.map.vertex_map[v]] = static_cast<std::int32_t>(v);
    }
  }
  for (std::size_t e = 0; e < f.map.edge_map.size(); ++e) {
    if (f.map.edge_map[e] >= 0) {
      g.map.edge_map[f.map.edge_map[e]] = static_cast<std::int32_t>(e);
    }
  }
  return g;
}

namespace {

void require_same_host(const PartialIso& psi, const PartialIso& phi) {
  if (!same_host(psi.host(), phi.host())) {
    throw DomainError("compose: elements live on different hosts");
  }
}

VertexIndex require_common_root(const PartialIso& psi, const PartialIso& phi) {
  if (!psi.dom.root || !phi.cod.root || *psi.dom.root != *phi.cod.root) {
    throw DomainError("compose: elements do not share a root");
  }
  return *psi.dom.root;
}

// psi∘phi restricted to phi^-1 of the subgraph (cv, ce) of Im(phi)∩Dom(psi).
PartialIso restrict_through(const PartialIso& psi, const PartialIso& phi,
                            VertexMask cv, EdgeMask ce, Flavor flavor,
                            std::optional<VertexIndex> root) {
  const Host& host = phi.host();
  PartialIso out;
  out.dom = SubgraphRef{host, 0, 0, flavor, root, {}};
  out.cod = SubgraphRef{host, 0, 0, flavor, root, {}};
  out.map.vertex_map.assign(host->vertex_count(), GraphIso::kUnmapped);
  out.map.edge_map.assign(host->edge_count(), GraphIso::kUnmapped);

  for_each_bit(phi.dom.vertices, [&](std::size_t v) {
    const auto mid = phi.map.vertex_map[v];
    if (!has_bit(cv, static_cast<std::size_t>(mid))) return;
    const auto target = psi.map.vertex_map[mid];
    out.dom.vertices |= bit(v);
    out.cod.vertices |= bit(static_cast<std::size_t>(target));
    out.map.vertex_map[v] = target;
  });
  for_each_bit(phi.dom.edges, [&](std::size_t e) {
    const auto mid = phi.map.edge_map[e];
    if (!has_bit(ce, static_cast<std::size_t>(mid))) return;
    const auto target = psi.map.edge_map[mid];
    out.dom.edges |= bit(e);
    out.cod.edges |= bit(static_cast<std::size_t>(target));
    out.map.edge_map[e] = target;
  });
  return out;
}

}  // namespace

PartialIso compose_fisg(const PartialIso& psi, const PartialIso& phi) {
  require_same_host(psi, phi);
  const VertexMask cv = phi.cod.vertices & psi.dom.vertices;
  const EdgeMask ce = phi.cod.edges & psi.dom.edges;
  const bool induced =
      psi.dom.flavor != Flavor::Any && phi.dom.flavor != Flavor::Any;
  return restrict_through(psi, phi, cv, ce,
                          induced ? Flavor::VertexInduced : Flavor::Any,
                          std::nullopt);
}

PartialIso compose_tisg(const PartialIso& psi, const PartialIso& phi) {
  require_same_host(psi, phi);
  const VertexIndex root = require_common_root(psi, phi);
  const Graph& g = *phi.host();
  // A root path lies in both subgraphs iff it lies in their intersection.
  const VertexMask cv =
      reachable(g, root, phi.cod.vertices & psi.dom.vertices,
                phi.cod.edges & psi.dom.edges);
  return restrict_through(psi, phi, cv, g.edges_within(cv),
                          Flavor::RootedConnectedInduced, root);
}

PartialIso compose_pisg(const PartialIso& psi, const PartialIso& phi) {
  require_same_host(psi, phi);
  const VertexIndex root = require_common_root(psi, phi);
  const auto& p = phi.cod.path;
  const auto& q = psi.dom.path;
  std::size_t k = 0;
  while (k < p.size() && k < q.size() && p[k] == q[k]) ++k;
  if (k == 0) throw DomainError("compose_pisg: paths do not start at the root");

  VertexMask cv = 0;
  for (std::size_t i = 0; i < k; ++i) cv |= bit(p[i]);
  const Graph& g = *phi.host();
  PartialIso out = restrict_through(psi, phi, cv, g.edges_within(cv),
                                    Flavor::RootedPathPair, root);
  out.dom.path.assign(phi.dom.path.begin(), phi.dom.path.begin() + k);
  out.cod.path.assign(psi.cod.path.begin(), psi.cod.path.begin() + k);
  return out;
}

PartialIso compose(Kind kind, const PartialIso& psi, const PartialIso& phi) {
  switch (kind) {
    case Kind::Fisg:
    case Kind::Iisg:
      return compose_fisg(psi, phi);
    case Kind::Tisg:
      return compose_tisg(psi, phi);
    case Kind::Pisg:
      return compose_pisg(psi, phi);
  }
  throw DomainError("compose: unknown kind");
}

bool is_idempotent(const PartialIso& f, Kind kind) {
  return compose(kind, f, f) == f;
}

bool natural_leq(const PartialIso& e, const PartialIso& f, Kind kind) {
  if (!is_idempotent(e, kind) || !is_idempotent(f, kind)) {
    throw DomainError("natural_leq: arguments must be idempotent");
  }
  return compose(kind, e, f) == e;
}

std::optional<std::string> validate(const PartialIso& f) {
  if (auto err = validate(f.dom)) return "domain: " + *err;
  if (auto err = validate(f.cod)) return "codomain: " + *err;
  if (!same_host(f.dom.host, f.cod.host)) return "domain and codomain hosts differ";
  if (f.dom.flavor != f.cod.flavor) return "domain and codomain flavors differ";
  const Graph& g = *f.host();
  if (f.map.vertex_map.size() != g.vertex_count() ||
      f.map.edge_map.size() != g.edge_count()) {
    return "map sizes do not match the host";
  }
  VertexMask image_v = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto t = f.map.vertex_map[v];
    if (!has_bit(f.dom.vertices, v)) {
      if (t != GraphIso::kUnmapped) return "vertex outside domain is mapped";
      continue;
    }
    if (t < 0 || !has_bit(f.cod.vertices, static_cast<std::size_t>(t)) ||
        has_bit(image_v, static_cast<std::size_t>(t))) {
      return "vertex map is not a bijection onto the codomain";
    }
    image_v |= bit(static_cast<std::size_t>(t));
  }
  if (image_v != f.cod.vertices) return "vertex map is not onto";
  EdgeMask image_e = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto t = f.map.edge_map[e];
    if (!has_bit(f.dom.edges, e)) {
      if (t != GraphIso::kUnmapped) return "edge outside domain is mapped";
      continue;
    }
    if (t < 0 || !has_bit(f.cod.edges, static_cast<std::size_t>(t)) ||
        has_bit(image_e, static_cast<std::size_t>(t))) {
      return "edge map is not a bijection onto the codomain";
    }
    image_e |= bit(static_cast<std::size_t>(t));
    const Edge& src = g.edge(static_cast<EdgeIndex>(e));
    const Edge& dst = g.edge(static_cast<EdgeIndex>(t));
    const auto mu = static_cast<VertexIndex>(f.map.vertex_map[src.u]);
    const auto mw = static_cast<VertexIndex>(f.map.vertex_map[src.w]);
    if (std::minmax(mu, mw) != std::minmax(dst.u, dst.w)) {
      return "edge map does not respect incidence";
    }
  }
  if (image_e != f.cod.edges) return "edge map is not onto";
  if (f.dom.flavor == Flavor::RootedConnectedInduced ||
      f.dom.flavor == Flavor::RootedPathPair) {
    if (f.dom.root != f.cod.root) return "domain and codomain roots differ";
    if (f.map.vertex_map[*f.dom.root] != static_cast<std::int32_t>(*f.dom.root)) {
      return "root is not fixed";
    }
  }
  if (f.dom.flavor == Flavor::RootedPathPair) {
    if (f.dom.path.size() != f.cod.path.size()) return "path lengths differ";
    for (std::size_t i = 0; i < f.dom.path.size(); ++i) {
      if (f.map.vertex_map[f.dom.path[i]] !=
          static_cast<std::int32_t>(f.cod.path[i])) {
        return "map does not carry the domain path onto the codomain path";
      }
    }
  }
  return std::nullopt;
}

std::string describe(const PartialIso& f) {
  if (f.is_empty()) return "mu0";
  std::ostringstream out;
  out << describe(f.dom) << " -> " << describe(f.cod) << " :";
  const Graph& g = *f.host();
  for_each_bit(f.dom.vertices, [&](std::size_t v) {
    out << ' ' << g.vertex_id(static_cast<VertexIndex>(v)) << "->"
        << g.vertex_id(static_cast<VertexIndex>(f.map.vertex_map[v]));
  });
  for_each_bit(f.dom.edges, [&](std::size_t e) {
    out << ' ' << g.edge(static_cast<EdgeIndex>(e)).id << "->"
        << g.edge(static_cast<EdgeIndex>(f.map.edge_map[e])).id;
  });
  return out.str();
}

}  // namespace isg
