// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/json_io.hpp"

#include <fstream>

#include "isg/error.hpp"

namespace isg {

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", g.vertex_id(e.u)}, {"w", g.vertex_id(e.w)}});
  }
  return {{"vertices", g.vertex_ids()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    Graph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
      const auto u = g.find_vertex(e.at("u").get<std::string>());
      const auto w = g.find_vertex(e.at("w").get<std::string>());
      if (!u || !w) throw FormatError("edge endpoint is not a declared vertex");
      g.add_edge(e.at("id").get<std::string>(), *u, *w);
    }
    return g;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("graph JSON: ") + e.what());
  }
}

Json to_json(const SubgraphRef& s) {
  const Graph& g = *s.host;
  Json v = Json::array();
  Json e = Json::array();
  for_each_bit(s.vertices, [&](std::size_t i) { v.push_back(g.vertex_id(static_cast<VertexIndex>(i))); });
  for_each_bit(s.edges, [&](std::size_t i) { e.push_back(g.edge(static_cast<EdgeIndex>(i)).id); });
  return {{"v", std::move(v)}, {"e", std::move(e)}};
}

namespace {

Json path_ids(const Graph& g, const std::vector<VertexIndex>& path) {
  Json out = Json::array();
  for (VertexIndex v : path) out.push_back(g.vertex_id(v));
  return out;
}

VertexIndex vertex_of(const Graph& g, const Json& id) {
  const auto v = g.find_vertex(id.get<std::string>());
  if (!v) throw FormatError("unknown vertex id " + id.dump());
  return *v;
}

EdgeIndex edge_of(const Graph& g, const Json& id) {
  const auto e = g.find_edge(id.get<std::string>());
  if (!e) throw FormatError("unknown edge id " + id.dump());
  return *e;
}

SubgraphRef subgraph_from_json(const Json& j, const Host& host, Flavor flavor,
                               std::optional<VertexIndex> root) {
  SubgraphRef s;
  s.host = host;
  s.flavor = flavor;
  s.root = root;
  for (const auto& v : j.at("v")) s.vertices |= bit(vertex_of(*host, v));
  for (const auto& e : j.at("e")) s.edges |= bit(edge_of(*host, e));
  return s;
}

}  // namespace

Json to_json(const PartialIso& f) {
  const Graph& g = *f.host();
  Json vmap = Json::object();
  Json emap = Json::object();
  for_each_bit(f.dom.vertices, [&](std::size_t v) {
    vmap[g.vertex_id(static_cast<VertexIndex>(v))] =
        g.vertex_id(static_cast<VertexIndex>(f.map.vertex_map[v]));
  });
  for_each_bit(f.dom.edges, [&](std::size_t e) {
    emap[g.edge(static_cast<EdgeIndex>(e)).id] =
        g.edge(static_cast<EdgeIndex>(f.map.edge_map[e])).id;
  });
  return {{"dom", to_json(f.dom)},          {"cod", to_json(f.cod)},
          {"vmap", std::move(vmap)},          {"emap", std::move(emap)},
          {"path_dom", path_ids(g, f.dom.path)}, {"path_cod", path_ids(g, f.cod.path)}};
}

PartialIso partial_iso_from_json(const Json& j, const Host& host, Kind kind,
                                 std::optional<VertexIndex> root) {
  try {
    const Graph& g = *host;
    PartialIso f{subgraph_from_json(j.at("dom"), host, flavor_of(kind), root),
                 subgraph_from_json(j.at("cod"), host, flavor_of(kind), root),
                 {}};
    if (j.contains("path_dom")) {
      for (const auto& v : j.at("path_dom")) f.dom.path.push_back(vertex_of(g, v));
    }
    if (j.contains("path_cod")) {
      for (const auto& v : j.at("path_cod")) f.cod.path.push_back(vertex_of(g, v));
    }
    f.map.vertex_map.assign(g.vertex_count(), GraphIso::kUnmapped);
    f.map.edge_map.assign(g.edge_count(), GraphIso::kUnmapped);
    for (const auto& [from, to] : j.at("vmap").items()) {
      f.map.vertex_map[vertex_of(g, Json(from))] = static_cast<std::int32_t>(vertex_of(g, to));
    }
    for (const auto& [from, to] : j.at("emap").items()) {
      f.map.edge_map[edge_of(g, Json(from))] = static_cast<std::int32_t>(edge_of(g, to));
    }
    if (auto why = validate(f)) throw FormatError("invalid element: " + *why);
    return f;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("element JSON: ") + e.what());
  }
}

Json to_json(const InverseSemigroup& s) {
  Json elements = Json::array();
  for (const PartialIso& f : s.elements()) elements.push_back(to_json(f));
  const Graph& g = *s.host();
  return {{"kind", to_string(s.kind())},
          {"root", s.root() ? Json(g.vertex_id(*s.root())) : Json(nullptr)},
          {"host", to_json(g)},
          {"elements", std::move(elements)},
          {"stats",
           {{"elements", s.size()},
            {"idempotents", s.idempotent_indices().size()},
            {"table", s.has_table()}}}};
}

InverseSemigroup semigroup_from_json(const Json& j, const Caps& caps) {
  try {
    const Kind kind = parse_kind(j.at("kind").get<std::string>());
    const Host host = share(graph_from_json(j.at("host")));
    std::optional<VertexIndex> root;
    if (j.contains("root") && !j.at("root").is_null()) root = vertex_of(*host, j.at("root"));
    if (is_rooted(kind) != root.has_value()) {
      throw FormatError(std::string("kind ") + to_string(kind) +
                        (root ? " does not take a root" : " requires a root"));
    }
    std::vector<PartialIso> elements;
    for (const auto& e : j.at("elements")) {
      elements.push_back(partial_iso_from_json(e, host, kind, root));
    }
    return InverseSemigroup(kind, host, root, std::move(elements), caps);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("semigroup JSON: ") + e.what());
  }
}

namespace {

Json check_json(const AxiomCheck& c) {
  return {{"passed", c.passed},
          {"sampled", c.sampled},
          {"checked", c.checked},
          {"witness", c.witness},
          {"detail", c.detail}};
}

}  // namespace

Json to_json(const VerifyReport& r) {
  Json out = Json::object();
  for (const AxiomCheck* c : r.checks()) out[c->name] = check_json(*c);
  out["all_passed"] = r.all_passed();
  return out;
}

Json to_json(const LatticeReport& r) {
  Json out = Json::object();
  for (auto [name, v] : r.verdicts()) {
    out[name] = {{"value", to_string(v->value)}, {"witness", v->witness}, {"detail", v->detail}};
  }
  if (!r.rank.empty()) out["rank"] = r.rank;
  return out;
}

Json to_json(const TheoremMatrix& m) {
  Json rows = Json::array();
  for (const TheoremResult& r : m.rows) {
    rows.push_back({{"graph", r.graph},
                    {"theorem", r.theorem},
                    {"status", to_string(r.status)},
                    {"detail", r.detail}});
  }
  return {{"rows", std::move(rows)},
          {"summary",
           {{"pass", m.count(Status::Pass)},
            {"fail", m.count(Status::Fail)},
            {"skipped", m.count(Status::Skipped)},
            {"parse_error", m.count(Status::ParseError)}}},
          {"ok", m.ok()}};
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace isg
