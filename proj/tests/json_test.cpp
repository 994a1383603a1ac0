// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "isg/error.hpp"
#include "isg/json_io.hpp"

namespace isg {
namespace {

void expect_same(const InverseSemigroup& a, const InverseSemigroup& b) {
  ASSERT_EQ(a.kind(), b.kind());
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(*a.host(), *b.host());
  EXPECT_EQ(a.root(), b.root());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const PartialIso& f = a.element(i);
    const PartialIso& g = b.element(i);
    EXPECT_EQ(f.dom.vertices, g.dom.vertices);
    EXPECT_EQ(f.dom.edges, g.dom.edges);
    EXPECT_EQ(f.cod.vertices, g.cod.vertices);
    EXPECT_EQ(f.map.vertex_map, g.map.vertex_map);
    EXPECT_EQ(f.map.edge_map, g.map.edge_map);
    EXPECT_EQ(f.dom.path, g.dom.path);
    EXPECT_EQ(f.cod.path, g.cod.path);
  }
}

TEST(Json, GraphRoundTrip) {
  const Graph g = parse_graph("v lone\ne 1 a b\ne 2 a b\ne 3 b b");
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices":["a"],"edges":[{"id":"x","u":"a","w":"z"}]})")),
               FormatError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices":[1]})")), FormatError);
}

TEST(Json, SemigroupRoundTrip) {
  const Host h = share(parse_graph("e 1 a v\ne 2 v b\ne 3 a b"));
  for (Kind k : {Kind::Fisg, Kind::Iisg, Kind::Tisg, Kind::Pisg}) {
    const std::optional<VertexIndex> root =
        is_rooted(k) ? std::optional<VertexIndex>(1) : std::nullopt;
    const InverseSemigroup s = build(k, h, root);
    const Json j = to_json(s);
    EXPECT_EQ(j.at("kind"), to_string(k));
    EXPECT_EQ(j.at("stats").at("elements"), s.size());
    expect_same(s, semigroup_from_json(j));
    expect_same(s, semigroup_from_json(Json::parse(j.dump())));
  }
}

TEST(Json, PartialIsoRoundTrip) {
  const Host h = share(parse_graph("e 1 a b\ne 2 a b"));
  const InverseSemigroup s = build(Kind::Fisg, h);
  for (const PartialIso& f : s.elements()) {
    EXPECT_EQ(partial_iso_from_json(to_json(f), h, Kind::Fisg, std::nullopt), f);
  }
}

TEST(Json, RejectsMalformedSemigroups) {
  const InverseSemigroup s = build(Kind::Iisg, share(graphs::complete(2)));
  const Json good = to_json(s);

  Json unknown = good;
  unknown["elements"][1]["dom"]["v"] = {"nowhere"};
  EXPECT_THROW(semigroup_from_json(unknown), FormatError);

  Json broken = good;
  for (auto& e : broken["elements"]) {
    if (e["dom"]["v"].size() == 2) e["emap"] = Json::object();
  }
  EXPECT_THROW(semigroup_from_json(broken), FormatError);

  Json rooted = good;
  rooted["root"] = "0";
  EXPECT_THROW(semigroup_from_json(rooted), FormatError);

  Json unrooted = to_json(build(Kind::Tisg, share(graphs::complete(2)), 0));
  unrooted["root"] = nullptr;
  EXPECT_THROW(semigroup_from_json(unrooted), FormatError);

  Json kind = good;
  kind["kind"] = "group";
  EXPECT_THROW(semigroup_from_json(kind), FormatError);

  Json missing = good;
  missing.erase("elements");
  EXPECT_THROW(semigroup_from_json(missing), FormatError);
}

TEST(Json, FileIo) {
  const auto dir = std::filesystem::temp_directory_path() / "isg_json_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "s.json").string();
  const InverseSemigroup s = build(Kind::Fisg, share(graphs::path(3)));
  save_json(to_json(s), path);
  expect_same(s, semigroup_from_json(load_json(path)));
  {
    std::ofstream out(dir / "bad.json");
    out << "{\"kind\": ";
  }
  EXPECT_THROW(load_json((dir / "bad.json").string()), FormatError);
  std::filesystem::remove_all(dir);
}

TEST(Json, Reports) {
  const Json v = to_json(verify_inverse_semigroup(build(Kind::Fisg, share(graphs::complete(2)))));
  EXPECT_TRUE(v.at("all_passed").get<bool>());
  EXPECT_TRUE(v.at("associativity").at("passed").get<bool>());
}

}  // namespace
}  // namespace isg
