// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <tuple>

#include <gtest/gtest.h>

#include "isg/corpus.hpp"
#include "isg/error.hpp"
#include "isg/semigroup.hpp"
#include "oracles.hpp"

namespace isg {
namespace {

Host avb() { return share(parse_graph("e 1 a v\ne 2 v b")); }

TEST(Build, Counts) {
  const Host k2 = share(graphs::complete(2));
  EXPECT_EQ(build(Kind::Fisg, k2).size(), 9U);
  EXPECT_EQ(build(Kind::Iisg, k2).size(), 7U);

  const Host h = avb();
  const VertexIndex v = 1;
  const InverseSemigroup t = build(Kind::Tisg, h, v);
  EXPECT_EQ(t.idempotent_indices().size(), 4U);
  bool has_swap = false;
  for (const PartialIso& f : t.elements()) {
    has_swap = has_swap || (f.dom.vertices == 0b111 && f.map.vertex_map[0] == 2);
  }
  EXPECT_TRUE(has_swap);
}

TEST(Build, FisgContainsEmptyMapRootedKindsDoNot) {
  const Host h = avb();
  EXPECT_TRUE(build(Kind::Fisg, h).index_of(empty_map(h)).has_value());
  EXPECT_TRUE(build(Kind::Iisg, h).index_of(empty_map(h)).has_value());
  for (Kind k : {Kind::Tisg, Kind::Pisg}) {
    const InverseSemigroup s = build(k, h, 1);
    for (const PartialIso& f : s.elements()) EXPECT_FALSE(f.is_empty());
  }
}

TEST(Build, ElementCountsMatchPermutationOracle) {
  for (const Graph& g : multigraphs_up_to(3, 3)) {
    const Host h = share(g);
    const auto og = oracle::from(g);
    EXPECT_EQ(build(Kind::Fisg, h).size(), oracle::fisg_size(og)) << to_text(g);
    EXPECT_EQ(build(Kind::Iisg, h).size(), oracle::iisg_size(og)) << to_text(g);
  }
  for (const RootedGraph& rg : rooted_connected_simple_up_to(4)) {
    const Host h = share(rg.graph);
    const auto og = oracle::from(rg.graph);
    const int v = static_cast<int>(rg.root);
    EXPECT_EQ(build(Kind::Tisg, h, rg.root).size(), oracle::tisg_size(og, v));
    EXPECT_EQ(build(Kind::Pisg, h, rg.root).size(), oracle::pisg_size(og, v));
  }
}

TEST(Build, ParallelPairingsAreDistinctElements) {
  // Two parallel edges: the whole graph has 2 vertex maps x 2 pairings.
  const Host h = share(parse_graph("e 1 a b\ne 2 a b"));
  EXPECT_EQ(build(Kind::Fisg, h).size(), oracle::fisg_size(oracle::from(*h)));
  EXPECT_EQ(automorphism_subgroup(build(Kind::Fisg, h)).size(), 4U);
}

TEST(Build, ContainsIdentityOfEveryFlavorSubgraph) {
  for (const RootedGraph& rg : rooted_connected_simple_up_to(3)) {
    const Host h = share(rg.graph);
    for (Kind k : {Kind::Fisg, Kind::Iisg, Kind::Tisg, Kind::Pisg}) {
      const std::optional<VertexIndex> root =
          is_rooted(k) ? std::optional<VertexIndex>(rg.root) : std::nullopt;
      const InverseSemigroup s = build(k, h, root);
      for (const SubgraphRef& sub : flavor_subgraphs(k, h, root, 1U << 20)) {
        EXPECT_TRUE(s.index_of(identity_on(sub)).has_value()) << describe(sub);
      }
    }
  }
}

TEST(Build, Deterministic) {
  const Host h = share(graphs::cycle(3));
  const InverseSemigroup a = build(Kind::Fisg, h);
  const InverseSemigroup b = build(Kind::Fisg, share(graphs::cycle(3)));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(oracle::same(oracle::from(a.element(i)), b.element(i)));
  }
}

TEST(Build, Errors) {
  const Host h = avb();
  EXPECT_THROW(build(Kind::Tisg, h), UsageError);
  EXPECT_THROW(build(Kind::Fisg, h, 0), UsageError);
  EXPECT_THROW(build(Kind::Pisg, h, 9), DomainError);
  Caps caps;
  caps.max_elements = 10;
  EXPECT_THROW(build(Kind::Fisg, share(graphs::complete(3)), {}, caps), ResourceLimitError);
}

TEST(Build, DuplicateElementsRejected) {
  const Host h = share(graphs::complete(1));
  EXPECT_THROW(InverseSemigroup(Kind::Fisg, h, {}, {empty_map(h), empty_map(h)}), FormatError);
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_inverse_semigroup(build(Kind::Fisg, share(graphs::complete(2)))).all_passed());
  const VerifyReport r = verify_inverse_semigroup(build(Kind::Pisg, avb(), 1));
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.associativity.sampled);
  EXPECT_EQ(r.associativity.checked, 125U);
}

TEST(Verify, CorruptedTableFailsAssociativityWithWitness) {
  const CompositionTable good = build(Kind::Fisg, share(graphs::complete(2))).table();
  ASSERT_TRUE(verify_table(good).all_passed());
  std::mt19937_64 rng(3);
  int failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    CompositionTable bad = good;
    const std::size_t i = rng() % bad.size();
    const std::size_t j = rng() % bad.size();
    bad.set(i, j, static_cast<std::uint32_t>((bad(i, j) + 1 + rng() % (bad.size() - 1)) % bad.size()));
    const VerifyReport r = verify_table(bad);
    if (r.associativity.passed) continue;
    ++failures;
    ASSERT_EQ(r.associativity.witness.size(), 3U);
    const auto [a, b, c] = std::tuple(r.associativity.witness[0], r.associativity.witness[1],
                                      r.associativity.witness[2]);
    EXPECT_NE(bad(bad(a, b), c), bad(a, bad(b, c)));
  }
  EXPECT_GT(failures, 0);
}

TEST(Verify, MissingEntryFailsClosure) {
  CompositionTable t = build(Kind::Iisg, share(graphs::complete(1))).table();
  t.set(1, 1, CompositionTable::kMissing);
  const VerifyReport r = verify_table(t);
  EXPECT_FALSE(r.closure.passed);
  EXPECT_EQ(r.closure.witness, (std::vector<std::size_t>{1, 1}));
}

TEST(Verify, NonInverseSemigroupIsCaught) {
  // Left-zero band on two elements: idempotents commute fails.
  CompositionTable t(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) t.set(i, j, static_cast<std::uint32_t>(i));
  }
  const VerifyReport r = verify_table(t);
  EXPECT_TRUE(r.associativity.passed);
  EXPECT_FALSE(r.idempotents_commute.passed);
}

TEST(Verify, SampledAboveTripleCap) {
  Caps caps;
  caps.max_verify_triples = 100;
  caps.sample_triples = 500;
  const VerifyReport r = verify_inverse_semigroup(build(Kind::Fisg, share(graphs::path(3))), caps);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.associativity.sampled);
  EXPECT_EQ(r.associativity.checked, 500U);
}

TEST(Verify, AxiomsHoldOnSmallCorpus) {
  for (const Graph& g : multigraphs_up_to(2, 3)) {
    for (Kind k : {Kind::Fisg, Kind::Iisg}) {
      EXPECT_TRUE(verify_inverse_semigroup(build(k, share(g))).all_passed()) << to_text(g);
    }
  }
}

TEST(Idempotents, Counts) {
  EXPECT_EQ(idempotents(build(Kind::Fisg, share(graphs::complete(2)))).size(), 5U);
  EXPECT_EQ(idempotents(build(Kind::Iisg, share(graphs::path(3)))).size(), 8U);
  EXPECT_EQ(idempotents(build(Kind::Tisg, avb(), 1)).size(), 4U);
}

TEST(Idempotents, CountProperties) {
  for (const Graph& g : multigraphs_up_to(3, 3)) {
    const Host h = share(g);
    const InverseSemigroup f = build(Kind::Fisg, h);
    EXPECT_EQ(f.idempotent_indices().size(), oracle::all_subgraphs(oracle::from(g)).size());
    EXPECT_EQ(idempotents(f).size(), f.idempotent_indices().size());
  }
  for (const Graph& g : simple_graphs_up_to(4)) {
    EXPECT_EQ(build(Kind::Iisg, share(g)).idempotent_indices().size(),
              std::size_t{1} << g.vertex_count());
  }
}

TEST(AutomorphismSubgroup, Counts) {
  EXPECT_EQ(automorphism_subgroup(build(Kind::Fisg, share(graphs::complete(2)))).size(), 2U);
  EXPECT_EQ(automorphism_subgroup(build(Kind::Fisg, share(graphs::complete(1)))).size(), 1U);
  EXPECT_EQ(automorphism_subgroup(build(Kind::Fisg, share(graphs::path(3)))).size(), 2U);
  EXPECT_THROW(automorphism_subgroup(build(Kind::Tisg, avb(), 1)), UnsupportedError);
}

TEST(Closure, RandomPairsAreElements) {
  const InverseSemigroup s = build(Kind::Fisg, share(graphs::star(3)));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t i = rng() % s.size();
    const std::size_t j = rng() % s.size();
    EXPECT_TRUE(s.index_of(s.compose(s.element(i), s.element(j))).has_value());
  }
}

TEST(CompositionTable, LazyAndCachedAgree) {
  Caps small;
  small.max_table_elements = 5;
  const Host h = share(graphs::path(3));
  const InverseSemigroup lazy = build(Kind::Iisg, h, {}, small);
  const InverseSemigroup cached = build(Kind::Iisg, h);
  EXPECT_FALSE(lazy.has_table());
  ASSERT_TRUE(cached.has_table());
  EXPECT_EQ(composition_table(lazy), cached.table());
  EXPECT_THROW(composition_table(lazy, 3), ResourceLimitError);
}

}  // namespace
}  // namespace isg
