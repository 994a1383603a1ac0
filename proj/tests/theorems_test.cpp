// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "isg/corpus.hpp"
#include "isg/theorems.hpp"

namespace isg {
namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

TEST(CheckGraph, K2PassesEveryRow) {
  const auto rows = check_graph("k2", graphs::complete(2));
  ASSERT_FALSE(rows.empty());
  for (const TheoremResult& r : rows) {
    EXPECT_EQ(r.status, Status::Pass) << r.theorem << ": " << r.detail;
    EXPECT_EQ(r.graph, "k2");
  }
}

TEST(CheckGraph, SmallCorpusHasNoFailures) {
  for (const Graph& g : multigraphs_up_to(2, 2)) {
    for (const TheoremResult& r : check_graph("g", g)) {
      EXPECT_NE(r.status, Status::Fail) << to_text(g) << r.theorem << ": " << r.detail;
    }
  }
}

TEST(VerifyTheorems, EmptyCorpus) {
  const TheoremMatrix m = verify_theorems({});
  EXPECT_TRUE(m.rows.empty());
  EXPECT_TRUE(m.ok());
}

TEST(VerifyTheorems, ParseErrorsAndOrder) {
  const TempDir dir("isg_theorems_test");
  write(dir.path / "a_k1.graph", "v x\n");
  write(dir.path / "b_bad.graph", "e 1 x\n");
  write(dir.path / "c_k2.graph", "e 1 x y\n");
  write(dir.path / "notes.txt", "ignored");
  const auto files = corpus_files(dir.path);
  ASSERT_EQ(files.size(), 3U);
  for (unsigned workers : {1U, 3U}) {
    const TheoremMatrix m = verify_theorems(files, {}, workers);
    EXPECT_FALSE(m.ok());
    EXPECT_EQ(m.count(Status::ParseError), 1U);
    EXPECT_EQ(m.count(Status::Fail), 0U);
    ASSERT_FALSE(m.rows.empty());
    EXPECT_EQ(m.rows.front().graph, "a_k1");
    EXPECT_EQ(m.rows.back().graph, "c_k2");
    std::vector<std::string> order;
    for (const TheoremResult& r : m.rows) {
      if (order.empty() || order.back() != r.graph) order.push_back(r.graph);
    }
    EXPECT_EQ(order, (std::vector<std::string>{"a_k1", "b_bad", "c_k2"}));
  }
}

}  // namespace
}  // namespace isg
