// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_THEOREMS_HPP_
#define ISG_THEOREMS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "isg/graph.hpp"
#include "isg/semigroup.hpp"

namespace isg {

enum class Status { Pass, Fail, Skipped, ParseError };

const char* to_string(Status s) noexcept;

struct TheoremResult {
  std::string graph;
  std::string theorem;
  Status status = Status::Pass;
  std::string detail;
};

struct TheoremMatrix {
  std::vector<TheoremResult> rows;

  std::size_t count(Status s) const;
  // No failures and no parse errors.
  bool ok() const { return count(Status::Fail) == 0 && count(Status::ParseError) == 0; }
};

// Theorem rows for one graph. Caps breaches become Skipped rows; rooted
// theorems are run for every root of a connected simple graph.
std::vector<TheoremResult> check_graph(const std::string& name, const Graph& g,
                                       const Caps& caps = {});

// Runs check_graph over the files on `workers` threads; rows come back in
// input order. Unreadable or malformed files yield a ParseError row.
TheoremMatrix verify_theorems(const std::vector<std::filesystem::path>& files,
                              const Caps& caps = {}, unsigned workers = 1);

// The *.graph files of a directory, sorted by name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

}  // namespace isg

#endif  // ISG_THEOREMS_HPP_
