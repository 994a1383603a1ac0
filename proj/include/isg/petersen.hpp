// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_PETERSEN_HPP_
#define ISG_PETERSEN_HPP_

#include <string>
#include <vector>

#include "isg/subgraph.hpp"

namespace isg {

// Outer cycle o0..o4, spokes o_i - i_i, inner pentagram i_i - i_{i+2}.
Graph petersen_graph();

// Two rooted path pairs whose paths (v, u, x, y, w) close into the two
// 5-cycles through the root's edges v-u and v-w, and the component of the
// root in the intersection of their induced subgraphs.
struct PetersenDemo {
  Host host;
  VertexIndex root = 0;
  SubgraphRef first;
  SubgraphRef second;
  SubgraphRef intersection;
  // Longest common prefix of the two paths, the Pisg meet.
  std::vector<VertexIndex> common_prefix;
  bool is_tree = false;
  bool is_rooted_path = false;

  bool holds() const noexcept { return is_tree && !is_rooted_path; }
  std::string dot_first() const;
  std::string dot_second() const;
  std::string dot_intersection() const;
};

PetersenDemo petersen_demo();

}  // namespace isg

#endif  // ISG_PETERSEN_HPP_
