// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/graph.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "isg/error.hpp"

namespace isg {

VertexIndex Graph::add_vertex(std::string id) {
  if (vertex_ids_.size() >= kMaxVertices) {
    throw ResourceLimitError("graph exceeds " + std::to_string(kMaxVertices) +
                             " vertices");
  }
  if (vertex_lookup_.contains(id)) {
    throw FormatError("duplicate vertex id '" + id + "'");
  }
  const auto v = static_cast<VertexIndex>(vertex_ids_.size());
  vertex_lookup_.emplace(id, v);
  vertex_ids_.push_back(std::move(id));
  incident_.push_back(0);
  return v;
}

EdgeIndex Graph::add_edge(std::string id, VertexIndex u, VertexIndex w) {
  if (edges_.size() >= kMaxEdges) {
    throw ResourceLimitError("graph exceeds " + std::to_string(kMaxEdges) +
                             " edges");
  }
  if (u >= vertex_count() || w >= vertex_count()) {
    throw FormatError("edge '" + id + "' has an endpoint outside the graph");
  }
  if (edge_lookup_.contains(id)) {
    throw FormatError("duplicate edge id '" + id + "'");
  }
  const auto e = static_cast<EdgeIndex>(edges_.size());
  edge_lookup_.emplace(id, e);
  edges_.push_back(Edge{std::move(id), u, w});
  incident_[u] |= bit(e);
  incident_[w] |= bit(e);
  return e;
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexMask Graph::all_vertices() const noexcept {
  return vertex_count() == 64 ? ~VertexMask{0} : bit(vertex_count()) - 1;
}

EdgeMask Graph::all_edges() const noexcept {
  return edge_count() == 64 ? ~EdgeMask{0} : bit(edge_count()) - 1;
}

EdgeMask Graph::edges_within(VertexMask vs) const noexcept {
  EdgeMask out = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (has_bit(vs, edges_[e].u) && has_bit(vs, edges_[e].w)) out |= bit(e);
  }
  return out;
}

VertexMask Graph::neighbours(VertexIndex v, EdgeMask es) const {
  VertexMask out = 0;
  for_each_bit(incident_.at(v) & es,
               [&](std::size_t e) { out |= bit(edges_[e].other(v)); });
  return out;
}

std::size_t Graph::degree(VertexIndex v) const {
  std::size_t d = 0;
  for_each_bit(incident_.at(v), [&](std::size_t e) {
    d += edges_[e].is_loop() ? 2 : 1;
  });
  return d;
}

std::size_t Graph::multiplicity(VertexIndex u, VertexIndex w) const {
  std::size_t m = 0;
  for_each_bit(incident_.at(u) & incident_.at(w), [&](std::size_t e) {
    const Edge& ed = edges_[e];
    if ((ed.u == u && ed.w == w) || (ed.u == w && ed.w == u)) ++m;
  });
  return m;
}

bool Graph::has_loops() const noexcept {
  for (const Edge& e : edges_) {
    if (e.is_loop()) return true;
  }
  return false;
}

bool Graph::has_parallel_edges() const noexcept {
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.u, e.w);
    if (!seen.insert(key).second) return true;
  }
  return false;
}

bool Graph::operator==(const Graph& other) const {
  return vertex_ids_ == other.vertex_ids_ && edges_ == other.edges_;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  std::unordered_set<std::string> declared;
  auto vertex = [&](std::string_view id) {
    if (auto v = g.find_vertex(id)) return *v;
    return g.add_vertex(std::string(id));
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    try {
      if (tok[0] == "v") {
        if (tok.size() != 2) throw ParseError(line_no, "expected 'v <id>'");
        std::string id(tok[1]);
        if (!declared.insert(id).second) {
          throw FormatError("line " + std::to_string(line_no) +
                            ": duplicate vertex id '" + id + "'");
        }
        vertex(id);
      } else if (tok[0] == "e") {
        if (tok.size() != 4) {
          throw ParseError(line_no, "expected 'e <eid> <u> <w>'");
        }
        const VertexIndex u = vertex(tok[2]);
        const VertexIndex w = vertex(tok[3]);
        if (g.find_edge(tok[1])) {
          throw FormatError("line " + std::to_string(line_no) +
                            ": duplicate edge id '" + std::string(tok[1]) +
                            "'");
        }
        g.add_edge(std::string(tok[1]), u, w);
      } else {
        throw ParseError(line_no,
                         "unknown directive '" + std::string(tok[0]) + "'");
      }
    } catch (const ResourceLimitError& e) {
      throw ResourceLimitError("line " + std::to_string(line_no) + ": " +
                               e.what());
    }
    if (end == text.size()) break;
  }
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_graph(text);
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  for (const auto& id : g.vertex_ids()) out << "v " << id << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.id << ' ' << g.vertex_id(e.u) << ' ' << g.vertex_id(e.w)
        << '\n';
  }
  return out.str();
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const Graph& g, std::string_view name,
                   VertexMask highlight_vertices, EdgeMask highlight_edges) {
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << dot_quote(g.vertex_id(static_cast<VertexIndex>(v)));
    if (has_bit(highlight_vertices, v)) {
      out << " [color=red, penwidth=2]";
    }
    out << ";\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
    out << "  " << dot_quote(g.vertex_id(ed.u)) << " -- "
        << dot_quote(g.vertex_id(ed.w)) << " [label=" << dot_quote(ed.id);
    if (has_bit(highlight_edges, e)) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Graph complement(const Graph& g) {
  if (!g.is_simple()) {
    throw DomainError("complement requires a simple graph");
  }
  Graph out;
  for (const auto& id : g.vertex_ids()) out.add_vertex(id);
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex w = u + 1; w < n; ++w) {
      if (g.multiplicity(u, w) == 0) {
        out.add_edge(g.vertex_id(u) + "~" + g.vertex_id(w), u, w);
      }
    }
  }
  return out;
}

namespace graphs {

namespace {

std::string letter(std::size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return s;
}

Graph with_vertices(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(letter(i));
  return g;
}

void add(Graph& g, VertexIndex u, VertexIndex w) {
  g.add_edge(std::to_string(g.edge_count() + 1), u, w);
}

}  // namespace

Graph empty() { return Graph{}; }

Graph complete(std::size_t n) {
  Graph g = with_vertices(n);
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex w = u + 1; w < n; ++w) add(g, u, w);
  }
  return g;
}

Graph edgeless(std::size_t n) { return with_vertices(n); }

Graph path(std::size_t n) {
  Graph g = with_vertices(n);
  for (VertexIndex u = 0; u + 1 < n; ++u) add(g, u, u + 1);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) add(g, static_cast<VertexIndex>(n - 1), 0);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g = with_vertices(leaves + 1);
  for (VertexIndex w = 1; w <= leaves; ++w) add(g, 0, w);
  return g;
}

Graph loop_vertex() {
  Graph g = with_vertices(1);
  add(g, 0, 0);
  return g;
}

}  // namespace graphs

}  // namespace isg
