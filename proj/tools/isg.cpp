// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit status: 0 success, 1 a check failed,
// 2 usage or input error, 3 a resource cap was hit.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "isg/corpus.hpp"
#include "isg/error.hpp"
#include "isg/ideals.hpp"
#include "isg/json_io.hpp"
#include "isg/lattice.hpp"
#include "isg/petersen.hpp"
#include "isg/reconstruction.hpp"
#include "isg/theorems.hpp"

namespace {

using namespace isg;

struct Globals {
  std::size_t caps_elements = Caps{}.max_elements;
  std::uint64_t seed = 0;
  std::string json_path;
  std::string dot_path;

  Caps caps() const {
    Caps c;
    c.max_elements = caps_elements;
    c.seed = seed;
    return c;
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void emit_json(const Globals& g, const Json& j) {
  if (!g.json_path.empty()) save_json(j, g.json_path);
}

std::optional<VertexIndex> resolve_root(const Graph& g, const std::string& id) {
  if (id.empty()) return std::nullopt;
  const auto v = g.find_vertex(id);
  if (!v) throw UsageError("root '" + id + "' is not a vertex of the graph");
  return v;
}

int cmd_build(const Globals& gl, const std::string& kind_name, const std::string& graph_path,
              const std::string& root_id, const std::string& out_path) {
  const Kind kind = parse_kind(kind_name);
  const Host host = share(load_graph(graph_path));
  const InverseSemigroup s = build(kind, host, resolve_root(*host, root_id), gl.caps());
  std::cout << to_string(kind) << ": " << s.size() << " elements, "
            << s.idempotent_indices().size() << " idempotents\n";
  const Json j = to_json(s);
  if (!out_path.empty()) save_json(j, out_path);
  emit_json(gl, j);
  if (!gl.dot_path.empty()) write_text(gl.dot_path, to_dot(*host, "host"));
  return 0;
}

InverseSemigroup load_semigroup(const Globals& gl, const std::string& path) {
  return semigroup_from_json(load_json(path), gl.caps());
}

int cmd_verify(const Globals& gl, const std::string& path) {
  const InverseSemigroup s = load_semigroup(gl, path);
  const VerifyReport r = verify_inverse_semigroup(s, gl.caps());
  for (const AxiomCheck* c : r.checks()) {
    std::cout << (c->passed ? "PASS " : "FAIL ") << c->name << " (" << c->checked
              << (c->sampled ? " sampled" : "") << ")";
    if (!c->passed) {
      std::cout << " witness";
      for (std::size_t w : c->witness) std::cout << ' ' << w;
      std::cout << ": " << c->detail;
    }
    std::cout << '\n';
  }
  emit_json(gl, to_json(r));
  return r.all_passed() ? 0 : 1;
}

int cmd_lattice(const Globals& gl, const std::string& path, const std::string& report_path) {
  const InverseSemigroup s = load_semigroup(gl, path);
  const IdempotentPoset ip = idempotent_poset(s);
  const LatticeReport r = analyze(ip.poset);
  std::cout << ip.poset.size() << " idempotents\n";
  for (auto [name, v] : r.verdicts()) {
    std::cout << "  " << name << ": " << to_string(v->value);
    if (!v->detail.empty()) std::cout << " (" << v->detail << ")";
    std::cout << '\n';
  }
  const Verdict order = check_subgraph_order_isomorphism(s, ip);
  std::cout << "  order isomorphic to subgraph inclusion: " << to_string(order.value) << '\n';
  Json j = to_json(r);
  j["subgraph_order_isomorphism"] = to_string(order.value);
  if (!report_path.empty()) save_json(j, report_path);
  emit_json(gl, j);
  if (!gl.dot_path.empty()) write_text(gl.dot_path, hasse_dot(ip.poset));
  return 0;
}

std::string describe_basis(const IdealSpace& space, const std::vector<std::size_t>& basis) {
  std::string out = "{";
  for (std::size_t c : basis) {
    if (out.size() > 1) out += ", ";
    out += space.key(c) + " " + describe(space.representative(c));
  }
  return out + "}";
}

int cmd_ideals(const Globals& gl, const std::string& path, std::optional<std::size_t> principal,
               bool enumerate, bool report) {
  const InverseSemigroup s = load_semigroup(gl, path);
  const Caps caps = gl.caps();
  const IdealSpace space(s, caps);
  Json j = Json::object();
  int status = 0;
  if (principal) {
    if (*principal >= s.size()) throw UsageError("element index out of range");
    const Ideal p = principal_ideal(space, *principal);
    const bool same = p.members == sandwich_ideal(s, *principal);
    std::cout << "principal ideal of " << *principal << ": " << p.size() << " elements, basis "
              << describe_basis(space, p.basis) << "\n  equals SaS: " << (same ? "yes" : "no")
              << '\n';
    j["principal"] = {{"element", *principal}, {"size", p.size()}, {"equals_sandwich", same}};
    if (!same) status = 1;
  }
  if (enumerate) {
    const std::vector<Ideal> ideals = enumerate_ideals(space, true, caps.max_ideals);
    Json list = Json::array();
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      std::cout << "ideal " << k << ": " << ideals[k].size() << " elements, basis "
                << describe_basis(space, ideals[k].basis) << '\n';
      Json basis = Json::array();
      for (std::size_t c : ideals[k].basis) basis.push_back(space.key(c));
      list.push_back({{"size", ideals[k].size()}, {"basis", basis}});
    }
    j["ideals"] = list;
  }
  if (report || (!principal && !enumerate)) {
    const IdealLattice lat = ideal_lattice(space, true, caps);
    std::cout << lat.ideals.size() << " ideals\n";
    for (auto [name, v] : lat.report.verdicts()) {
      std::cout << "  " << name << ": " << to_string(v->value) << '\n';
    }
    j["report"] = to_json(lat.report);
  }
  emit_json(gl, j);
  return status;
}

int cmd_recover(const Globals& gl, const std::string& path, const std::string& out_path) {
  const InverseSemigroup s = load_semigroup(gl, path);
  const Graph g = recover_graph(forget(s, gl.seed));
  const bool iso = are_isomorphic(g, *s.host());
  std::cout << "recovered " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges; isomorphic to host: " << (iso ? "yes" : "no") << '\n';
  if (!out_path.empty()) write_text(out_path, to_text(g));
  emit_json(gl, {{"graph", to_json(g)}, {"isomorphic_to_host", iso}});
  return iso ? 0 : 1;
}

int cmd_characterize(const Globals& gl, const std::vector<std::string>& graphs) {
  if (graphs.size() != 2) throw UsageError("characterize needs exactly two --graph options");
  const Graph a = load_graph(graphs[0]);
  const Graph b = load_graph(graphs[1]);
  const CharacterizationVerdict v = verify_characterization(a, b, gl.seed, gl.caps());
  std::cout << "graphs isomorphic: " << (v.graphs_isomorphic ? "yes" : "no")
            << "\nrecovered graphs isomorphic: " << (v.recovered_isomorphic ? "yes" : "no")
            << "\nround trips: " << (v.round_trip_g && v.round_trip_h ? "yes" : "no")
            << "\nverdict: " << (v.holds() ? "PASS" : "FAIL") << '\n';
  emit_json(gl, {{"graphs_isomorphic", v.graphs_isomorphic},
                 {"recovered_isomorphic", v.recovered_isomorphic},
                 {"round_trip", v.round_trip_g && v.round_trip_h},
                 {"holds", v.holds()}});
  return v.holds() ? 0 : 1;
}

int cmd_complement(const Globals& gl, const std::string& path) {
  const Graph g = load_graph(path);
  const SemigroupMap m = iisg_complement_functor(g, gl.caps());
  std::cout << "Iisg(G) -> Iisg(complement G): " << m.forward.size() << " elements, bijective "
            << (m.bijective ? "yes" : "no") << ", homomorphism "
            << (m.homomorphism ? "yes" : "no") << '\n';
  emit_json(gl, {{"elements", m.forward.size()},
                 {"bijective", m.bijective},
                 {"homomorphism", m.homomorphism}});
  return m.holds() ? 0 : 1;
}

int cmd_verify_theorems(const Globals& gl, const std::string& dir, unsigned workers) {
  const TheoremMatrix m = verify_theorems(corpus_files(dir), gl.caps(), workers);
  for (const TheoremResult& r : m.rows) {
    std::cout << to_string(r.status) << '\t' << r.graph << '\t' << r.theorem;
    if (!r.detail.empty()) std::cout << '\t' << r.detail;
    std::cout << '\n';
  }
  std::cout << "summary: " << m.count(Status::Pass) << " pass, " << m.count(Status::Fail)
            << " fail, " << m.count(Status::Skipped) << " skipped, "
            << m.count(Status::ParseError) << " parse errors\n";
  emit_json(gl, to_json(m));
  return m.ok() ? 0 : 1;
}

int cmd_petersen(const Globals& gl) {
  const PetersenDemo d = petersen_demo();
  std::cout << "first cycle path:  " << describe(d.first) << '\n'
            << "second cycle path: " << describe(d.second) << '\n'
            << "intersection at root: " << describe(d.intersection) << '\n'
            << "tree: " << (d.is_tree ? "yes" : "no")
            << "\nroot-anchored path: " << (d.is_rooted_path ? "yes" : "no")
            << "\ncommon prefix length: " << d.common_prefix.size() << '\n';
  if (!gl.dot_path.empty()) {
    write_text(gl.dot_path + ".first.dot", d.dot_first());
    write_text(gl.dot_path + ".second.dot", d.dot_second());
    write_text(gl.dot_path + ".intersection.dot", d.dot_intersection());
  }
  emit_json(gl, {{"first", to_json(d.first)},
                 {"second", to_json(d.second)},
                 {"intersection", to_json(d.intersection)},
                 {"is_tree", d.is_tree},
                 {"is_rooted_path", d.is_rooted_path}});
  return d.holds() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse semigroups of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--caps-elements", gl.caps_elements, "Maximum semigroup size")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Seed for shuffles and sampling");
  app.add_option("--json", gl.json_path, "Write machine-readable output here");
  app.add_option("--dot", gl.dot_path, "Write Graphviz output here");

  std::string kind, graph, root, out, semigroup, report;
  std::vector<std::string> graph_pair;
  std::optional<std::size_t> principal;
  bool enumerate = false;
  bool ideal_report = false;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());

  auto* build_cmd = app.add_subcommand("build", "Build a semigroup from a graph");
  build_cmd->add_option("--kind", kind, "fisg, iisg, tisg or pisg")->required();
  build_cmd->add_option("--graph", graph, "Graph file")->required();
  build_cmd->add_option("--root", root, "Root vertex id (tisg, pisg)");
  build_cmd->add_option("--out", out, "Semigroup JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Check the inverse semigroup axioms");
  verify_cmd->add_option("semigroup", semigroup, "Semigroup JSON")->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "Analyze the idempotent poset");
  lattice_cmd->add_option("semigroup", semigroup, "Semigroup JSON")->required();
  lattice_cmd->add_option("--report", report, "Lattice report JSON output");

  auto* ideals_cmd = app.add_subcommand("ideals", "Principal ideals and the ideal lattice");
  ideals_cmd->add_option("semigroup", semigroup, "Semigroup JSON")->required();
  ideals_cmd->add_option("--principal", principal, "Element index");
  ideals_cmd->add_flag("--enumerate", enumerate, "List every ideal");
  ideals_cmd->add_flag("--report", ideal_report, "Ideal lattice verdicts");

  auto* recover_cmd = app.add_subcommand("recover", "Rebuild the host from a Fisg table");
  recover_cmd->add_option("semigroup", semigroup, "Semigroup JSON")->required();
  recover_cmd->add_option("--out", out, "Recovered graph file");

  auto* char_cmd = app.add_subcommand("characterize", "Fisg(G) ~ Fisg(H) iff G ~ H");
  char_cmd->add_option("--graph", graph_pair, "Graph file (twice)")->required();

  auto* comp_cmd = app.add_subcommand("complement-functor", "Iisg(G) ~ Iisg(complement G)");
  comp_cmd->add_option("--graph", graph, "Simple graph file")->required();

  auto* theorems_cmd = app.add_subcommand("verify-theorems", "Run the theorem matrix");
  theorems_cmd->add_option("corpus", graph, "Directory of .graph files")->required();
  theorems_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* demo_cmd = app.add_subcommand("demo", "Worked examples");
  demo_cmd->require_subcommand(1);
  auto* petersen_cmd = demo_cmd->add_subcommand("petersen", "Rooted cycles of the Petersen graph");

  auto* corpus_cmd = app.add_subcommand("gen-corpus", "Write the bundled graph corpus");
  corpus_cmd->add_option("dir", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*build_cmd) return cmd_build(gl, kind, graph, root, out);
    if (*verify_cmd) return cmd_verify(gl, semigroup);
    if (*lattice_cmd) return cmd_lattice(gl, semigroup, report);
    if (*ideals_cmd) return cmd_ideals(gl, semigroup, principal, enumerate, ideal_report);
    if (*recover_cmd) return cmd_recover(gl, semigroup, out);
    if (*char_cmd) return cmd_characterize(gl, graph_pair);
    if (*comp_cmd) return cmd_complement(gl, graph);
    if (*theorems_cmd) return cmd_verify_theorems(gl, graph, workers);
    if (*petersen_cmd) return cmd_petersen(gl);
    if (*corpus_cmd) {
      const auto files = write_corpus(out);
      std::cout << "wrote " << files.size() << " graphs to " << out << '\n';
      return 0;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "isg: resource limit: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "isg: parse error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "isg: format error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "isg: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "isg: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
