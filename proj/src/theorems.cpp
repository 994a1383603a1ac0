// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "isg/error.hpp"
#include "isg/ideals.hpp"
#include "isg/lattice.hpp"
#include "isg/reconstruction.hpp"

namespace isg {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
    case Status::ParseError:
      return "parse-error";
  }
  return "?";
}

std::size_t TheoremMatrix::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [s](const TheoremResult& r) { return r.status == s; }));
}

namespace {

// A check returns nullopt on success or the reason it failed.
using Check = std::function<std::optional<std::string>()>;

class Runner {
 public:
  explicit Runner(std::string graph) : graph_(std::move(graph)) {}

  void run(const std::string& theorem, const Check& check) {
    TheoremResult r{graph_, theorem, Status::Pass, {}};
    try {
      if (auto why = check()) {
        r.status = Status::Fail;
        r.detail = *why;
      }
    } catch (const ResourceLimitError& e) {
      r.status = Status::Skipped;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.detail = e.what();
    }
    rows_.push_back(std::move(r));
  }

  void skip(const std::string& theorem, std::string why) {
    rows_.push_back({graph_, theorem, Status::Skipped, std::move(why)});
  }

  std::vector<TheoremResult> take() { return std::move(rows_); }

 private:
  std::string graph_;
  std::vector<TheoremResult> rows_;
};

std::optional<std::string> first_failure(const VerifyReport& r) {
  for (const AxiomCheck* c : r.checks()) {
    if (!c->passed) return c->name + ": " + c->detail;
  }
  return std::nullopt;
}

std::optional<std::string> axioms(const InverseSemigroup& s, const Caps& caps) {
  if (s.size() > caps.max_table_elements) {
    throw ResourceLimitError(std::to_string(s.size()) +
                             " elements exceed the table cap for exhaustive axioms");
  }
  return first_failure(verify_inverse_semigroup(s, caps));
}

std::optional<std::string> verdict_is(const char* name, const Verdict& v, Truth want) {
  if (v.value == want) return std::nullopt;
  return std::string(name) + " is " + to_string(v.value) + ", expected " + to_string(want) +
         (v.detail.empty() ? "" : " (" + v.detail + ")");
}

// The shared ideal-theory checks for one semigroup.
std::optional<std::string> ideal_checks(const InverseSemigroup& s, bool expect_non_atomic,
                                        const Caps& caps) {
  if (s.size() > caps.max_ideal_elements) {
    throw ResourceLimitError(std::to_string(s.size()) +
                             " elements exceed the ideal-check cap");
  }
  const IdealSpace space(s, caps);
  for (bool include_empty : {true, false}) {
    const IdealLattice lat = ideal_lattice(space, include_empty, caps);
    if (auto f = verdict_is("distributive", lat.report.distributive, Truth::True)) return f;
    if (auto f = verdict_is("semimodular", lat.report.semimodular, Truth::True)) return f;
    if (expect_non_atomic) {
      if (auto f = verdict_is("atomic", lat.report.atomic, Truth::False)) return f;
    }
  }
  const std::vector<Ideal> ideals = enumerate_ideals(space, true, caps.max_ideals);
  for (const Ideal& ideal : ideals) {
    if (!is_ideal(s, ideal.members).ok) return std::string("enumerated set is not an ideal");
    const Ideal again = make_ideal(space, ideal.members);
    if (again.basis != ideal.basis) return std::string("antichain round trip failed");
    const auto canonical = extract_basis(space, ideal);
    if (!bases_isomorphic(s.kind(), canonical, greedy_basis(s, ideal.members))) {
      return std::string("bucketed and greedy bases differ");
    }
    if (ideal.members.any()) {
      const ReesQuotient q = rees_quotient(s, ideal, caps);
      if (!q.zero_absorbing) return std::string("Rees zero is not absorbing");
      if (!q.axioms.associativity.passed) return std::string("Rees quotient not associative");
    }
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Ideal p = principal_ideal(space, a);
    if (p.members != sandwich_ideal(s, a)) {
      return "principal ideal of element " + std::to_string(a) + " differs from SaS";
    }
    boost::dynamic_bitset<> meet(s.size());
    meet.set();
    for (const Ideal& ideal : ideals) {
      if (ideal.contains(a)) meet &= ideal.members;
    }
    if (meet != p.members) {
      return "principal ideal of element " + std::to_string(a) +
             " differs from the intersection of ideals containing it";
    }
  }
  return std::nullopt;
}

std::optional<std::string> aut_basis(const InverseSemigroup& s, const Caps& caps) {
  const IdealSpace space(s, caps);
  const Ideal ideal = aut_complement_ideal(space);
  if (!is_ideal(s, ideal.members).ok) return std::string("S - Aut is not an ideal");
  const auto expected = distinct_classes(s.kind(), deleted_subgraphs(s));
  if (!bases_isomorphic(s.kind(), extract_basis(space, ideal), expected)) {
    return std::string("basis differs from the deleted-subgraph classes");
  }
  return std::nullopt;
}

std::optional<std::string> tisg_lattice(const InverseSemigroup& s) {
  const IdempotentPoset ip = idempotent_poset(s);
  if (auto f = check_subgraph_order_isomorphism(s, ip); !f.holds()) return f.detail;
  const LatticeReport r = analyze(ip.poset);
  for (auto [name, v] : {std::pair{"lattice", &r.lattice}, std::pair{"bounded", &r.bounded},
                         std::pair{"graded", &r.graded}}) {
    if (auto f = verdict_is(name, *v, Truth::True)) return f;
  }
  for (std::size_t a = 0; a < ip.poset.size(); ++a) {
    for (std::size_t b = 0; b < ip.poset.size(); ++b) {
      const SubgraphRef& ha = s.element(ip.indices[a]).dom;
      const SubgraphRef& hb = s.element(ip.indices[b]).dom;
      const auto& m = s.element(ip.indices[*ip.poset.meet(a, b)]).dom;
      const auto& j = s.element(ip.indices[*ip.poset.join(a, b)]).dom;
      if (!tisg_meet(ha, hb).same_subgraph(m)) return std::string("tisg_meet disagrees");
      if (!tisg_join(ha, hb).same_subgraph(j)) return std::string("tisg_join disagrees");
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<TheoremResult> check_graph(const std::string& name, const Graph& g,
                                       const Caps& caps) {
  Runner run(name);
  const Host host = share(g);
  const bool connected = !g.empty() && is_connected(g, g.all_vertices(), g.all_edges());

  std::optional<InverseSemigroup> fisg;
  try {
    fisg = build(Kind::Fisg, host, {}, caps);
  } catch (const ResourceLimitError& e) {
    for (const char* t : {"fisg.axioms", "fisg.idempotents", "fisg.ideals",
                          "fisg.aut-basis", "fisg.recover"}) {
      run.skip(t, e.what());
    }
  }
  if (fisg) {
    const InverseSemigroup& s = *fisg;
    run.run("fisg.axioms", [&] { return axioms(s, caps); });
    run.run("fisg.idempotents", [&]() -> std::optional<std::string> {
      if (s.idempotent_indices().size() != count_subgraphs(g)) {
        return std::string("idempotent count differs from the subgraph count");
      }
      const IdempotentPoset ip = idempotent_poset(s);
      if (auto v = check_subgraph_order_isomorphism(s, ip); !v.holds()) return v.detail;
      return verdict_is("bi_heyting", analyze(ip.poset).bi_heyting, Truth::True);
    });
    // The non-atomicity claim excludes K1, and the empty graph has a
    // one-element ideal lattice.
    const bool trivial = g.vertex_count() <= 1 && g.edge_count() == 0;
    run.run("fisg.ideals", [&] { return ideal_checks(s, !trivial, caps); });
    if (connected && g.edge_count() > 0) {
      run.run("fisg.aut-basis", [&] { return aut_basis(s, caps); });
    }
    run.run("fisg.recover", [&]() -> std::optional<std::string> {
      const Graph r = recover_graph(forget(s, caps.seed));
      if (!are_isomorphic(r, g)) return std::string("recovered graph is not isomorphic");
      return std::nullopt;
    });
  }

  std::optional<InverseSemigroup> iisg;
  try {
    iisg = build(Kind::Iisg, host, {}, caps);
  } catch (const ResourceLimitError& e) {
    run.skip("iisg.axioms", e.what());
  }
  if (iisg) {
    const InverseSemigroup& s = *iisg;
    run.run("iisg.axioms", [&] { return axioms(s, caps); });
    if (g.is_simple()) {
      run.run("iisg.boolean", [&]() -> std::optional<std::string> {
        if (s.idempotent_indices().size() != (std::size_t{1} << g.vertex_count())) {
          return std::string("idempotent count is not 2^|V|");
        }
        const IdempotentPoset ip = idempotent_poset(s);
        if (auto v = check_subgraph_order_isomorphism(s, ip); !v.holds()) return v.detail;
        return verdict_is("boolean", analyze(ip.poset).boolean, Truth::True);
      });
      run.run("iisg.complement", [&]() -> std::optional<std::string> {
        const SemigroupMap m = iisg_complement_functor(g, caps);
        if (!m.holds()) return std::string("complement map is not an isomorphism");
        return std::nullopt;
      });
    }
    run.run("iisg.ideals",
            [&] { return ideal_checks(s, g.vertex_count() > 2 && connected, caps); });
    if (connected) run.run("iisg.aut-basis", [&] { return aut_basis(s, caps); });
  }

  if (connected && g.is_simple()) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const std::string at = "@" + g.vertex_id(v);
      run.run("tisg.axioms" + at, [&] { return axioms(build(Kind::Tisg, host, v, caps), caps); });
      run.run("tisg.lattice" + at, [&] { return tisg_lattice(build(Kind::Tisg, host, v, caps)); });
      run.run("pisg.axioms" + at, [&] { return axioms(build(Kind::Pisg, host, v, caps), caps); });
      run.run("pisg.lattice" + at, [&]() -> std::optional<std::string> {
        const InverseSemigroup s = build(Kind::Pisg, host, v, caps);
        const IdempotentPoset ip = idempotent_poset(s);
        if (auto c = check_subgraph_order_isomorphism(s, ip); !c.holds()) return c.detail;
        const LatticeReport r = analyze(ip.poset);
        if (auto f = verdict_is("meet_semilattice", r.meet_semilattice, Truth::True)) return f;
        const bool criterion = pisg_lattice_criterion(g, v);
        if (r.lattice.holds() != criterion) {
          return std::string("lattice verdict ") + to_string(r.lattice.value) +
                 " but rooted-path criterion " + (criterion ? "true" : "false");
        }
        return std::nullopt;
      });
    }
  }
  return run.take();
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".graph") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TheoremMatrix verify_theorems(const std::vector<std::filesystem::path>& files,
                              const Caps& caps, unsigned workers) {
  std::vector<std::vector<TheoremResult>> per_file(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const std::string name = files[i].stem().string();
      try {
        const Graph g = load_graph(files[i].string());
        per_file[i] = check_graph(name, g, caps);
      } catch (const Error& e) {
        per_file[i] = {{name, "parse", Status::ParseError, e.what()}};
      }
    }
  };
  workers = std::max(1U, workers);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  TheoremMatrix m;
  for (auto& rows : per_file) {
    for (auto& r : rows) m.rows.push_back(std::move(r));
  }
  return m;
}

}  // namespace isg
