// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "isg/error.hpp"

namespace isg {

FinitePoset::FinitePoset(std::size_t n,
                         const std::function<bool(std::size_t, std::size_t)>& leq,
                         std::vector<std::string> labels)
    : below_(n, boost::dynamic_bitset<>(n)),
      above_(n, boost::dynamic_bitset<>(n)),
      lower_covers_(n),
      upper_covers_(n),
      labels_(std::move(labels)) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(a, b)) {
        below_[b].set(a);
        above_[a].set(b);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!below_[a].test(a)) {
      throw StructureError("poset: relation is not reflexive at " + std::to_string(a));
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      if (below_[b].test(a) && below_[a].test(b)) {
        throw StructureError("poset: relation is not antisymmetric at " +
                             std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
  // Transitivity: everything below something below b is below b.
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = below_[b].find_first(); a != boost::dynamic_bitset<>::npos;
         a = below_[b].find_next(a)) {
      if (!below_[a].is_subset_of(below_[b])) {
        throw StructureError("poset: relation is not transitive through " +
                             std::to_string(a) + " <= " + std::to_string(b));
      }
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = below_[b].find_first(); a != boost::dynamic_bitset<>::npos;
         a = below_[b].find_next(a)) {
      if (a == b) continue;
      // a is covered by b iff nothing lies strictly between them.
      if ((above_[a] & below_[b]).count() == 2) {
        lower_covers_[b].push_back(a);
        upper_covers_[a].push_back(b);
      }
    }
  }
  if (labels_.size() < n) {
    for (std::size_t i = labels_.size(); i < n; ++i) labels_.push_back(std::to_string(i));
  }
}

bool FinitePoset::covers(std::size_t upper, std::size_t lower) const {
  const auto& lc = lower_covers_[upper];
  return std::find(lc.begin(), lc.end(), lower) != lc.end();
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t l : lower_covers_[u]) out.emplace_back(u, l);
  }
  return out;
}

namespace {

// The element g of `set` with set == sets[g], if any.
std::optional<std::size_t> extremum(const boost::dynamic_bitset<>& set,
                                    const std::vector<boost::dynamic_bitset<>>& sets) {
  std::optional<std::size_t> best;
  std::size_t best_count = 0;
  for (std::size_t g = set.find_first(); g != boost::dynamic_bitset<>::npos;
       g = set.find_next(g)) {
    const std::size_t c = sets[g].count();
    if (!best || c > best_count) {
      best = g;
      best_count = c;
    }
  }
  if (best && set.is_subset_of(sets[*best])) return best;
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  return extremum(below_[a] & below_[b], below_);
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
  return extremum(above_[a] & above_[b], above_);
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (above_[i].all()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (below_[i].all()) return i;
  }
  return std::nullopt;
}

const char* to_string(Truth t) noexcept {
  switch (t) {
    case Truth::True:
      return "true";
    case Truth::False:
      return "false";
    case Truth::NotApplicable:
      return "n/a";
  }
  return "?";
}

std::vector<std::pair<const char*, const Verdict*>> LatticeReport::verdicts() const {
  return {{"meet_semilattice", &meet_semilattice},
          {"lattice", &lattice},
          {"bounded", &bounded},
          {"graded", &graded},
          {"distributive", &distributive},
          {"complemented", &complemented},
          {"boolean", &boolean},
          {"semimodular", &semimodular},
          {"atomic", &atomic},
          {"bi_heyting", &bi_heyting}};
}

namespace {

Verdict yes() { return Verdict{Truth::True, {}, {}}; }
Verdict no(std::vector<std::size_t> w, std::string detail) {
  return Verdict{Truth::False, std::move(w), std::move(detail)};
}
Verdict not_applicable(std::string why) {
  return Verdict{Truth::NotApplicable, {}, std::move(why)};
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

LatticeReport analyze(const FinitePoset& p, std::size_t max_elements) {
  const std::size_t n = p.size();
  if (n > max_elements) {
    throw ResourceLimitError("analyze: poset has " + std::to_string(n) +
                             " elements, cap is " + std::to_string(max_elements));
  }
  LatticeReport r;
  if (n == 0) {
    for (Verdict* v : {&r.meet_semilattice, &r.lattice, &r.bounded, &r.graded,
                       &r.distributive, &r.complemented, &r.boolean,
                       &r.semimodular, &r.atomic, &r.bi_heyting}) {
      *v = not_applicable("empty poset");
    }
    return r;
  }

  std::vector<std::size_t> meet(n * n, kNone);
  std::vector<std::size_t> join(n * n, kNone);
  r.meet_semilattice = yes();
  r.lattice = yes();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (auto m = p.meet(a, b)) {
        meet[a * n + b] = meet[b * n + a] = *m;
      } else if (r.meet_semilattice.holds()) {
        r.meet_semilattice = no({a, b}, "no greatest lower bound");
      }
      if (auto j = p.join(a, b)) {
        join[a * n + b] = join[b * n + a] = *j;
      } else if (r.lattice.holds()) {
        r.lattice = no({a, b}, "no least upper bound");
      }
    }
  }
  if (!r.meet_semilattice.holds() && r.lattice.holds()) r.lattice = r.meet_semilattice;
  auto M = [&](std::size_t a, std::size_t b) { return meet[a * n + b]; };
  auto J = [&](std::size_t a, std::size_t b) { return join[a * n + b]; };

  const auto bottom = p.bottom();
  const auto top = p.top();
  if (bottom && top) {
    r.bounded = yes();
  } else {
    r.bounded = no({}, !bottom ? "no bottom element" : "no top element");
  }

  // Chain lengths from minimal elements, in a linear extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.below(a).count() < p.below(b).count();
  });
  std::vector<std::size_t> lo(n, 0);
  std::vector<std::size_t> hi(n, 0);
  for (std::size_t x : order) {
    const auto& lc = p.lower_covers(x);
    if (lc.empty()) continue;
    lo[x] = kNone;
    for (std::size_t c : lc) {
      lo[x] = std::min(lo[x], lo[c] + 1);
      hi[x] = std::max(hi[x], hi[c] + 1);
    }
  }
  r.graded = yes();
  std::optional<std::size_t> length;
  std::size_t length_at = 0;
  for (std::size_t x = 0; x < n && r.graded.holds(); ++x) {
    if (!p.upper_covers(x).empty()) continue;
    if (lo[x] != hi[x]) {
      r.graded = no({x}, "maximal chains of lengths " + std::to_string(lo[x]) +
                             " and " + std::to_string(hi[x]) + " end here");
    } else if (length && *length != lo[x]) {
      r.graded = no({length_at, x}, "maximal chains of lengths " +
                                        std::to_string(*length) + " and " +
                                        std::to_string(lo[x]));
    } else {
      length = lo[x];
      length_at = x;
    }
  }
  if (r.graded.holds() && lo == hi) r.rank = lo;

  if (!r.lattice.holds()) {
    const std::string why = "not a lattice";
    r.distributive = r.semimodular = r.atomic = r.bi_heyting = not_applicable(why);
    r.complemented = r.boolean = not_applicable(why);
    return r;
  }

  r.distributive = yes();
  for (std::size_t a = 0; a < n && r.distributive.holds(); ++a) {
    for (std::size_t b = 0; b < n && r.distributive.holds(); ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (M(a, J(b, c)) != J(M(a, b), M(a, c))) {
          r.distributive = no({a, b, c}, "a^(bvc) != (a^b)v(a^c)");
          break;
        }
      }
    }
  }

  r.complemented = yes();
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      found = M(a, b) == *bottom && J(a, b) == *top;
    }
    if (!found) {
      r.complemented = no({a}, "no complement");
      break;
    }
  }

  if (!r.distributive.holds()) {
    r.boolean = no(r.distributive.witness, "not distributive");
  } else if (!r.complemented.holds()) {
    r.boolean = no(r.complemented.witness, "not complemented");
  } else {
    r.boolean = yes();
  }

  r.semimodular = yes();
  for (std::size_t a = 0; a < n && r.semimodular.holds(); ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.covers(a, M(a, b)) && !p.covers(J(a, b), b)) {
        r.semimodular = no({a, b}, "a covers a^b but avb does not cover b");
        break;
      }
    }
  }

  const std::vector<std::size_t>& atoms = p.upper_covers(*bottom);
  r.atomic = yes();
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t acc = *bottom;
    for (std::size_t at : atoms) {
      if (p.leq(at, x)) acc = J(acc, at);
    }
    if (acc != x) {
      r.atomic = no({x}, "not a join of atoms");
      break;
    }
  }

  r.bi_heyting = yes();
  boost::dynamic_bitset<> cand(n);
  for (std::size_t a = 0; a < n && r.bi_heyting.holds(); ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cand.reset();
      for (std::size_t c = 0; c < n; ++c) {
        if (p.leq(M(c, a), b)) cand.set(c);
      }
      // Greatest element of cand: some g in cand with cand below g.
      bool greatest = false;
      for (std::size_t g = cand.find_first(); g != boost::dynamic_bitset<>::npos && !greatest;
           g = cand.find_next(g)) {
        greatest = cand.is_subset_of(p.below(g));
      }
      if (!greatest) {
        r.bi_heyting = no({a, b}, "no relative pseudo-complement a -> b");
        break;
      }
      cand.reset();
      for (std::size_t c = 0; c < n; ++c) {
        if (p.leq(b, J(a, c))) cand.set(c);
      }
      bool least = false;
      for (std::size_t g = cand.find_first(); g != boost::dynamic_bitset<>::npos && !least;
           g = cand.find_next(g)) {
        least = cand.is_subset_of(p.above(g));
      }
      if (!least) {
        r.bi_heyting = no({a, b}, "no dual pseudo-complement b - a");
        break;
      }
    }
  }
  return r;
}

IdempotentPoset idempotent_poset(const InverseSemigroup& s) {
  IdempotentPoset ip;
  const auto idem = s.idempotent_indices();
  ip.indices.assign(idem.begin(), idem.end());
  std::vector<std::string> labels;
  labels.reserve(ip.indices.size());
  for (std::size_t i : ip.indices) labels.push_back(describe(s.element(i).dom));
  ip.poset = FinitePoset(
      ip.indices.size(),
      [&](std::size_t a, std::size_t b) {
        return s.multiply(ip.indices[a], ip.indices[b]) == ip.indices[a];
      },
      std::move(labels));
  return ip;
}

namespace {

bool is_prefix(const std::vector<VertexIndex>& p, const std::vector<VertexIndex>& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

}  // namespace

Verdict check_subgraph_order_isomorphism(const InverseSemigroup& s,
                                         const IdempotentPoset& ip) {
  const std::vector<SubgraphRef> subs =
      flavor_subgraphs(s.kind(), s.host(), s.root(), std::size_t{1} << 22);
  if (subs.size() != ip.indices.size()) {
    return no({}, std::to_string(ip.indices.size()) + " idempotents but " +
                      std::to_string(subs.size()) + " subgraphs");
  }
  std::vector<const SubgraphRef*> image(ip.indices.size(), nullptr);
  std::vector<bool> hit(subs.size(), false);
  for (std::size_t k = 0; k < ip.indices.size(); ++k) {
    const PartialIso& e = s.element(ip.indices[k]);
    if (!(e == identity_on(e.dom))) return no({k}, "idempotent is not an identity");
    for (std::size_t t = 0; t < subs.size(); ++t) {
      if (subs[t].same_subgraph(e.dom)) {
        if (hit[t]) return no({k}, "subgraph hit twice");
        hit[t] = true;
        image[k] = &subs[t];
        break;
      }
    }
    if (image[k] == nullptr) return no({k}, "domain is not a flavor subgraph");
  }
  const bool by_prefix = s.kind() == Kind::Pisg;
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = 0; b < image.size(); ++b) {
      const bool sub = by_prefix ? is_prefix(image[a]->path, image[b]->path)
                                 : is_contained(*image[a], *image[b]);
      if (sub != ip.poset.leq(a, b)) {
        return no({a, b}, sub ? "contained but not below" : "below but not contained");
      }
    }
  }
  return yes();
}

namespace {

void check_rooted_pair(const SubgraphRef& h1, const SubgraphRef& h2, const char* op) {
  if (!same_host(h1.host, h2.host)) {
    throw DomainError(std::string(op) + ": subgraphs live in different hosts");
  }
  if (!h1.root || !h2.root || *h1.root != *h2.root) {
    throw DomainError(std::string(op) + ": subgraphs do not share a root");
  }
}

SubgraphRef rooted_induced(const Host& g, VertexMask x, VertexIndex root) {
  SubgraphRef s = induced_subgraph(g, x);
  s.flavor = Flavor::RootedConnectedInduced;
  s.root = root;
  return s;
}

}  // namespace

SubgraphRef tisg_meet(const SubgraphRef& h1, const SubgraphRef& h2) {
  check_rooted_pair(h1, h2, "tisg_meet");
  const VertexMask vs = h1.vertices & h2.vertices;
  const VertexMask comp = reachable(*h1.host, *h1.root, vs, h1.edges & h2.edges);
  return rooted_induced(h1.host, comp, *h1.root);
}

SubgraphRef tisg_join(const SubgraphRef& h1, const SubgraphRef& h2) {
  check_rooted_pair(h1, h2, "tisg_join");
  return rooted_induced(h1.host, h1.vertices | h2.vertices, *h1.root);
}

bool pisg_lattice_criterion(const Graph& g, VertexIndex v) {
  if (v >= g.vertex_count()) {
    throw DomainError("pisg_lattice_criterion: root is not a vertex");
  }
  if (!g.is_simple() || g.edge_count() + 1 != g.vertex_count()) return false;
  if (!is_connected(g, g.all_vertices(), g.all_edges())) return false;
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) > 2) return false;
  }
  return g.degree(v) <= 1;
}

std::string hasse_dot(const FinitePoset& p, std::string_view name) {
  auto quote = [](std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=BT;\n  edge [arrowhead=none];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=" << quote(p.label(i)) << "];\n";
  }
  for (auto [upper, lower] : p.cover_pairs()) {
    out << "  n" << lower << " -> n" << upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace isg
