// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/ideals.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "isg/error.hpp"

namespace isg {

namespace {

SubgraphRef prefix_pair(const SubgraphRef& s, std::size_t k) {
  return path_pair(s.host, std::vector<VertexIndex>(s.path.begin(), s.path.begin() + k));
}

VertexPairs pointwise(const std::vector<VertexIndex>& a, const std::vector<VertexIndex>& b) {
  VertexPairs out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i], b[i]);
  return out;
}

}  // namespace

bool flavor_embeds(Kind kind, const SubgraphRef& small, const SubgraphRef& big) {
  switch (kind) {
    case Kind::Fisg:
      return embeds(small, big, EmbeddingMode::Subgraph);
    case Kind::Iisg:
      return embeds(small, big, EmbeddingMode::Induced);
    case Kind::Tisg:
      return embeds(small, big, EmbeddingMode::Induced, {{*small.root, *big.root}});
    case Kind::Pisg: {
      const std::size_t k = small.path.size();
      if (k > big.path.size()) return false;
      const SubgraphRef prefix = prefix_pair(big, k);
      if (prefix.edge_count() != small.edge_count()) return false;
      return embeds(small, prefix, EmbeddingMode::Induced,
                    pointwise(small.path, prefix.path));
    }
  }
  return false;
}

bool flavor_isomorphic(Kind kind, const SubgraphRef& a, const SubgraphRef& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         a.path.size() == b.path.size() && flavor_embeds(kind, a, b);
}

std::string class_key(Kind kind, const SubgraphRef& s) {
  switch (kind) {
    case Kind::Fisg:
    case Kind::Iisg:
      return canonical_form(s);
    case Kind::Tisg:
      return rooted_canonical_form(s);
    case Kind::Pisg:
      return path_pair_form(s);
  }
  return {};
}

namespace {

auto subgraph_key(const SubgraphRef& s) {
  return std::make_tuple(s.vertices, s.edges, s.path);
}

}  // namespace

IdealSpace::IdealSpace(const InverseSemigroup& s, const Caps& caps) : s_(&s) {
  const Kind kind = s.kind();
  // Distinct domains, then their keys.
  std::map<std::tuple<VertexMask, EdgeMask, std::vector<VertexIndex>>, std::size_t> dom_slot;
  std::vector<const SubgraphRef*> doms;
  std::vector<std::size_t> element_dom(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const SubgraphRef& d = s.element(i).dom;
    auto [it, fresh] = dom_slot.emplace(subgraph_key(d), doms.size());
    if (fresh) doms.push_back(&d);
    element_dom[i] = it->second;
  }
  struct Entry {
    std::size_t vcount, ecount;
    std::string key;
    const SubgraphRef* rep;
  };
  std::map<std::string, std::size_t> by_key;
  std::vector<Entry> entries;
  std::vector<std::size_t> dom_entry(doms.size());
  for (std::size_t d = 0; d < doms.size(); ++d) {
    std::string key = class_key(kind, *doms[d]);
    auto [it, fresh] = by_key.emplace(key, entries.size());
    if (fresh) {
      if (entries.size() >= caps.max_classes) {
        throw ResourceLimitError("ideals: more than " + std::to_string(caps.max_classes) +
                                 " domain classes");
      }
      entries.push_back({doms[d]->vertex_count(), doms[d]->edge_count(), key, doms[d]});
    }
    dom_entry[d] = it->second;
  }
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(entries[a].vcount, entries[a].ecount, entries[a].key) <
           std::tie(entries[b].vcount, entries[b].ecount, entries[b].key);
  });
  std::vector<std::size_t> rank(entries.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    reps_.push_back(*entries[order[r]].rep);
    keys_.push_back(entries[order[r]].key);
  }
  element_class_.resize(s.size());
  members_.resize(reps_.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    element_class_[i] = rank[dom_entry[element_dom[i]]];
    members_[element_class_[i]].push_back(i);
  }
  const std::size_t k = reps_.size();
  below_.assign(k, boost::dynamic_bitset<>(k));
  for (std::size_t d = 0; d < k; ++d) {
    for (std::size_t c = 0; c <= d; ++c) {
      if (c == d || flavor_embeds(kind, reps_[c], reps_[d])) below_[d].set(c);
    }
  }
}

namespace {

std::vector<std::size_t> maximal_classes(const IdealSpace& space,
                                         const boost::dynamic_bitset<>& present) {
  std::vector<std::size_t> out;
  for (std::size_t c = present.find_first(); c != boost::dynamic_bitset<>::npos;
       c = present.find_next(c)) {
    bool maximal = true;
    for (std::size_t d = present.find_next(c); d != boost::dynamic_bitset<>::npos && maximal;
         d = present.find_next(d)) {
      maximal = !space.embeds(c, d);
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace

Ideal make_ideal(const IdealSpace& space, boost::dynamic_bitset<> members) {
  boost::dynamic_bitset<> present(space.class_count());
  for (std::size_t i = members.find_first(); i != boost::dynamic_bitset<>::npos;
       i = members.find_next(i)) {
    present.set(space.class_of(i));
  }
  Ideal ideal{&space.semigroup(), std::move(members), {}};
  ideal.basis = maximal_classes(space, present);
  return ideal;
}

Ideal ideal_from_classes(const IdealSpace& space, const std::vector<std::size_t>& classes) {
  boost::dynamic_bitset<> members(space.semigroup().size());
  for (std::size_t c = 0; c < space.class_count(); ++c) {
    const bool below = std::any_of(classes.begin(), classes.end(),
                                   [&](std::size_t d) { return space.embeds(c, d); });
    if (!below) continue;
    for (std::size_t e : space.class_members(c)) members.set(e);
  }
  return make_ideal(space, std::move(members));
}

Ideal principal_ideal(const IdealSpace& space, std::size_t a) {
  return ideal_from_classes(space, {space.class_of(a)});
}

IdealCheck is_ideal(const InverseSemigroup& s, const boost::dynamic_bitset<>& members) {
  for (std::size_t x = members.find_first(); x != boost::dynamic_bitset<>::npos;
       x = members.find_next(x)) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (!members.test(s.multiply(y, x))) return {false, x, y, 'l'};
      if (!members.test(s.multiply(x, y))) return {false, x, y, 'r'};
    }
  }
  return {};
}

boost::dynamic_bitset<> sandwich_ideal(const InverseSemigroup& s, std::size_t a) {
  boost::dynamic_bitset<> right(s.size());
  for (std::size_t y = 0; y < s.size(); ++y) right.set(s.multiply(a, y));
  boost::dynamic_bitset<> out(s.size());
  for (std::size_t r = right.find_first(); r != boost::dynamic_bitset<>::npos;
       r = right.find_next(r)) {
    for (std::size_t x = 0; x < s.size(); ++x) out.set(s.multiply(x, r));
  }
  return out;
}

std::vector<SubgraphRef> extract_basis(const IdealSpace& space, const Ideal& ideal) {
  const Kind kind = space.semigroup().kind();
  // Bucket on the canonical key, recomputed from the member domains.
  std::map<std::string, const SubgraphRef*> buckets;
  for (std::size_t i = ideal.members.find_first(); i != boost::dynamic_bitset<>::npos;
       i = ideal.members.find_next(i)) {
    const SubgraphRef& d = space.semigroup().element(i).dom;
    buckets.emplace(class_key(kind, d), &d);
  }
  std::vector<const SubgraphRef*> reps;
  for (const auto& [key, rep] : buckets) reps.push_back(rep);
  std::vector<SubgraphRef> out;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < reps.size() && maximal; ++b) {
      if (a != b && flavor_embeds(kind, *reps[a], *reps[b])) maximal = false;
    }
    if (maximal) out.push_back(*reps[a]);
  }
  return out;
}

std::vector<SubgraphRef> greedy_basis(const InverseSemigroup& s,
                                      const boost::dynamic_bitset<>& members) {
  std::vector<SubgraphRef> pool;
  for (std::size_t i = members.find_first(); i != boost::dynamic_bitset<>::npos;
       i = members.find_next(i)) {
    const SubgraphRef& d = s.element(i).dom;
    const bool seen = std::any_of(pool.begin(), pool.end(),
                                  [&](const SubgraphRef& p) { return p.same_subgraph(d); });
    if (!seen) pool.push_back(d);
  }
  // Drop one redundant generator at a time until none embeds into another.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < pool.size() && !changed; ++a) {
      for (std::size_t b = 0; b < pool.size(); ++b) {
        if (a != b && flavor_embeds(s.kind(), pool[a], pool[b])) {
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(a));
          changed = true;
          break;
        }
      }
    }
  }
  return pool;
}

bool bases_isomorphic(Kind kind, const std::vector<SubgraphRef>& a,
                      const std::vector<SubgraphRef>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const SubgraphRef& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (!used[j] && flavor_isomorphic(kind, x, b[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<SubgraphRef> distinct_classes(Kind kind, const std::vector<SubgraphRef>& subs) {
  std::vector<SubgraphRef> out;
  for (const SubgraphRef& s : subs) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const SubgraphRef& o) {
      return flavor_isomorphic(kind, s, o);
    });
    if (!seen) out.push_back(s);
  }
  return out;
}

namespace {

void check_parents(const IdealSpace& space, const Ideal& i, const Ideal& j) {
  if (i.parent != &space.semigroup() || j.parent != &space.semigroup()) {
    throw DomainError("ideals belong to different semigroups");
  }
}

}  // namespace

Ideal union_ideal(const IdealSpace& space, const Ideal& i, const Ideal& j) {
  check_parents(space, i, j);
  return make_ideal(space, i.members | j.members);
}

Ideal intersect_ideal(const IdealSpace& space, const Ideal& i, const Ideal& j) {
  check_parents(space, i, j);
  return make_ideal(space, i.members & j.members);
}

std::vector<Ideal> enumerate_ideals(const IdealSpace& space, bool include_empty,
                                    std::size_t max_ideals) {
  const std::size_t k = space.class_count();
  std::vector<Ideal> out;
  std::vector<std::size_t> chosen;
  // Classes are visited from the top of the linear extension down, so a
  // candidate can only lie below already chosen classes.
  auto visit = [&](auto&& self, std::size_t next) -> void {
    if (next == 0) {
      if (chosen.empty() && !include_empty) return;
      if (out.size() >= max_ideals) {
        throw ResourceLimitError("enumerate_ideals: more than " +
                                 std::to_string(max_ideals) + " ideals");
      }
      Ideal ideal = ideal_from_classes(space, chosen);
      ideal.basis = chosen;
      std::sort(ideal.basis.begin(), ideal.basis.end());
      out.push_back(std::move(ideal));
      return;
    }
    const std::size_t c = next - 1;
    self(self, c);
    const bool free = std::none_of(chosen.begin(), chosen.end(),
                                   [&](std::size_t d) { return space.embeds(c, d); });
    if (free) {
      chosen.push_back(c);
      self(self, c);
      chosen.pop_back();
    }
  };
  visit(visit, k);
  return out;
}

IdealLattice ideal_lattice(const IdealSpace& space, bool include_empty, const Caps& caps) {
  IdealLattice lat;
  lat.ideals = enumerate_ideals(space, include_empty, caps.max_ideals);
  std::vector<std::string> labels;
  for (const Ideal& ideal : lat.ideals) {
    std::string label = "{";
    for (std::size_t c : ideal.basis) {
      if (label.size() > 1) label += ", ";
      label += space.key(c);
    }
    labels.push_back(label + "}");
  }
  lat.poset = FinitePoset(
      lat.ideals.size(),
      [&](std::size_t a, std::size_t b) {
        return lat.ideals[a].members.is_subset_of(lat.ideals[b].members);
      },
      std::move(labels));
  lat.report = analyze(lat.poset);
  return lat;
}

ReesQuotient rees_quotient(const InverseSemigroup& s, const Ideal& ideal, const Caps& caps) {
  if (ideal.members.none()) throw DomainError("rees_quotient: empty ideal");
  ReesQuotient q;
  q.class_of.assign(s.size(), 0);
  q.representative.push_back(ideal.members.find_first());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (ideal.members.test(i)) continue;
    q.class_of[i] = q.representative.size();
    q.representative.push_back(i);
  }
  const std::size_t n = q.representative.size();
  q.table = CompositionTable(n);
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      const std::size_t cx = q.class_of[x];
      const std::size_t cy = q.class_of[y];
      const auto cz = static_cast<std::uint32_t>(q.class_of[s.multiply(x, y)]);
      if (q.table(cx, cy) == CompositionTable::kMissing) {
        q.table.set(cx, cy, cz);
      } else if (q.table(cx, cy) != cz) {
        throw ConsistencyError("rees_quotient: product of classes " + std::to_string(cx) +
                               " and " + std::to_string(cy) + " is not well defined");
      }
    }
  }
  q.zero_absorbing = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (q.table(0, c) != 0 || q.table(c, 0) != 0) q.zero_absorbing = false;
  }
  q.axioms = verify_table(q.table, caps);
  return q;
}

Ideal aut_complement_ideal(const IdealSpace& space) {
  const InverseSemigroup& s = space.semigroup();
  boost::dynamic_bitset<> members(s.size());
  members.set();
  for (std::size_t a : automorphism_subgroup(s)) members.reset(a);
  return make_ideal(space, std::move(members));
}

std::vector<SubgraphRef> deleted_subgraphs(const InverseSemigroup& s) {
  const Host& g = s.host();
  std::vector<SubgraphRef> out;
  if (s.kind() == Kind::Fisg) {
    for (EdgeIndex e = 0; e < g->edge_count(); ++e) {
      SubgraphRef d = whole_graph(g);
      d.flavor = Flavor::Any;
      d.edges &= ~bit(e);
      out.push_back(d);
    }
  } else if (s.kind() == Kind::Iisg) {
    for (VertexIndex v = 0; v < g->vertex_count(); ++v) {
      out.push_back(induced_subgraph(g, g->all_vertices() & ~bit(v)));
    }
  } else {
    throw UnsupportedError("deleted_subgraphs: rooted kinds have no automorphism group");
  }
  return out;
}

}  // namespace isg
