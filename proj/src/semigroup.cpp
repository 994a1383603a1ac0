// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "isg/error.hpp"

namespace isg {

InverseSemigroup::InverseSemigroup(Kind kind, Host host,
                                   std::optional<VertexIndex> root,
                                   std::vector<PartialIso> elements,
                                   const Caps& caps)
    : kind_(kind),
      host_(std::move(host)),
      root_(root),
      elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw FormatError("duplicate element " + std::to_string(i) + ": " +
                        describe(elements_[i]));
    }
  }
  inverses_.reserve(elements_.size());
  for (const PartialIso& f : elements_) inverses_.push_back(index_of(invert(f)));

  if (elements_.size() <= caps.max_table_elements) {
    const std::size_t n = elements_.size();
    table_ = CompositionTable(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (auto k = index_of(compose(elements_[i], elements_[j]))) {
          table_.set(i, j, static_cast<std::uint32_t>(*k));
        }
      }
    }
  }

  idempotent_flag_.assign(elements_.size(), false);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const bool idem = has_table()
                          ? table_(i, i) == i
                          : compose(elements_[i], elements_[i]) == elements_[i];
    if (idem) {
      idempotent_flag_[i] = true;
      idempotents_.push_back(i);
    }
  }
}

std::optional<std::size_t> InverseSemigroup::index_of(const PartialIso& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> InverseSemigroup::try_multiply(std::size_t psi,
                                                          std::size_t phi) const {
  if (has_table()) {
    const auto k = table_(psi, phi);
    if (k == CompositionTable::kMissing) return std::nullopt;
    return k;
  }
  return index_of(compose(elements_.at(psi), elements_.at(phi)));
}

std::size_t InverseSemigroup::multiply(std::size_t psi, std::size_t phi) const {
  if (auto k = try_multiply(psi, phi)) return *k;
  throw ConsistencyError("product of elements " + std::to_string(psi) +
                         " and " + std::to_string(phi) +
                         " is not in the semigroup");
}

std::vector<SubgraphRef> flavor_subgraphs(Kind kind, const Host& g,
                                          std::optional<VertexIndex> root,
                                          std::size_t max_count) {
  switch (kind) {
    case Kind::Fisg:
      return enumerate_subgraphs(g, max_count);
    case Kind::Iisg:
      return enumerate_induced_subgraphs(g, max_count);
    case Kind::Tisg:
      return enumerate_rooted_connected_induced(g, root.value(), max_count);
    case Kind::Pisg:
      return enumerate_rooted_path_pairs(g, root.value(), max_count);
  }
  return {};
}

namespace {

// Cheap isomorphism invariant used to skip hopeless subgraph pairs.
std::string bucket_key(Kind kind, const SubgraphRef& s) {
  const Graph& g = *s.host;
  std::vector<std::pair<int, int>> local;  // (degree, loops) per vertex
  std::vector<int> deg(g.vertex_count(), 0);
  std::vector<int> loops(g.vertex_count(), 0);
  for_each_bit(s.edges, [&](std::size_t e) {
    const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
    deg[ed.u] += 1;
    deg[ed.w] += 1;
    if (ed.is_loop()) loops[ed.u] += 1;
  });
  for_each_bit(s.vertices, [&](std::size_t v) { local.emplace_back(deg[v], loops[v]); });
  std::ostringstream key;
  key << s.vertex_count() << '/' << s.edge_count();
  if (kind == Kind::Pisg) {
    // Path pairs must match position by position.
    for (VertexIndex p : s.path) key << ';' << deg[p] << ',' << loops[p];
    return key.str();
  }
  if (s.root) key << "/r" << deg[*s.root] << ',' << loops[*s.root];
  std::sort(local.begin(), local.end());
  for (auto [d, l] : local) key << ';' << d << ',' << l;
  return key.str();
}

auto element_key(const PartialIso& f) {
  return std::tie(f.dom.vertices, f.dom.edges, f.dom.path, f.cod.vertices,
                  f.cod.edges, f.cod.path, f.map.vertex_map, f.map.edge_map);
}

}  // namespace

InverseSemigroup build(Kind kind, const Host& g, std::optional<VertexIndex> root,
                       const Caps& caps) {
  if (is_rooted(kind) && !root) {
    throw UsageError(std::string("build: kind ") + to_string(kind) +
                     " requires a root");
  }
  if (!is_rooted(kind) && root) {
    throw UsageError(std::string("build: kind ") + to_string(kind) +
                     " does not take a root");
  }
  if (root && *root >= g->vertex_count()) {
    throw DomainError("build: root is not a vertex of the graph");
  }

  const std::vector<SubgraphRef> subs =
      flavor_subgraphs(kind, g, root, caps.max_subgraphs);

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    buckets[bucket_key(kind, subs[i])].push_back(i);
  }

  std::vector<PartialIso> elements;
  std::size_t pairs_seen = 0;
  for (const auto& [key, members] : buckets) {
    for (std::size_t ia : members) {
      for (std::size_t ib : members) {
        const SubgraphRef& a = subs[ia];
        const SubgraphRef& b = subs[ib];
        ++pairs_seen;
        VertexPairs forced;
        if (kind == Kind::Pisg) {
          for (std::size_t k = 0; k < a.path.size(); ++k) {
            forced.emplace_back(a.path[k], b.path[k]);
          }
        } else if (root) {
          forced.emplace_back(*root, *root);
        }
        for_each_subgraph_isomorphism(a, b, forced, [&](const GraphIso& iso) {
          if (elements.size() >= caps.max_elements) {
            throw ResourceLimitError(
                std::string("build ") + to_string(kind) + ": more than " +
                std::to_string(caps.max_elements) + " elements after " +
                std::to_string(pairs_seen) + " subgraph pairs");
          }
          elements.push_back(PartialIso{a, b, iso});
          return true;
        });
      }
    }
  }

  std::sort(elements.begin(), elements.end(),
            [](const PartialIso& x, const PartialIso& y) {
              return element_key(x) < element_key(y);
            });
  return InverseSemigroup(kind, g, root, std::move(elements), caps);
}

bool VerifyReport::all_passed() const noexcept {
  return closure.passed && associativity.passed && regularity.passed &&
         idempotents_commute.passed && unique_inverses.passed;
}

std::vector<const AxiomCheck*> VerifyReport::checks() const {
  return {&closure, &associativity, &regularity, &idempotents_commute,
          &unique_inverses};
}

namespace {

void fail(AxiomCheck& c, std::vector<std::size_t> witness, std::string detail) {
  if (!c.passed) return;
  c.passed = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

bool is_inverse_pair(const Multiplier& mul, std::size_t x, std::size_t y) {
  auto xy = mul(x, y);
  auto yx = mul(y, x);
  if (!xy || !yx) return false;
  auto xyx = mul(*xy, x);
  auto yxy = mul(*yx, y);
  return xyx && yxy && *xyx == x && *yxy == y;
}

}  // namespace

VerifyReport verify_axioms(std::size_t n, const Multiplier& mul,
                           std::span<const std::optional<std::size_t>> inverses,
                           const Caps& caps) {
  VerifyReport r;
  const auto n64 = static_cast<std::uint64_t>(n);
  const bool full = n64 * n64 * n64 <= caps.max_verify_triples;

  // Closure of the multiplication itself.
  for (std::size_t i = 0; i < n && r.closure.passed; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.closure.checked;
      if (!mul(i, j)) {
        fail(r.closure, {i, j}, "product is not an element");
        break;
      }
    }
  }
  if (!r.closure.passed) {
    r.associativity.detail = r.regularity.detail =
        r.idempotents_commute.detail = r.unique_inverses.detail =
            "skipped: not closed";
    r.associativity.passed = r.regularity.passed =
        r.idempotents_commute.passed = r.unique_inverses.passed = false;
    return r;
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++r.associativity.checked;
    const std::size_t left = *mul(*mul(a, b), c);
    const std::size_t right = *mul(a, *mul(b, c));
    if (left != right) {
      std::ostringstream d;
      d << "(" << a << "*" << b << ")*" << c << " = " << left << " but " << a
        << "*(" << b << "*" << c << ") = " << right;
      fail(r.associativity, {a, b, c}, d.str());
      return false;
    }
    return true;
  };
  if (full) {
    for (std::size_t a = 0; a < n && r.associativity.passed; ++a) {
      for (std::size_t b = 0; b < n && r.associativity.passed; ++b) {
        const std::size_t ab = *mul(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          ++r.associativity.checked;
          if (*mul(ab, c) != *mul(a, *mul(b, c))) {
            --r.associativity.checked;
            assoc(a, b, c);
            break;
          }
        }
      }
    }
  } else {
    r.associativity.sampled = true;
    std::mt19937_64 rng(caps.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t k = 0; k < caps.sample_triples; ++k) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) break;
    }
  }

  // Regularity: x x' x = x and x' x x' = x' for the designated inverse, or
  // for some inverse when none is designated.
  for (std::size_t x = 0; x < n; ++x) {
    ++r.regularity.checked;
    if (!inverses.empty()) {
      if (!inverses[x] || !is_inverse_pair(mul, x, *inverses[x])) {
        fail(r.regularity, {x}, "designated inverse fails x*x'*x = x");
        break;
      }
      continue;
    }
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) found = is_inverse_pair(mul, x, y);
    if (!found) {
      fail(r.regularity, {x}, "no y with x*y*x = x and y*x*y = y");
      break;
    }
  }

  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < n; ++i) {
    if (*mul(i, i) == i) idem.push_back(i);
  }
  for (std::size_t a = 0; a < idem.size() && r.idempotents_commute.passed; ++a) {
    for (std::size_t b = a + 1; b < idem.size(); ++b) {
      ++r.idempotents_commute.checked;
      if (*mul(idem[a], idem[b]) != *mul(idem[b], idem[a])) {
        fail(r.idempotents_commute, {idem[a], idem[b]}, "ef != fe");
        break;
      }
    }
  }

  const std::size_t inverse_rows = full ? n : std::min<std::size_t>(n, 64);
  if (!full) r.unique_inverses.sampled = true;
  for (std::size_t x = 0; x < inverse_rows; ++x) {
    ++r.unique_inverses.checked;
    std::size_t count = 0;
    std::vector<std::size_t> found;
    for (std::size_t y = 0; y < n; ++y) {
      if (is_inverse_pair(mul, x, y)) {
        ++count;
        found.push_back(y);
      }
    }
    if (count != 1) {
      std::vector<std::size_t> w{x};
      w.insert(w.end(), found.begin(), found.end());
      fail(r.unique_inverses, std::move(w),
           std::to_string(count) + " inverses instead of 1");
      break;
    }
  }
  return r;
}

VerifyReport verify_table(const CompositionTable& table, const Caps& caps) {
  Multiplier mul = [&table](std::size_t i,
                            std::size_t j) -> std::optional<std::size_t> {
    const auto k = table(i, j);
    if (k == CompositionTable::kMissing || k >= table.size()) return std::nullopt;
    return k;
  };
  return verify_axioms(table.size(), mul, {}, caps);
}

VerifyReport verify_inverse_semigroup(const InverseSemigroup& s,
                                      const Caps& caps) {
  std::vector<std::optional<std::size_t>> inverses(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inverses[i] = s.inverse_index(i);

  VerifyReport r;
  if (s.size() == 0) {
    r.closure.detail = "empty semigroup";
    return r;
  }

  if (s.has_table() || s.size() <= caps.max_table_elements) {
    CompositionTable local;
    if (!s.has_table()) local = composition_table(s, caps.max_table_elements);
    const CompositionTable& t = s.has_table() ? s.table() : local;
    Multiplier mul = [&t](std::size_t i,
                          std::size_t j) -> std::optional<std::size_t> {
      const auto k = t(i, j);
      if (k == CompositionTable::kMissing) return std::nullopt;
      return k;
    };
    r = verify_axioms(s.size(), mul, inverses, caps);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!inverses[i]) {
        fail(r.closure, {i}, "inverse is not an element");
        break;
      }
    }
    return r;
  }

  // Above the table cap every check that is quadratic or worse is sampled.
  std::mt19937_64 rng(caps.seed);
  std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
  r.closure.sampled = r.associativity.sampled = r.unique_inverses.sampled = true;
  for (std::size_t i = 0; i < s.size() && r.closure.passed; ++i) {
    if (!inverses[i]) fail(r.closure, {i}, "inverse is not an element");
  }
  for (std::uint64_t k = 0; k < caps.sample_triples && r.closure.passed; ++k) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    ++r.closure.checked;
    if (!s.try_multiply(a, b)) fail(r.closure, {a, b}, "product is not an element");
  }
  if (!r.closure.passed) {
    for (AxiomCheck* c : {&r.associativity, &r.regularity,
                          &r.idempotents_commute, &r.unique_inverses}) {
      c->passed = false;
      c->detail = "skipped: not closed";
    }
    return r;
  }
  Multiplier mul = [&s](std::size_t i, std::size_t j) { return s.try_multiply(i, j); };
  for (std::uint64_t k = 0; k < caps.sample_triples && r.associativity.passed; ++k) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    const std::size_t c = pick(rng);
    ++r.associativity.checked;
    if (s.multiply(s.multiply(a, b), c) != s.multiply(a, s.multiply(b, c))) {
      fail(r.associativity, {a, b, c}, "associativity fails on a sampled triple");
    }
  }
  for (std::size_t x = 0; x < s.size() && r.regularity.passed; ++x) {
    ++r.regularity.checked;
    if (!is_inverse_pair(mul, x, *inverses[x])) {
      fail(r.regularity, {x}, "designated inverse fails x*x'*x = x");
    }
  }
  const auto idem = s.idempotent_indices();
  for (std::size_t a = 0; a < idem.size() && r.idempotents_commute.passed; ++a) {
    for (std::size_t b = a + 1; b < idem.size(); ++b) {
      ++r.idempotents_commute.checked;
      if (s.multiply(idem[a], idem[b]) != s.multiply(idem[b], idem[a])) {
        fail(r.idempotents_commute, {idem[a], idem[b]}, "ef != fe");
        break;
      }
    }
  }
  // Uniqueness of inverses on a sample of rows.
  for (std::size_t k = 0; k < 16 && r.unique_inverses.passed; ++k) {
    const std::size_t x = pick(rng);
    ++r.unique_inverses.checked;
    std::vector<std::size_t> found;
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (is_inverse_pair(mul, x, y)) found.push_back(y);
    }
    if (found.size() != 1) {
      std::vector<std::size_t> w{x};
      w.insert(w.end(), found.begin(), found.end());
      fail(r.unique_inverses, std::move(w),
           std::to_string(found.size()) + " inverses instead of 1");
    }
  }
  return r;
}

std::vector<std::size_t> idempotents(const InverseSemigroup& s) {
  auto span = s.idempotent_indices();
  return {span.begin(), span.end()};
}

std::vector<std::size_t> automorphism_subgroup(const InverseSemigroup& s) {
  if (is_rooted(s.kind())) {
    throw UnsupportedError(
        "automorphism_subgroup: not defined for rooted semigroups");
  }
  const Graph& g = *s.host();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PartialIso& f = s.element(i);
    if (f.dom.vertices == g.all_vertices() && f.dom.edges == g.all_edges() &&
        f.cod.vertices == g.all_vertices() && f.cod.edges == g.all_edges()) {
      out.push_back(i);
    }
  }
  return out;
}

CompositionTable composition_table(const InverseSemigroup& s,
                                   std::size_t max_elements) {
  if (s.has_table()) return s.table();
  if (s.size() > max_elements) {
    throw ResourceLimitError("composition_table: " + std::to_string(s.size()) +
                             " elements exceed the cap of " +
                             std::to_string(max_elements));
  }
  CompositionTable t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (auto k = s.try_multiply(i, j)) t.set(i, j, static_cast<std::uint32_t>(*k));
    }
  }
  return t;
}

}  // namespace isg
