// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#include "isg/isomorphism.hpp"

#include <algorithm>
#include <tuple>

#include "isg/error.hpp"

namespace isg {

namespace {

// Dense view of the subgraph (vs, es) of a host.
struct LocalView {
  const Graph* g = nullptr;
  std::size_t n = 0;
  std::vector<VertexIndex> verts;
  std::vector<std::int32_t> local_of;
  std::vector<std::uint8_t> mult;
  std::vector<std::vector<EdgeIndex>> bundle;
  std::vector<int> degree;

  std::uint8_t m(std::size_t i, std::size_t j) const { return mult[i * n + j]; }
  const std::vector<EdgeIndex>& edges_between(std::size_t i,
                                              std::size_t j) const {
    return i <= j ? bundle[i * n + j] : bundle[j * n + i];
  }
};

LocalView make_view(const Graph& g, VertexMask vs, EdgeMask es) {
  LocalView lv;
  lv.g = &g;
  lv.local_of.assign(g.vertex_count(), -1);
  for_each_bit(vs, [&](std::size_t v) {
    lv.local_of[v] = static_cast<std::int32_t>(lv.verts.size());
    lv.verts.push_back(static_cast<VertexIndex>(v));
  });
  lv.n = lv.verts.size();
  lv.mult.assign(lv.n * lv.n, 0);
  lv.bundle.assign(lv.n * lv.n, {});
  lv.degree.assign(lv.n, 0);
  for_each_bit(es, [&](std::size_t e) {
    const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
    auto i = static_cast<std::size_t>(lv.local_of[ed.u]);
    auto j = static_cast<std::size_t>(lv.local_of[ed.w]);
    if (i > j) std::swap(i, j);
    ++lv.mult[i * lv.n + j];
    if (i != j) ++lv.mult[j * lv.n + i];
    lv.bundle[i * lv.n + j].push_back(static_cast<EdgeIndex>(e));
    lv.degree[i] += 1;
    lv.degree[j] += 1;
  });
  return lv;
}

std::size_t edge_total(const LocalView& v) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < v.n; ++i) {
    for (std::size_t j = i; j < v.n; ++j) t += v.m(i, j);
  }
  return t;
}

std::vector<std::pair<int, int>> signature(const LocalView& v) {
  std::vector<std::pair<int, int>> s;
  for (std::size_t i = 0; i < v.n; ++i) s.emplace_back(v.degree[i], v.m(i, i));
  std::sort(s.begin(), s.end());
  return s;
}

// Search order: forced source vertices first, then greedily the vertex with
// the most already-ordered neighbours (ties to the lower index).
std::vector<std::size_t> search_order(const LocalView& a,
                                      const std::vector<std::size_t>& first) {
  std::vector<std::size_t> order = first;
  std::vector<bool> placed(a.n, false);
  for (std::size_t i : first) placed[i] = true;
  while (order.size() < a.n) {
    std::size_t best = a.n;
    int best_score = -1;
    for (std::size_t i = 0; i < a.n; ++i) {
      if (placed[i]) continue;
      int score = 0;
      for (std::size_t j : order) score += a.m(i, j) > 0 ? 1 : 0;
      if (score > best_score) {
        best = i;
        best_score = score;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

// Resolves forced host pairs into local pairs. Returns false when a forced
// pair falls outside either subgraph.
bool local_forced(const LocalView& a, const LocalView& b,
                  const VertexPairs& forced,
                  std::vector<std::pair<std::size_t, std::size_t>>& out) {
  for (auto [s, t] : forced) {
    if (s >= a.local_of.size() || t >= b.local_of.size()) return false;
    const auto ls = a.local_of[s];
    const auto lt = b.local_of[t];
    if (ls < 0 || lt < 0) return false;
    out.emplace_back(static_cast<std::size_t>(ls), static_cast<std::size_t>(lt));
  }
  return true;
}

// Walks every vertex bijection a -> b respecting multiplicities, then every
// matching of parallel-edge bundles.
class IsoSearch {
 public:
  IsoSearch(const LocalView& a, const LocalView& b, const VertexPairs& forced,
            const std::function<bool(const GraphIso&)>& cb)
      : a_(a), b_(b), cb_(cb) {
    if (a.n != b.n || edge_total(a) != edge_total(b) ||
        signature(a) != signature(b)) {
      feasible_ = false;
      return;
    }
    std::vector<std::pair<std::size_t, std::size_t>> lf;
    if (!local_forced(a, b, forced, lf)) {
      feasible_ = false;
      return;
    }
    std::vector<std::size_t> first;
    for (auto [s, t] : lf) {
      if (std::find(first.begin(), first.end(), s) != first.end()) continue;
      first.push_back(s);
    }
    order_ = search_order(a, first);
    forced_target_.assign(a.n, -1);
    for (auto [s, t] : lf) {
      if (forced_target_[s] >= 0 &&
          forced_target_[s] != static_cast<std::int32_t>(t)) {
        feasible_ = false;
        return;
      }
      forced_target_[s] = static_cast<std::int32_t>(t);
    }
    assign_.assign(a.n, -1);
    used_.assign(b.n, false);
  }

  void run() {
    if (!feasible_) return;
    vertex_step(0);
  }

 private:
  bool compatible(std::size_t s, std::size_t t, std::size_t depth) const {
    if (a_.degree[s] != b_.degree[t] || a_.m(s, s) != b_.m(t, t)) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t s2 = order_[k];
      const auto t2 = static_cast<std::size_t>(assign_[s2]);
      if (a_.m(s, s2) != b_.m(t, t2)) return false;
    }
    return true;
  }

  bool vertex_step(std::size_t depth) {
    if (depth == a_.n) return edges_start();
    const std::size_t s = order_[depth];
    auto try_target = [&](std::size_t t) {
      if (used_[t] || !compatible(s, t, depth)) return true;
      assign_[s] = static_cast<std::int32_t>(t);
      used_[t] = true;
      const bool go_on = vertex_step(depth + 1);
      used_[t] = false;
      assign_[s] = -1;
      return go_on;
    };
    if (forced_target_[s] >= 0) {
      return try_target(static_cast<std::size_t>(forced_target_[s]));
    }
    for (std::size_t t = 0; t < b_.n; ++t) {
      if (!try_target(t)) return false;
    }
    return true;
  }

  bool edges_start() {
    bundles_.clear();
    for (std::size_t i = 0; i < a_.n; ++i) {
      for (std::size_t j = i; j < a_.n; ++j) {
        const auto& src = a_.bundle[i * a_.n + j];
        if (src.empty()) continue;
        const auto ti = static_cast<std::size_t>(assign_[i]);
        const auto tj = static_cast<std::size_t>(assign_[j]);
        std::vector<EdgeIndex> dst = b_.edges_between(ti, tj);
        std::sort(dst.begin(), dst.end());
        bundles_.push_back({&src, std::move(dst)});
      }
    }
    GraphIso iso;
    iso.vertex_map.assign(a_.g->vertex_count(), GraphIso::kUnmapped);
    iso.edge_map.assign(a_.g->edge_count(), GraphIso::kUnmapped);
    for (std::size_t i = 0; i < a_.n; ++i) {
      iso.vertex_map[a_.verts[i]] = static_cast<std::int32_t>(
          b_.verts[static_cast<std::size_t>(assign_[i])]);
    }
    return edge_step(0, iso);
  }

  bool edge_step(std::size_t k, GraphIso& iso) {
    if (k == bundles_.size()) return cb_(iso);
    auto& [src, dst] = bundles_[k];
    std::vector<EdgeIndex> perm = dst;
    do {
      for (std::size_t i = 0; i < src->size(); ++i) {
        iso.edge_map[(*src)[i]] = static_cast<std::int32_t>(perm[i]);
      }
      if (!edge_step(k + 1, iso)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }

  const LocalView& a_;
  const LocalView& b_;
  const std::function<bool(const GraphIso&)>& cb_;
  bool feasible_ = true;
  std::vector<std::size_t> order_;
  std::vector<std::int32_t> forced_target_;
  std::vector<std::int32_t> assign_;
  std::vector<bool> used_;
  std::vector<std::pair<const std::vector<EdgeIndex>*, std::vector<EdgeIndex>>>
      bundles_;
};

class EmbedSearch {
 public:
  EmbedSearch(const LocalView& a, const LocalView& b, EmbeddingMode mode,
              const VertexPairs& forced)
      : a_(a), b_(b), mode_(mode) {
    if (a.n > b.n || edge_total(a) > edge_total(b)) {
      feasible_ = false;
      return;
    }
    if (mode == EmbeddingMode::Induced && a.n == b.n &&
        edge_total(a) != edge_total(b)) {
      feasible_ = false;
      return;
    }
    std::vector<std::pair<std::size_t, std::size_t>> lf;
    if (!local_forced(a, b, forced, lf)) {
      feasible_ = false;
      return;
    }
    std::vector<std::size_t> first;
    forced_target_.assign(a.n, -1);
    for (auto [s, t] : lf) {
      if (forced_target_[s] >= 0 &&
          forced_target_[s] != static_cast<std::int32_t>(t)) {
        feasible_ = false;
        return;
      }
      if (forced_target_[s] < 0) first.push_back(s);
      forced_target_[s] = static_cast<std::int32_t>(t);
    }
    order_ = search_order(a, first);
    assign_.assign(a.n, -1);
    used_.assign(b.n, false);
  }

  bool run() { return feasible_ && step(0); }

 private:
  bool fits(std::uint8_t small, std::uint8_t big) const {
    return mode_ == EmbeddingMode::Induced ? small == big : small <= big;
  }

  bool compatible(std::size_t s, std::size_t t, std::size_t depth) const {
    if (a_.degree[s] > b_.degree[t] && mode_ == EmbeddingMode::Subgraph) {
      return false;
    }
    if (!fits(a_.m(s, s), b_.m(t, t))) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t s2 = order_[k];
      const auto t2 = static_cast<std::size_t>(assign_[s2]);
      if (!fits(a_.m(s, s2), b_.m(t, t2))) return false;
    }
    return true;
  }

  bool step(std::size_t depth) {
    if (depth == a_.n) return true;
    const std::size_t s = order_[depth];
    auto try_target = [&](std::size_t t) {
      if (used_[t] || !compatible(s, t, depth)) return false;
      assign_[s] = static_cast<std::int32_t>(t);
      used_[t] = true;
      const bool found = step(depth + 1);
      used_[t] = false;
      assign_[s] = -1;
      return found;
    };
    if (forced_target_[s] >= 0) {
      return try_target(static_cast<std::size_t>(forced_target_[s]));
    }
    for (std::size_t t = 0; t < b_.n; ++t) {
      if (try_target(t)) return true;
    }
    return false;
  }

  const LocalView& a_;
  const LocalView& b_;
  EmbeddingMode mode_;
  bool feasible_ = true;
  std::vector<std::size_t> order_;
  std::vector<std::int32_t> forced_target_;
  std::vector<std::int32_t> assign_;
  std::vector<bool> used_;
};

struct Entry {
  std::uint32_t hi;
  std::uint32_t lo;
  std::uint32_t m;
  auto operator<=>(const Entry&) const = default;
};

// Branch and bound over slot assignments. Slot r holds the r-th vertex of the
// (degree, id) order unless pinned; the encoding lists (hi, lo, multiplicity)
// for every occupied slot pair, sorted, and the least one wins.
class CanonicalSearch {
 public:
  CanonicalSearch(const LocalView& v, std::vector<std::size_t> pinned)
      : v_(v), pinned_(std::move(pinned)) {
    std::vector<std::size_t> rest;
    std::vector<bool> is_pinned(v.n, false);
    for (std::size_t p : pinned_) is_pinned[p] = true;
    for (std::size_t i = 0; i < v.n; ++i) {
      if (!is_pinned[i]) rest.push_back(i);
    }
    std::sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) {
      const auto& idx = v.g->vertex_id(v.verts[x]);
      const auto& idy = v.g->vertex_id(v.verts[y]);
      return std::tie(v.degree[x], idx) < std::tie(v.degree[y], idy);
    });
    candidates_ = rest;
    for (std::size_t i : rest) slot_degree_.push_back(v.degree[i]);
    slot_vertex_.assign(v.n, 0);
    used_.assign(v.n, false);
  }

  std::vector<Entry> run() {
    for (std::size_t r = 0; r < pinned_.size(); ++r) {
      place(r, pinned_[r]);
    }
    search(pinned_.size());
    return best_;
  }

 private:
  enum class Cmp { Less, Tie, Greater };

  void place(std::size_t r, std::size_t x) {
    slot_vertex_[r] = x;
    used_[x] = true;
    for (std::size_t lo = 0; lo <= r; ++lo) {
      const std::uint8_t m = v_.m(slot_vertex_[lo], x);
      if (m > 0) {
        cur_.push_back(Entry{static_cast<std::uint32_t>(r),
                             static_cast<std::uint32_t>(lo), m});
      }
    }
  }

  Cmp compare(std::size_t last_slot) const {
    if (!have_best_) return Cmp::Less;
    const std::size_t k = std::min(cur_.size(), best_.size());
    for (std::size_t p = 0; p < k; ++p) {
      if (cur_[p] != best_[p]) return cur_[p] < best_[p] ? Cmp::Less : Cmp::Greater;
    }
    if (cur_.size() > best_.size()) return Cmp::Greater;
    if (cur_.size() < best_.size() && best_[cur_.size()].hi <= last_slot) {
      return Cmp::Greater;
    }
    return Cmp::Tie;
  }

  void search(std::size_t r) {
    if (r == v_.n) {
      if (!have_best_ || compare(r) == Cmp::Less) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    const int want = slot_degree_[r - pinned_.size()];
    for (std::size_t x : candidates_) {
      if (used_[x] || v_.degree[x] != want) continue;
      const std::size_t mark = cur_.size();
      place(r, x);
      if (compare(r) != Cmp::Greater) search(r + 1);
      cur_.resize(mark);
      used_[x] = false;
    }
  }

  const LocalView& v_;
  std::vector<std::size_t> pinned_;
  std::vector<std::size_t> candidates_;
  std::vector<int> slot_degree_;
  std::vector<std::size_t> slot_vertex_;
  std::vector<bool> used_;
  std::vector<Entry> cur_;
  std::vector<Entry> best_;
  bool have_best_ = false;
};

std::string encode(std::string_view tag, std::size_t n,
                   const std::vector<Entry>& entries) {
  std::string out(tag);
  out += std::to_string(n);
  out += '|';
  for (const Entry& e : entries) {
    out += std::to_string(e.hi);
    out += '.';
    out += std::to_string(e.lo);
    out += '.';
    out += std::to_string(e.m);
    out += ';';
  }
  return out;
}

std::string canonical_of_view(const LocalView& v, std::string_view tag,
                              std::vector<std::size_t> pinned,
                              std::size_t max_vertices) {
  if (v.n > max_vertices) {
    throw ResourceLimitError("canonical_form: " + std::to_string(v.n) +
                             " vertices exceed the cap of " +
                             std::to_string(max_vertices));
  }
  CanonicalSearch search(v, std::move(pinned));
  return encode(tag, v.n, search.run());
}

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, const GraphIso& iso) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return false;
  if (iso.vertex_map.size() != g.vertex_count() ||
      iso.edge_map.size() != g.edge_count())
    return false;
  std::vector<bool> vhit(h.vertex_count(), false);
  for (auto t : iso.vertex_map) {
    if (t < 0 || static_cast<std::size_t>(t) >= h.vertex_count() || vhit[t])
      return false;
    vhit[t] = true;
  }
  std::vector<bool> ehit(h.edge_count(), false);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto t = iso.edge_map[e];
    if (t < 0 || static_cast<std::size_t>(t) >= h.edge_count() || ehit[t])
      return false;
    ehit[t] = true;
    const Edge& src = g.edge(static_cast<EdgeIndex>(e));
    const Edge& dst = h.edge(static_cast<EdgeIndex>(t));
    const auto mu = static_cast<VertexIndex>(iso.vertex_map[src.u]);
    const auto mw = static_cast<VertexIndex>(iso.vertex_map[src.w]);
    if (std::minmax(mu, mw) != std::minmax(dst.u, dst.w)) return false;
  }
  return true;
}

std::optional<GraphIso> find_isomorphism(const Graph& g, const Graph& h) {
  const LocalView a = make_view(g, g.all_vertices(), g.all_edges());
  const LocalView b = make_view(h, h.all_vertices(), h.all_edges());
  std::optional<GraphIso> found;
  std::function<bool(const GraphIso&)> cb = [&](const GraphIso& iso) {
    found = iso;
    return false;
  };
  IsoSearch search(a, b, {}, cb);
  search.run();
  return found;
}

void for_each_subgraph_isomorphism(
    const SubgraphRef& a, const SubgraphRef& b, const VertexPairs& forced,
    const std::function<bool(const GraphIso&)>& callback) {
  const LocalView va = make_view(*a.host, a.vertices, a.edges);
  const LocalView vb = make_view(*b.host, b.vertices, b.edges);
  IsoSearch search(va, vb, forced, callback);
  search.run();
}

std::vector<GraphIso> subgraph_isomorphisms(const SubgraphRef& a,
                                            const SubgraphRef& b,
                                            const VertexPairs& forced) {
  std::vector<GraphIso> out;
  for_each_subgraph_isomorphism(a, b, forced, [&](const GraphIso& iso) {
    out.push_back(iso);
    return true;
  });
  return out;
}

bool embeds(const SubgraphRef& small, const SubgraphRef& big, EmbeddingMode mode,
            const VertexPairs& forced) {
  const LocalView va = make_view(*small.host, small.vertices, small.edges);
  const LocalView vb = make_view(*big.host, big.vertices, big.edges);
  EmbedSearch search(va, vb, mode, forced);
  return search.run();
}

std::string canonical_form(const Graph& g, std::size_t max_vertices) {
  const LocalView v = make_view(g, g.all_vertices(), g.all_edges());
  return canonical_of_view(v, "", {}, max_vertices);
}

std::string canonical_form(const SubgraphRef& s, std::size_t max_vertices) {
  const LocalView v = make_view(*s.host, s.vertices, s.edges);
  return canonical_of_view(v, "", {}, max_vertices);
}

std::string rooted_canonical_form(const SubgraphRef& s,
                                  std::size_t max_vertices) {
  if (!s.root || !has_bit(s.vertices, *s.root)) {
    throw DomainError("rooted_canonical_form: root not in subgraph");
  }
  const LocalView v = make_view(*s.host, s.vertices, s.edges);
  return canonical_of_view(
      v, "r", {static_cast<std::size_t>(v.local_of[*s.root])}, max_vertices);
}

std::string path_pair_form(const SubgraphRef& s) {
  const LocalView v = make_view(*s.host, s.vertices, s.edges);
  if (s.path.size() != v.n) {
    throw DomainError("path_pair_form: path does not span the subgraph");
  }
  std::vector<std::size_t> pinned;
  for (VertexIndex p : s.path) {
    pinned.push_back(static_cast<std::size_t>(v.local_of[p]));
  }
  return canonical_of_view(v, "p", std::move(pinned), kMaxVertices);
}

}  // namespace isg
