// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_PARTIAL_ISO_HPP_
#define ISG_PARTIAL_ISO_HPP_

#include <cstddef>
#include <string>

#include "isg/graph.hpp"
#include "isg/isomorphism.hpp"
#include "isg/subgraph.hpp"

namespace isg {

// The four semigroups share one element type and differ in the subgraph
// flavor and the composition rule.
enum class Kind { Fisg, Iisg, Tisg, Pisg };

const char* to_string(Kind k) noexcept;
Kind parse_kind(std::string_view name);
Flavor flavor_of(Kind k) noexcept;
inline bool is_rooted(Kind k) noexcept {
  return k == Kind::Tisg || k == Kind::Pisg;
}

// An isomorphism between two subgraphs of one host. `map` is host-indexed;
// vertices and edges outside `dom` map to kUnmapped. For path pairs the map
// carries dom.path onto cod.path position by position.
struct PartialIso {
  SubgraphRef dom;
  SubgraphRef cod;
  GraphIso map;

  const Host& host() const noexcept { return dom.host; }
  bool is_empty() const noexcept { return dom.vertices == 0; }

  // Structural: domains, codomains, distinguished paths and both maps.
  bool operator==(const PartialIso& other) const;
};

struct PartialIsoHash {
  std::size_t operator()(const PartialIso& f) const noexcept;
};

// The empty map on g (tagged VertexInduced so it also lives in Iisg).
PartialIso empty_map(const Host& g);

PartialIso identity_on(const SubgraphRef& s);

PartialIso invert(const PartialIso& f);

// psi after phi, restricted to phi^-1(Im(phi) & Dom(psi)). Used by both
// Fisg and Iisg. Throws DomainError on a host mismatch.
PartialIso compose_fisg(const PartialIso& psi, const PartialIso& phi);

// Restriction to phi^-1(C) where C is induced on the component of the root in
// Im(phi) & Dom(psi). Throws DomainError on host or root mismatch.
PartialIso compose_tisg(const PartialIso& psi, const PartialIso& phi);

// Restriction to the longest common prefix of the codomain path of phi and
// the domain path of psi.
PartialIso compose_pisg(const PartialIso& psi, const PartialIso& phi);

PartialIso compose(Kind kind, const PartialIso& psi, const PartialIso& phi);

bool is_idempotent(const PartialIso& f, Kind kind);

// e <= f iff e∘f == e. Throws DomainError unless both are idempotent.
bool natural_leq(const PartialIso& e, const PartialIso& f, Kind kind);

// Checks that the element is a genuine isomorphism of its flavor: valid
// subgraphs, bijective incidence-preserving maps, root fixed, path carried.
std::optional<std::string> validate(const PartialIso& f);

std::string describe(const PartialIso& f);

}  // namespace isg

#endif  // ISG_PARTIAL_ISO_HPP_
