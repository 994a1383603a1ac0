// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_JSON_IO_HPP_
#define ISG_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "isg/lattice.hpp"
#include "isg/semigroup.hpp"
#include "isg/theorems.hpp"

namespace isg {

using Json = nlohmann::json;

// {"vertices": [...], "edges": [{"id", "u", "w"}, ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"v": [...], "e": [...]} with host ids.
Json to_json(const SubgraphRef& s);

// {dom, cod, vmap, emap, path_dom, path_cod}; ids are host ids.
Json to_json(const PartialIso& f);
// Throws FormatError on unknown ids or when the result fails validate().
PartialIso partial_iso_from_json(const Json& j, const Host& host, Kind kind,
                                 std::optional<VertexIndex> root);

// {kind, root, host, elements, stats}
Json to_json(const InverseSemigroup& s);
InverseSemigroup semigroup_from_json(const Json& j, const Caps& caps = {});

Json to_json(const VerifyReport& r);
Json to_json(const LatticeReport& r);
Json to_json(const TheoremMatrix& m);

Json load_json(const std::string& path);
void save_json(const Json& j, const std::string& path);

}  // namespace isg

#endif  // ISG_JSON_IO_HPP_
