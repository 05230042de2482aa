#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "spanlab/graph.hpp"
#include "spanlab/labeling.hpp"
#include "spanlab/treedecomp.hpp"

namespace spanlab {

// PACE-style .gr: comment lines start with 'c', one header "p tw <n> <m>",
// then m lines "<u> <v>" with 1-based endpoints.
Graph parse_gr(std::istream& in);
std::string emit_gr(const Graph& g);

// PACE .td: header "s td <numBags> <maxBagSize> <n>", lines "b <id> <v...>"
// (ids 1..numBags each exactly once), then tree edges "<i> <j>".
TreeDecomposition parse_td(std::istream& in, int* graphN = nullptr);
std::string emit_td(const TreeDecomposition& td, int n);

// {"p":..,"q":..,"lambda":..,"labels":{"<1-based>":label,..},"algo":..,
//  "valid":true}; labels keyed by 1-based vertex in vertex order.
nlohmann::ordered_json labeling_json(const Graph& g, const Labeling& f, PqParams params,
                                     int lambda, const std::string& algo);

// Reads the labels object back; every vertex 1..n must be present.
Labeling labeling_from_json(const nlohmann::ordered_json& j, int n);

} // namespace spanlab
