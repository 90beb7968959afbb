#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "l1kit/display_set.hpp"
#include "l1kit/hypercube.hpp"
#include "l1kit/level1.hpp"
#include "l1kit/network.hpp"
#include "l1kit/rspr.hpp"

namespace l1kit {

nlohmann::json to_json(const Cluster& c);
nlohmann::json to_json(const OrderedPair& p);  // [X, Y]

// {"k", "size", "maximum", "trees", "encodings"}
nlohmann::json display_set_json(const DisplaySet& ds);

// {"vertices", "edges": [{"a", "b", "moves", "bit"}], "connected", "hypercube"}
nlohmann::json rspr_graph_json(const RsprGraph& g, const std::optional<HypercubeMap>& map);

// Vertices are labelled by index with the Newick as tooltip; edges carry
// their ordered pairs and, given a map, a colour per bit edge subset.
std::string rspr_graph_dot(const RsprGraph& g, const std::optional<HypercubeMap>& map);

// {"decision", "reason", "k", "bit_subsets", "chosen_pairs", "network",
//  "all_networks"}
nlohmann::json level1_json(const Analysis& analysis, const std::optional<Network>& network,
                           const std::vector<Network>& all_networks);

nlohmann::json classification_json(const Network& n, const NetworkClassification& c);

}  // namespace l1kit
