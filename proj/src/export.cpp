#include "l1kit/export.hpp"

namespace l1kit {

using nlohmann::json;

json to_json(const Cluster& c) { return json(c.members()); }

json to_json(const OrderedPair& p) { return json::array({to_json(p.moving), to_json(p.enclosing)}); }

json display_set_json(const DisplaySet& ds) {
  json trees = json::array();
  for (const auto& t : ds.trees) trees.push_back(t.newick());
  json enc = json::object();
  for (const auto& [s, i] : ds.encodings) enc[s] = i;
  return json{{"k", ds.k},
              {"size", ds.size()},
              {"maximum", ds.maximum()},
              {"trees", trees},
              {"encodings", enc}};
}

json rspr_graph_json(const RsprGraph& g, const std::optional<HypercubeMap>& map) {
  json vertices = json::array();
  for (const auto& t : g.vertices) vertices.push_back(t.newick());
  json edges = json::array();
  const Graph simple = Graph::of(g);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    json moves = json::array();
    for (const auto& m : g.edges[e].moves) moves.push_back(to_json(m));
    json item{{"a", g.edges[e].a}, {"b", g.edges[e].b}, {"moves", moves}};
    item["bit"] = map ? json(map->subset_of_edge(simple, static_cast<int>(e)) + 1) : json();
    edges.push_back(item);
  }
  json out{{"vertices", vertices}, {"edges", edges}, {"connected", is_connected(g)}};
  out["hypercube"] = map ? json(map->k) : json();
  return out;
}

std::string rspr_graph_dot(const RsprGraph& g, const std::optional<HypercubeMap>& map) {
  static const char* kColours[] = {"red",    "blue",  "darkgreen", "orange",
                                   "purple", "brown", "cyan4",     "magenta"};
  const Graph simple = Graph::of(g);
  std::string out = "graph rspr {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  t" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\", tooltip=\"" +
           g.vertices[v].newick() + "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    std::string label;
    for (std::size_t i = 0; i < edge.moves.size(); ++i) {
      if (i) label += "\\n";
      label += edge.moves[i].to_string();
    }
    out += "  t" + std::to_string(edge.a) + " -- t" + std::to_string(edge.b) + " [label=\"" +
           label + "\"";
    if (map) {
      const int bit = map->subset_of_edge(simple, static_cast<int>(e));
      out += std::string(", color=") + kColours[bit % 8];
    }
    out += "];\n";
  }
  out += "}\n";
  return out;
}

json level1_json(const Analysis& a, const std::optional<Network>& network,
                 const std::vector<Network>& all_networks) {
  json out;
  out["decision"] = a.accepted() ? "yes" : "no";
  out["reason"] = a.reason ? json(to_string(*a.reason)) : json();
  out["k"] = a.k;
  json subsets = json::array();
  if (a.map) {
    for (const auto& subset : a.map->bit_subsets) {
      json edges = json::array();
      for (int e : subset) edges.push_back({a.graph.edges[e].a, a.graph.edges[e].b});
      subsets.push_back(edges);
    }
  }
  out["bit_subsets"] = subsets;
  json chosen = json::array();
  if (a.labelling) {
    for (const auto& p : a.labelling->chosen) chosen.push_back(to_json(p));
  }
  out["chosen_pairs"] = chosen;
  out["network"] = network ? json(network->enewick()) : json();
  json all = json::array();
  for (const auto& n : all_networks) all.push_back(n.enewick());
  out["all_networks"] = all;
  return out;
}

json classification_json(const Network& n, const NetworkClassification& c) {
  // Vertex ids are internal, so shortcuts are reported by their clusters.
  const auto clusters = n.vertex_clusters();
  json shortcuts = json::array();
  for (auto [u, v] : c.shortcuts) shortcuts.push_back({to_json(clusters[u]), to_json(clusters[v])});
  return json{{"enewick", n.enewick()},
              {"leaves", n.taxa().size()},
              {"reticulations", c.reticulation_count},
              {"tree_child", c.is_tree_child},
              {"normal", c.is_normal},
              {"level1", c.is_level1},
              {"level", c.level},
              {"shortcuts", shortcuts}};
}

}  // namespace l1kit
