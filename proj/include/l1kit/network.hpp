#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "l1kit/cluster.hpp"
#include "l1kit/tree.hpp"

namespace l1kit {

using Arc = std::pair<int, int>;

struct NetworkClassification {
  bool is_tree_child = false;
  bool is_normal = false;
  bool is_level1 = false;
  std::vector<Arc> shortcuts;
  int reticulation_count = 0;
  // Largest number of reticulations inside one biconnected component.
  int level = 0;
};

// The underlying cycle of one reticulation in a level-1 network.
struct ReticulationCycle {
  int reticulation = -1;
  int source = -1;
  std::vector<int> vertices;  // sorted
  bool trivial() const { return vertices.size() == 3; }
};

// Rooted binary phylogenetic network.
//
// Vertices are dense integer ids. The mutating members exist for builders
// (parsers, generators, reconstruction); they do not re-validate, so call
// `check()` once a network is complete.
class Network {
 public:
  using Vertex = int;
  static constexpr Vertex kNone = -1;

  Network() = default;

  // Grammar: network := node ';'
  //          node := label hybrid? | '(' node (',' node)? ')' hybrid? | hybrid
  //          hybrid := '#H' digits
  // `(A)#H1` is a reticulation with child A. `(A,B)#H1` is a reticulation
  // above a tree vertex with children A and B. A bare `#H1` is the second
  // in-arc of that reticulation.
  static Network parse_enewick(std::string_view text);
  static Network from_tree(const Tree& tree);

  // Deterministic eNewick. Children are ordered by least leaf label, then
  // by canonical code; hybrid ids follow DFS order from the root.
  std::string enewick() const;

  // ---- structure
  std::size_t vertex_count() const { return nodes_.size(); }
  std::size_t arc_count() const;
  Vertex root() const;
  const std::vector<Vertex>& parents(Vertex v) const { return nodes_[v].parents; }
  const std::vector<Vertex>& children(Vertex v) const { return nodes_[v].children; }
  const Taxon& label(Vertex v) const { return nodes_[v].label; }
  bool is_leaf(Vertex v) const { return nodes_[v].children.empty(); }
  bool is_reticulation(Vertex v) const { return nodes_[v].parents.size() == 2; }
  bool is_tree_vertex(Vertex v) const {
    return nodes_[v].parents.size() <= 1 && nodes_[v].children.size() == 2;
  }
  std::vector<Vertex> reticulations() const;
  std::vector<Arc> arcs() const;
  std::optional<Vertex> find_leaf(std::string_view label) const;
  Cluster taxa() const;
  std::vector<Cluster> vertex_clusters() const;
  // Vertices in an order where every parent precedes its children.
  std::vector<Vertex> topological_order() const;
  bool is_tree() const { return reticulations().empty(); }
  // Throws InvalidInput if the network has reticulations.
  Tree to_tree() const;

  // ---- construction
  Vertex add_vertex();
  Vertex add_leaf(Taxon label);
  void set_label(Vertex v, Taxon label) { nodes_[v].label = std::move(label); }
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);
  // Insert a new vertex w on the arc (u, v); returns w.
  Vertex subdivide(Vertex u, Vertex v);
  // Remove a vertex with in-degree 1 and out-degree 1, joining its
  // neighbours. The vertex becomes isolated; call `compact()` afterwards.
  void suppress(Vertex v);
  // Drop isolated vertices and renumber.
  void compact();
  // Throws InvalidInput naming the first violated network invariant.
  void check() const;

  // ---- classes
  NetworkClassification classify() const;
  bool is_level1() const;
  // One entry per reticulation, in reticulation-id order. Throws
  // InvalidInput unless the network is level-1.
  std::vector<ReticulationCycle> level1_cycles() const;
  Vertex source_vertex(Vertex reticulation) const;
  // Repeatedly delete the in-arc of a trivial reticulation that does not
  // leave the cycle's source, suppressing the resulting degree-2 vertices.
  Network essential() const;
  bool has_trivial_reticulation() const;

  // ---- identity
  // Bottom-up codes: leaves by label, tree vertices by their sorted child
  // codes, reticulations by their child code. The arc multiset over these
  // codes is a complete invariant for tree-child networks.
  std::string canonical_form() const;
  std::vector<std::string> vertex_codes() const;

  std::string dot() const;

 private:
  struct Node {
    std::vector<Vertex> parents;
    std::vector<Vertex> children;
    Taxon label;
  };
  std::vector<Node> nodes_;
};

// Compares canonical forms; exact for tree-child networks.
bool network_isomorphic(const Network& a, const Network& b);

}  // namespace l1kit
