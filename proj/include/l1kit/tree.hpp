#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l1kit/cluster.hpp"

namespace l1kit {

// ab|c: a and b form a cherry relative to outgroup c. `a < b` always.
struct RootedTriple {
  Taxon a;
  Taxon b;
  Taxon outgroup;

  RootedTriple(Taxon x, Taxon y, Taxon out);
  std::string to_string() const;  // "a,b|c"

  friend bool operator==(const RootedTriple&, const RootedTriple&) = default;
  friend auto operator<=>(const RootedTriple&, const RootedTriple&) = default;
};

class TreeBuilder;

// Rooted binary phylogenetic X-tree.
//
// Trees are immutable values held in canonical layout: children of every
// internal vertex are ordered by the lexicographically least leaf label in
// their subtree, and vertices are numbered in preorder, so vertex 0 is the
// root. Two trees are isomorphic exactly when their canonical keys agree.
class Tree {
 public:
  using Vertex = int;
  static constexpr Vertex kNone = -1;

  Tree() = default;

  // Grammar: tree := node ';' ; node := label | '(' node ',' node ')'.
  static Tree parse_newick(std::string_view text);
  static Tree single_leaf(Taxon label);

  // Canonical Newick, terminated by ';'.
  std::string newick() const { return key_ + ';'; }
  // Canonical Newick without the trailing ';'. Doubles as a hash key.
  const std::string& key() const { return key_; }

  bool empty() const { return nodes_.empty(); }
  Vertex root() const { return nodes_.empty() ? kNone : 0; }
  std::size_t vertex_count() const { return nodes_.size(); }
  std::size_t leaf_count() const { return (nodes_.size() + 1) / 2; }

  bool is_leaf(Vertex v) const { return nodes_[v].children[0] == kNone; }
  Vertex parent(Vertex v) const { return nodes_[v].parent; }
  const std::array<Vertex, 2>& children(Vertex v) const {
    return nodes_[v].children;
  }
  const Taxon& label(Vertex v) const { return nodes_[v].label; }

  Cluster taxa() const;
  std::optional<Vertex> find_leaf(std::string_view label) const;

  // C(v) for every vertex, indexed by vertex.
  std::vector<Cluster> vertex_clusters() const;
  // The set of clusters, sorted.
  std::vector<Cluster> clusters() const;
  bool has_cluster(const Cluster& c) const;
  std::optional<Vertex> find_cluster(const Cluster& c) const;

  // T|V. V must be a non-empty subset of the leaf set.
  Tree restrict_to(const Cluster& keep) const;
  // Replace the pendant subtree on `subtree_taxa` by the new leaf `label`.
  Tree subtree_reduce(const Cluster& subtree_taxa, const Taxon& label) const;
  // Replace leaf `leaf` by the tree `subtree` (inverse of subtree_reduce).
  Tree graft(std::string_view leaf, const Tree& subtree) const;
  // The pendant subtree rooted at `v`.
  Tree pendant_subtree(Vertex v) const;

  std::vector<RootedTriple> rooted_triples() const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.key_ == b.key_; }
  friend auto operator<=>(const Tree& a, const Tree& b) { return a.key_ <=> b.key_; }

 private:
  friend class TreeBuilder;
  struct Node {
    Vertex parent = kNone;
    std::array<Vertex, 2> children{kNone, kNone};
    Taxon label;
  };

  std::vector<Node> nodes_;
  std::string key_;
};

// Accumulates vertices bottom-up; `build` canonicalises the layout and
// rejects duplicate or invalid labels.
class TreeBuilder {
 public:
  int leaf(Taxon label);
  int join(int left, int right);
  // Copy the subtree of `source` rooted at `v`; returns its builder id.
  int copy(const Tree& source, Tree::Vertex v);
  Tree build(int root) const;

 private:
  struct Proto {
    int left = -1;
    int right = -1;
    Taxon label;
  };
  std::vector<Proto> protos_;
};

// Leaf-label-preserving isomorphism. Throws InvalidInput if the leaf sets
// differ.
bool tree_isomorphic(const Tree& a, const Tree& b);

}  // namespace l1kit
