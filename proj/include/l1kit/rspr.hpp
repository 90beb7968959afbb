#pragma once

#include <compare>
#include <string>
#include <vector>

#include "l1kit/cluster.hpp"
#include "l1kit/tree.hpp"

namespace l1kit {

// A two-block agreement forest {A + rho, B}. The rho block is implicit:
// it is everything outside `moving`, plus the root marker.
struct AgreementForest2 {
  Cluster rho_block;  // A, without the marker
  Cluster moving;     // B

  friend bool operator==(const AgreementForest2&, const AgreementForest2&) = default;
  friend auto operator<=>(const AgreementForest2&, const AgreementForest2&) = default;
};

// (X', Y'): a moving subtree and the minimal common cluster above it.
struct OrderedPair {
  Cluster moving;
  Cluster enclosing;

  std::string to_string() const;  // "{..} | {..}"
  friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

// All two-block agreement forests obtained by cutting one arc of t1. The
// result is non-empty exactly when the rSPR distance is 1. Throws
// InvalidInput on different leaf sets or isomorphic inputs.
std::vector<AgreementForest2> rspr_one(const Tree& t1, const Tree& t2);

bool rspr_distance_one(const Tree& t1, const Tree& t2);

// M(t1, t2) with enclosing clusters, sorted. Throws InvalidInput unless
// the rSPR distance is 1.
std::vector<OrderedPair> moving_subtrees(const Tree& t1, const Tree& t2);

bool is_rnni_one(const Tree& t1, const Tree& t2);

struct RsprEdge {
  int a = 0;  // a < b
  int b = 0;
  std::vector<OrderedPair> moves;
};

struct RsprGraph {
  std::vector<Tree> vertices;  // sorted by canonical key
  std::vector<RsprEdge> edges; // sorted by (a, b)

  std::vector<std::vector<int>> adjacency() const;
  // Index into `edges`, or -1.
  int find_edge(int u, int v) const;
};

// Throws InvalidInput on mixed leaf sets or duplicate trees.
RsprGraph build_rspr_graph(const std::vector<Tree>& trees);
bool is_connected(const RsprGraph& g);

}  // namespace l1kit
