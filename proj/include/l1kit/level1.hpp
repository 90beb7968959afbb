#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l1kit/hypercube.hpp"
#include "l1kit/network.hpp"
#include "l1kit/rspr.hpp"
#include "l1kit/tree.hpp"

namespace l1kit {

// Which clause of the nested subtree property two ordered pairs satisfy.
enum class NestedRelation {
  Disjoint,           // (I)   Y_p and Y_q are disjoint
  ContainedInMoving,  // (II)  Y_p within X_q, or Y_q within X_p
  NestedAvoiding,     // (III) Y_p inside Y_q and outside X_q, or the reverse
  None,
};

std::string to_string(NestedRelation r);

// Throws InvalidInput when p == q.
NestedRelation nested_relation(const OrderedPair& p, const OrderedPair& q);

// Pairs that are an ordered pair for every edge of `subset`.
std::vector<OrderedPair> verifying_pairs(const RsprGraph& g, const std::vector<int>& subset);

// Preference among several verifying pairs for one bit edge subset. Any
// choice is accepted or rejected alike; this only fixes which network is
// built.
enum class TieBreak {
  LargestMoving,   // largest |X'| first, then lexicographic
  SmallestMoving,  // smallest |X'| first, then lexicographic
};

struct Labelling {
  // candidates[i]: verifying pairs of E_{i+1}, in tie-break order.
  std::vector<std::vector<OrderedPair>> candidates;
  // chosen[i] verifies E_{i+1}.
  std::vector<OrderedPair> chosen;
};

// Bit subsets index `g.edges` directly.
std::optional<Labelling> choose_labelling(const RsprGraph& g, const HypercubeMap& map,
                                          TieBreak tie = TieBreak::LargestMoving);

enum class Reason { NotPowerOfTwo, NotHypercube, NoNestedLabelling };

std::string to_string(Reason r);  // e.g. "NOT_POWER_OF_TWO"

// Result of the decision stages (power-of-two gate, rSPR graph, hypercube
// recognition, labelling).
struct Analysis {
  int k = -1;  // -1 when |P| is not a power of two
  std::optional<Reason> reason;
  std::vector<Tree> trees;  // sorted by canonical key
  RsprGraph graph;
  Graph simple;
  std::optional<HypercubeMap> map;
  std::optional<Labelling> labelling;

  bool accepted() const { return !reason.has_value(); }
};

// Refuses more than 2^20 trees with CapExceeded. Throws InvalidInput on an
// empty collection, mixed leaf sets or duplicates.
Analysis analyze(const std::vector<Tree>& trees, TieBreak tie = TieBreak::LargestMoving);

// The graph stages alone, for a prebuilt (possibly synthetic) rSPR graph.
// `trees` of the result mirrors the graph's vertices.
Analysis analyze_graph(RsprGraph graph, TieBreak tie = TieBreak::LargestMoving);

// Rebuild a network from an accepted analysis and a pair sequence in which
// pairs[i] verifies E_{i+1} and all pairs are pairwise nested.
Network build_network(const Analysis& analysis, const std::vector<OrderedPair>& pairs);

struct Level1Result {
  Analysis analysis;
  std::optional<Network> network;

  std::optional<Reason> reason() const { return analysis.reason; }
};

Level1Result construct_level1(const std::vector<Tree>& trees,
                              TieBreak tie = TieBreak::LargestMoving);

struct Level1Enumeration {
  Analysis analysis;
  // Number of pair sequences that verify the nested subtree property.
  std::size_t sequence_count = 0;
  // One network per isomorphism class, ordered by eNewick.
  std::vector<Network> networks;
  // Pair sequence that produced each entry of `networks` (first found).
  std::vector<std::vector<OrderedPair>> sequences;
};

Level1Enumeration enumerate_level1(const std::vector<Tree>& trees);

// (C(v), C(u)) for each reticulation v with source u, sorted.
std::vector<OrderedPair> reticulation_pairs(const Network& n);

}  // namespace l1kit
