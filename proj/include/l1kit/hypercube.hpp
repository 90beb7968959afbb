#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "l1kit/display_set.hpp"
#include "l1kit/rspr.hpp"

namespace l1kit {

// Simple undirected graph. Edges are stored as (a, b) with a < b, sorted.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
  static Graph of(const RsprGraph& g);
  // The hypercube Q_k on vertices 0..2^k-1.
  static Graph hypercube(int k);

  std::vector<std::vector<int>> adjacency() const;
  int find_edge(int u, int v) const;  // index into `edges`, or -1
};

std::vector<BitString> gray_code(int k);

// A bijection from graph vertices to k-bit strings under which adjacency
// is Hamming distance one.
struct HypercubeMap {
  int k = 0;
  // Integer form of each vertex's string: character i is bit k-1-i.
  std::vector<std::uint32_t> label;
  // E_1..E_k as sorted edge indices. Ordered by their smallest edge index,
  // which makes the whole map independent of the isomorphism found.
  std::vector<std::vector<int>> bit_subsets;

  BitString bitstring(int v) const;
  // Index i such that the edge lies in E_{i+1}.
  int subset_of_edge(const Graph& g, int edge) const;
  // Neighbour of v across E_{i+1}.
  int neighbour(int v, int i) const;

 private:
  friend std::optional<HypercubeMap> hypercube_iso(const Graph& g);
  std::vector<int> vertex_of_;
};

std::optional<HypercubeMap> hypercube_iso(const Graph& g);

// Walk a Hamilton cycle v_1..v_n of a graph isomorphic to Q_k (k >= 2),
// carrying f_1 across unique 4-cycles. Returns the bit edge subset
// containing f_1 as sorted edge indices. `cycle` lists each vertex once;
// the closing edge runs from the last vertex back to the first.
std::vector<int> bit_edge_subset_from_seed(const Graph& g, const std::vector<int>& cycle,
                                           int f1);

// The reflected Gray code pulled back through the map, as a vertex
// sequence. Requires k >= 2.
std::vector<int> hamilton_cycle(const Graph& g, const HypercubeMap& map);

}  // namespace l1kit
