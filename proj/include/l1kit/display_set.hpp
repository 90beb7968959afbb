#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "l1kit/network.hpp"
#include "l1kit/tree.hpp"

namespace l1kit {

// A k-bit string; character i holds the bit of reticulation v_{i+1}.
using BitString = std::string;

int hamming_distance(const BitString& a, const BitString& b);

// Fixed reticulation order and arc designation used to encode trees.
struct BinaryAssignment {
  // v_1..v_k: topological order, ties by least leaf label below.
  std::vector<Network::Vertex> reticulations;
  // For v_i: the tail of its 0-arc and the tail of its 1-arc. The 0-arc is
  // the in-arc whose tail has the lexicographically smaller cluster.
  std::vector<Network::Vertex> zero_tail;
  std::vector<Network::Vertex> one_tail;

  static BinaryAssignment canonical(const Network& n);
  std::size_t size() const { return reticulations.size(); }
};

// The tree T_s: keep the 1-arc of v_i iff bit i of s is '1', then clean up.
Tree encode_tree(const Network& n, const BinaryAssignment& phi, const BitString& s);

struct DisplaySet {
  int k = 0;
  std::vector<Tree> trees;  // sorted by canonical key
  // Every bit string in counting order with the index of its tree.
  std::vector<std::pair<BitString, std::size_t>> encodings;

  std::size_t size() const { return trees.size(); }
  bool maximum() const { return trees.size() == (std::size_t{1} << k); }
  bool contains(const Tree& t) const;
};

// Reticulation cap for 2^k enumeration: L1KIT_CAP if set, otherwise 20.
int default_cap();

// Throws CapExceeded when the network has more than `cap` reticulations.
DisplaySet display_set(const Network& n, int cap = default_cap());
bool is_displayed(const Network& n, const Tree& t, int cap = default_cap());

}  // namespace l1kit
