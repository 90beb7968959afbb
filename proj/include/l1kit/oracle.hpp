#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l1kit/network.hpp"
#include "l1kit/tree.hpp"

// Brute-force reference implementations and random instance generators.
// Everything here is written independently of the main algorithms so the
// two can be checked against each other.
namespace l1kit::oracle {

// SplitMix64. Small, fast and fully determined by its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  Rng split() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

enum class NetworkClass { Level1, TreeChild, Normal, Any };

NetworkClass parse_network_class(const std::string& name);  // "level1", "tree-child", ...
std::string to_string(NetworkClass c);

struct GeneratorConfig {
  int leaves = 4;
  int reticulations = 0;
  NetworkClass target = NetworkClass::Level1;
  std::uint64_t seed = 0;
  // Reject reticulations whose underlying cycle has three vertices.
  bool forbid_trivial = false;
};

// Taxa "1", "2", ..., "n".
std::vector<Taxon> numbered_taxa(int n);

Tree random_tree(const std::vector<Taxon>& taxa, Rng& rng);

// Random tree plus `reticulations` arcs added one at a time by rejection,
// every intermediate network staying in the target class. Throws
// InvalidInput when the budget cannot be met.
Network random_network(const GeneratorConfig& cfg);

// All (2n-3)!! rooted binary trees on the taxa. |X| <= 8.
std::vector<Tree> enumerate_all_trees(const Cluster& taxa);

// Display set by deleting one in-arc per reticulation in every possible way
// and tidying the result with the three clean-up rules. Sorted, unique.
std::vector<Tree> brute_display_set(const Network& n, int cap = 12);

// Trees one rSPR move away (the input excluded). Sorted, unique.
std::vector<Tree> rspr_neighbours(const Tree& t);
// Trees one rooted NNI away. Sorted, unique.
std::vector<Tree> rnni_neighbours(const Tree& t);

// Breadth-first search over single rSPR moves. |X| <= 8. Returns -1 when
// the distance exceeds `max_depth` (a negative limit means no limit).
int brute_rspr_distance(const Tree& a, const Tree& b, int max_depth = -1);

// Exhaustive search for a label-preserving isomorphism. At most 12
// vertices per network.
bool brute_network_isomorphic(const Network& a, const Network& b);

// Every level-1 network with at most `max_k` reticulations, no trivial
// reticulation and display set exactly `trees`, up to isomorphism. Grows
// networks from the trees by adding arcs, pruning any network that
// displays a tree outside the collection.
std::vector<Network> exhaustive_level1(const std::vector<Tree>& trees, int max_k);

}  // namespace l1kit::oracle
