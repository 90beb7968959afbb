#pragma once

#include <string>
#include <vector>

#include <algorithm>
#include <cstdint>

#include "l1kit/network.hpp"
#include "l1kit/oracle.hpp"
#include "l1kit/tree.hpp"

namespace l1kit::fixtures {

inline const char* kT1 = "((((1,2),(3,4)),5),6);";
inline const char* kT2 = "(((1,2),(3,4)),(5,6));";
inline const char* kT3 = "(((2,((1,3),4)),5),6);";
inline const char* kT4 = "((2,((1,3),4)),(5,6));";
inline const char* kN4 = "(((((1)#H2,2),((#H2,3),4)))#H1,((#H1,5),6));";

inline Tree tree(const std::string& s) { return Tree::parse_newick(s); }
inline Network network(const std::string& s) { return Network::parse_enewick(s); }

inline std::vector<Tree> f4() { return {tree(kT1), tree(kT2), tree(kT3), tree(kT4)}; }

// Random network with the budget clamped to what the class allows: normal
// networks have at most |X| - 2 reticulations, tree-child ones |X| - 1.
inline Network generate(int leaves, int rets, oracle::NetworkClass c, std::uint64_t seed,
                        bool forbid_trivial = false) {
  if (c == oracle::NetworkClass::Normal) rets = std::min(rets, leaves - 2);
  if (c != oracle::NetworkClass::Any) rets = std::min(rets, leaves - 1);
  oracle::GeneratorConfig cfg;
  cfg.leaves = leaves;
  cfg.reticulations = std::max(rets, 0);
  cfg.target = c;
  cfg.seed = seed;
  cfg.forbid_trivial = forbid_trivial;
  return oracle::random_network(cfg);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(L1KIT_FIXTURE_DIR) + "/" + name;
}

}  // namespace l1kit::fixtures
