#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "l1kit/errors.hpp"
#include "l1kit/oracle.hpp"

using namespace l1kit;
using namespace l1kit::oracle;

TEST_CASE("rng is deterministic") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng r(1);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
  CHECK_THROWS_AS(r.below(0), InvalidInput);
}

TEST_CASE("tree enumeration counts") {
  std::size_t want = 1;
  for (int n = 1; n <= 8; ++n) {
    if (n >= 3) want *= static_cast<std::size_t>(2 * n - 3);
    const auto all = enumerate_all_trees(Cluster(numbered_taxa(n)));
    CHECK(all.size() == want);
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  CHECK(enumerate_all_trees(Cluster(numbered_taxa(3))).size() == 3);
  CHECK(enumerate_all_trees(Cluster(numbered_taxa(5))).size() == 105);
  CHECK_THROWS_AS(enumerate_all_trees(Cluster(numbered_taxa(9))), InvalidInput);
}

TEST_CASE("neighbourhoods") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const Tree t = random_tree(numbered_taxa(n), rng);
    const auto nni = rnni_neighbours(t);
    const auto spr = rspr_neighbours(t);
    CHECK(nni.size() == static_cast<std::size_t>(2 * (n - 2)));
    CHECK(std::includes(spr.begin(), spr.end(), nni.begin(), nni.end()));
    CHECK_FALSE(std::binary_search(spr.begin(), spr.end(), t));
    for (const auto& s : spr) {
      CHECK(brute_rspr_distance(t, s) == 1);
      const auto back = rspr_neighbours(s);
      CHECK(std::binary_search(back.begin(), back.end(), t));
    }
  }
  const Tree a = fixtures::tree(fixtures::kT1);
  CHECK(brute_rspr_distance(a, fixtures::tree(fixtures::kT4)) == 2);
  CHECK(brute_rspr_distance(a, fixtures::tree(fixtures::kT4), 1) == -1);
  CHECK_THROWS_AS(brute_rspr_distance(a, fixtures::tree("((1,2),3);")), InvalidInput);
}

TEST_CASE("generator") {
  GeneratorConfig cfg;
  cfg.leaves = 7;
  cfg.reticulations = 3;
  cfg.seed = 1234;
  CHECK(random_network(cfg).enewick() == random_network(cfg).enewick());
  cfg.seed = 1235;
  const auto other = random_network(cfg).enewick();
  cfg.seed = 1234;
  CHECK(random_network(cfg).enewick() != other);

  cfg.reticulations = 0;
  CHECK(random_network(cfg).is_tree());

  cfg.reticulations = 7;
  CHECK_THROWS_AS(random_network(cfg), InvalidInput);
  cfg.leaves = 0;
  cfg.reticulations = 0;
  CHECK_THROWS_AS(random_network(cfg), InvalidInput);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int leaves = 2 + static_cast<int>(seed % 9);
    CAPTURE(seed);
    // Every non-trivial cycle needs fresh leaves; (|X| - 1) / 2 always fits.
    const int rets = static_cast<int>(seed % 4);
    const Network n = fixtures::generate(leaves, seed % 2 == 0 ? std::min(rets, (leaves - 1) / 2) : rets,
                                         NetworkClass::Level1, seed, seed % 2 == 0);
    n.check();
    CHECK(n.is_level1());
    CHECK(n.taxa() == Cluster(numbered_taxa(leaves)));
    if (seed % 2 == 0) CHECK_FALSE(n.has_trivial_reticulation());
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(fixtures::generate(6, 2, NetworkClass::TreeChild, seed).classify().is_tree_child);
    CHECK(fixtures::generate(6, 2, NetworkClass::Normal, seed).classify().is_normal);
  }
}

TEST_CASE("network classes by name") {
  CHECK(parse_network_class("level1") == NetworkClass::Level1);
  CHECK(parse_network_class("tree-child") == NetworkClass::TreeChild);
  CHECK(parse_network_class("normal") == NetworkClass::Normal);
  CHECK(parse_network_class("any") == NetworkClass::Any);
  CHECK_THROWS_AS(parse_network_class("level2"), InvalidInput);
  for (auto c : {NetworkClass::Level1, NetworkClass::TreeChild, NetworkClass::Normal,
                 NetworkClass::Any}) {
    CHECK(parse_network_class(to_string(c)) == c);
  }
}

TEST_CASE("brute display sets") {
  const Network t = fixtures::network("((1,2),3);");
  CHECK(brute_display_set(t).size() == 1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(brute_display_set(fixtures::generate(5, 1, NetworkClass::Any, seed)).size() <= 2);
  }
  CHECK_THROWS_AS(brute_display_set(fixtures::network(fixtures::kN4), 1), CapExceeded);
}

TEST_CASE("brute isomorphism") {
  const Network a = fixtures::network("((1)#H1,(#H1,2));");
  CHECK(brute_network_isomorphic(a, fixtures::network("((#H1,2),(1)#H1);")));
  CHECK_FALSE(brute_network_isomorphic(a, fixtures::network("((2)#H1,(#H1,1));")));
  CHECK_FALSE(brute_network_isomorphic(a, fixtures::network("(1,2);")));
}
