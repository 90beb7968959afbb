#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "fixtures.hpp"
#include "l1kit/errors.hpp"
#include "l1kit/hypercube.hpp"
#include "l1kit/oracle.hpp"

using namespace l1kit;

namespace {

using Partition = std::set<std::set<std::pair<int, int>>>;

std::vector<int> random_permutation(int n, oracle::Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

Graph permuted(const Graph& g, const std::vector<int>& p) {
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges) e.emplace_back(p[a], p[b]);
  return Graph::from_edges(g.n, e);
}

// Brute force: try every vertex bijection onto Q_k.
bool brute_is_hypercube(const Graph& g) {
  const int n = g.n;
  if (n == 0 || (n & (n - 1)) != 0) return false;
  const int k = std::countr_zero(static_cast<unsigned>(n));
  const Graph q = Graph::hypercube(k);
  if (q.edges.size() != g.edges.size()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [a, b] : g.edges) {
      if (q.find_edge(p[a], p[b]) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Partition edge_partition(const Graph& g, const HypercubeMap& m,
                         const std::vector<int>& back) {
  Partition out;
  for (const auto& subset : m.bit_subsets) {
    std::set<std::pair<int, int>> s;
    for (int e : subset) {
      auto [a, b] = g.edges[e];
      s.insert(std::minmax(back[a], back[b]));
    }
    out.insert(s);
  }
  return out;
}

// E_j of Q_k by construction: edges flipping integer bit j.
Partition natural_partition(int k) {
  Partition out;
  for (int j = 0; j < k; ++j) {
    std::set<std::pair<int, int>> s;
    for (int v = 0; v < (1 << k); ++v) {
      if (!(v >> j & 1)) s.insert({v, v | 1 << j});
    }
    out.insert(s);
  }
  return out;
}

int components_without(const Graph& g, const std::vector<int>& removed,
                       std::vector<int>& comp) {
  std::set<int> gone(removed.begin(), removed.end());
  std::vector<std::vector<int>> adj(g.n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (gone.count(static_cast<int>(e))) continue;
    adj[g.edges[e].first].push_back(g.edges[e].second);
    adj[g.edges[e].second].push_back(g.edges[e].first);
  }
  comp.assign(g.n, -1);
  int c = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (comp[w] < 0) {
          comp[w] = c;
          q.push(w);
        }
      }
    }
    ++c;
  }
  return c;
}

Graph induced(const Graph& g, const std::vector<int>& comp, int which) {
  std::vector<int> id(g.n, -1);
  int n = 0;
  for (int v = 0; v < g.n; ++v) {
    if (comp[v] == which) id[v] = n++;
  }
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges) {
    if (comp[a] == which && comp[b] == which) e.emplace_back(id[a], id[b]);
  }
  return Graph::from_edges(n, e);
}

bool same_cycle(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

// Depth-first search for a Hamilton cycle from avoid[0] that differs from
// `avoid` up to rotation and reflection.
std::vector<int> other_hamilton_cycle(const Graph& g, const std::vector<int>& avoid) {
  const auto adj = g.adjacency();
  std::vector<int> path{avoid[0]};
  std::vector<char> used(g.n, 0);
  used[avoid[0]] = 1;
  std::function<bool()> go = [&]() -> bool {
    if (static_cast<int>(path.size()) == g.n) {
      return g.find_edge(path.back(), path.front()) >= 0 && !same_cycle(path, avoid);
    }
    for (int w : adj[path.back()]) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (go()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  REQUIRE(go());
  return path;
}

}  // namespace

TEST_CASE("gray codes") {
  CHECK(gray_code(0) == std::vector<BitString>{""});
  CHECK(gray_code(1) == std::vector<BitString>{"0", "1"});
  CHECK(gray_code(2) == std::vector<BitString>{"00", "01", "11", "10"});
  for (int k = 1; k <= 10; ++k) {
    const auto g = gray_code(k);
    REQUIRE(g.size() == (std::size_t{1} << k));
    CHECK(std::set<BitString>(g.begin(), g.end()).size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(hamming_distance(g[i], g[(i + 1) % g.size()]) == 1);
    }
  }
  CHECK_THROWS_AS(gray_code(21), InvalidInput);
  CHECK_THROWS_AS(gray_code(-1), InvalidInput);
}

TEST_CASE("recognition of small graphs") {
  const auto q2 = hypercube_iso(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  REQUIRE(q2.has_value());
  CHECK(q2->k == 2);
  REQUIRE(q2->bit_subsets.size() == 2);
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (const auto& s : q2->bit_subsets) {
    REQUIRE(s.size() == 2);
    auto [a, b] = c4.edges[s[0]];
    auto [c, d] = c4.edges[s[1]];
    CHECK(std::set<int>{a, b, c, d}.size() == 4);  // opposite edges
  }

  CHECK_FALSE(hypercube_iso(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  CHECK_FALSE(hypercube_iso(Graph::from_edges(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(hypercube_iso(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));

  const auto q0 = hypercube_iso(Graph::from_edges(1, {}));
  REQUIRE(q0.has_value());
  CHECK(q0->k == 0);
  CHECK(q0->bitstring(0).empty());
  const auto q1 = hypercube_iso(Graph::from_edges(2, {{0, 1}}));
  REQUIRE(q1.has_value());
  CHECK(q1->k == 1);
  CHECK(q1->bit_subsets == std::vector<std::vector<int>>{{0}});
  CHECK_FALSE(hypercube_iso(Graph::from_edges(2, {})));
}

TEST_CASE("recognition agrees with brute force") {
  oracle::Rng rng(99);
  for (int k = 1; k <= 3; ++k) {
    const int n = 1 << k;
    const Graph q = Graph::hypercube(k);
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    }
    for (int trial = 0; trial < 60; ++trial) {
      Graph g;
      if (trial % 3 == 0) {
        g = permuted(q, random_permutation(n, rng));
      } else {
        // Random graph with the hypercube's edge count.
        auto pool = all;
        for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
        pool.resize(q.edges.size());
        g = Graph::from_edges(n, pool);
      }
      const auto m = hypercube_iso(g);
      CHECK(m.has_value() == brute_is_hypercube(g));
      if (!m) continue;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        CHECK(std::popcount(m->label[a] ^ m->label[b]) == 1);
      }
    }
  }
}

TEST_CASE("maps of relabelled hypercubes") {
  oracle::Rng rng(5);
  for (int k = 0; k <= 6; ++k) {
    const Graph q = Graph::hypercube(k);
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_permutation(q.n, rng);
      std::vector<int> back(q.n);
      for (int v = 0; v < q.n; ++v) back[p[v]] = v;
      const Graph g = permuted(q, p);
      const auto m = hypercube_iso(g);
      REQUIRE(m.has_value());
      CHECK(m->k == k);
      // Bijection onto k-bit strings.
      std::set<std::uint32_t> labels(m->label.begin(), m->label.end());
      CHECK(labels.size() == static_cast<std::size_t>(q.n));
      CHECK(*labels.rbegin() < (1u << k) + (k == 0 ? 1u : 0u));
      // Bit subsets: a canonical partition into perfect matchings.
      CHECK(edge_partition(g, *m, back) == natural_partition(k));
      for (int i = 0; i < k; ++i) {
        CHECK(m->bit_subsets[i].size() == (std::size_t{1} << (k - 1)));
        if (i) CHECK(m->bit_subsets[i - 1][0] < m->bit_subsets[i][0]);
        for (int e : m->bit_subsets[i]) CHECK(m->subset_of_edge(g, e) == i);
      }
      for (int v = 0; v < g.n; ++v) {
        for (int i = 0; i < k; ++i) {
          const int w = m->neighbour(v, i);
          const int e = g.find_edge(v, w);
          REQUIRE(e >= 0);
          CHECK(m->subset_of_edge(g, e) == i);
          BitString s = m->bitstring(v);
          s[i] = s[i] == '0' ? '1' : '0';
          CHECK(m->bitstring(w) == s);
        }
      }
    }
  }
}

TEST_CASE("removing a bit edge subset leaves two copies of Q_{k-1}") {
  for (int k = 1; k <= 5; ++k) {
    const Graph g = Graph::hypercube(k);
    const auto m = hypercube_iso(g);
    REQUIRE(m.has_value());
    for (const auto& subset : m->bit_subsets) {
      std::vector<int> comp;
      REQUIRE(components_without(g, subset, comp) == 2);
      for (int c = 0; c < 2; ++c) {
        const auto sub = hypercube_iso(induced(g, comp, c));
        REQUIRE(sub.has_value());
        CHECK(sub->k == k - 1);
      }
    }
  }
}

TEST_CASE("bit edge subset from a seed edge") {
  SUBCASE("Q_2") {
    const Graph q = Graph::hypercube(2);
    const std::vector<int> cycle{0, 1, 3, 2};
    const int e2 = q.find_edge(1, 3);
    const int e4 = q.find_edge(2, 0);
    auto want = std::vector<int>{e2, e4};
    std::sort(want.begin(), want.end());
    CHECK(bit_edge_subset_from_seed(q, cycle, e4) == want);
  }
  for (int k = 3; k <= 4; ++k) {
    CAPTURE(k);
    const Graph q = Graph::hypercube(k);
    const auto m = hypercube_iso(q);
    REQUIRE(m.has_value());
    const auto c1 = hamilton_cycle(q, *m);
    const auto c2 = other_hamilton_cycle(q, c1);
    REQUIRE(c1[0] == c2[0]);
    REQUIRE_FALSE(same_cycle(c1, c2));
    for (int i = 0; i < k; ++i) {
      const int f1 = q.find_edge(c1[0], m->neighbour(c1[0], i));
      const auto f = bit_edge_subset_from_seed(q, c1, f1);
      CHECK(f.size() == (std::size_t{1} << (k - 1)));
      std::set<int> ends;
      for (int e : f) {
        ends.insert(q.edges[e].first);
        ends.insert(q.edges[e].second);
      }
      CHECK(ends.size() == static_cast<std::size_t>(q.n));
      CHECK(f == m->bit_subsets[m->subset_of_edge(q, f1)]);
      CHECK(bit_edge_subset_from_seed(q, c2, f1) == f);
    }
  }
  const Graph q = Graph::hypercube(3);
  CHECK_THROWS_AS(bit_edge_subset_from_seed(q, {0, 1, 3, 2, 6, 7, 5, 4}, q.find_edge(1, 3)),
                  InvalidInput);
  CHECK_THROWS_AS(bit_edge_subset_from_seed(q, {0, 1, 2, 3, 4, 5, 6, 7}, 0), InvalidInput);
}

TEST_CASE("Hamilton cycles") {
  for (int k = 2; k <= 6; ++k) {
    const Graph q = Graph::hypercube(k);
    const auto m = hypercube_iso(q);
    const auto c = hamilton_cycle(q, *m);
    CHECK(c.size() == static_cast<std::size_t>(q.n));
    CHECK(std::set<int>(c.begin(), c.end()).size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(q.find_edge(c[i], c[(i + 1) % c.size()]) >= 0);
    }
  }
  const Graph q2 = Graph::hypercube(2);
  CHECK(same_cycle(hamilton_cycle(q2, *hypercube_iso(q2)), {0, 1, 3, 2}));
  const Graph q1 = Graph::hypercube(1);
  CHECK_THROWS_AS(hamilton_cycle(q1, *hypercube_iso(q1)), InvalidInput);

  const RsprGraph f4 = build_rspr_graph(fixtures::f4());
  const Graph g = Graph::of(f4);
  const auto m = hypercube_iso(g);
  REQUIRE(m.has_value());
  std::vector<int> want;
  for (const char* s : {fixtures::kT1, fixtures::kT2, fixtures::kT4, fixtures::kT3}) {
    want.push_back(static_cast<int>(
        std::find(f4.vertices.begin(), f4.vertices.end(), fixtures::tree(s)) -
        f4.vertices.begin()));
  }
  CHECK(same_cycle(hamilton_cycle(g, *m), want));
}
