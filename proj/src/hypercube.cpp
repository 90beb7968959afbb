#include "l1kit/hypercube.hpp"

#include <algorithm>
#include <bit>

#include "l1kit/errors.hpp"

namespace l1kit {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw InvalidInput("invalid edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidInput("duplicate edge");
  }
  return Graph{n, std::move(edges)};
}

Graph Graph::of(const RsprGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.emplace_back(e.a, e.b);
  return from_edges(static_cast<int>(g.vertices.size()), std::move(edges));
}

Graph Graph::hypercube(int k) {
  const int n = 1 << k;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < k; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return from_edges(n, std::move(edges));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

int Graph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

std::vector<BitString> gray_code(int k) {
  if (k < 0 || k > 20) throw InvalidInput("gray code length must be in [0, 20]");
  std::vector<BitString> out;
  const std::uint32_t n = 1u << k;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t g = i ^ (i >> 1);
    BitString s(k, '0');
    for (int c = 0; c < k; ++c) {
      if (g >> (k - 1 - c) & 1) s[c] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

BitString HypercubeMap::bitstring(int v) const {
  BitString s(k, '0');
  for (int c = 0; c < k; ++c) {
    if (label[v] >> (k - 1 - c) & 1) s[c] = '1';
  }
  return s;
}

int HypercubeMap::subset_of_edge(const Graph& g, int edge) const {
  const auto [a, b] = g.edges[edge];
  const std::uint32_t diff = label[a] ^ label[b];
  return k - 1 - std::countr_zero(diff);
}

int HypercubeMap::neighbour(int v, int i) const {
  return vertex_of_[label[v] ^ (1u << (k - 1 - i))];
}

std::optional<HypercubeMap> hypercube_iso(const Graph& g) {
  const int n = g.n;
  if (n <= 0 || !std::has_single_bit(static_cast<unsigned>(n))) return std::nullopt;
  const int k = std::countr_zero(static_cast<unsigned>(n));
  if (g.edges.size() != static_cast<std::size_t>(k) * (n / 2)) return std::nullopt;
  const auto adj = g.adjacency();
  for (const auto& row : adj) {
    if (static_cast<int>(row.size()) != k) return std::nullopt;
  }

  HypercubeMap map;
  map.k = k;
  map.label.assign(n, 0);
  // Label neighbours of vertex 0 with unit vectors, then give every vertex
  // at distance d the OR of its neighbours at distance d - 1.
  std::vector<int> dist(n, -1);
  std::vector<int> order{0};
  dist[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : adj[order[i]]) {
      if (dist[w] < 0) {
        dist[w] = dist[order[i]] + 1;
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  for (int j = 0; j < k; ++j) map.label[adj[0][j]] = 1u << j;
  for (int v : order) {
    if (dist[v] < 2) continue;
    std::uint32_t l = 0;
    for (int w : adj[v]) {
      if (dist[w] == dist[v] - 1) l |= map.label[w];
    }
    if (std::popcount(l) != dist[v]) return std::nullopt;
    map.label[v] = l;
  }
  std::vector<int> vertex_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (vertex_of[map.label[v]] >= 0) return std::nullopt;
    vertex_of[map.label[v]] = v;
  }
  std::vector<std::vector<int>> by_bit(k);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    const std::uint32_t diff = map.label[a] ^ map.label[b];
    if (std::popcount(diff) != 1) return std::nullopt;
    by_bit[std::countr_zero(diff)].push_back(static_cast<int>(e));
  }

  // Canonical order of the subsets, then rename bits to match.
  std::vector<int> bits(k);
  for (int j = 0; j < k; ++j) bits[j] = j;
  std::sort(bits.begin(), bits.end(),
            [&](int x, int y) { return by_bit[x].front() < by_bit[y].front(); });
  std::vector<int> position(k);
  for (int i = 0; i < k; ++i) {
    position[bits[i]] = i;
    map.bit_subsets.push_back(by_bit[bits[i]]);
  }
  for (int v = 0; v < n; ++v) {
    std::uint32_t l = 0;
    for (int j = 0; j < k; ++j) {
      if (map.label[v] >> j & 1) l |= 1u << (k - 1 - position[j]);
    }
    map.label[v] = l;
  }
  map.vertex_of_.assign(n, -1);
  for (int v = 0; v < n; ++v) map.vertex_of_[map.label[v]] = v;
  return map;
}

std::vector<int> bit_edge_subset_from_seed(const Graph& g, const std::vector<int>& cycle,
                                           int f1) {
  const int n = g.n;
  if (n < 4 || static_cast<int>(cycle.size()) != n) {
    throw InvalidInput("need a Hamilton cycle of a hypercube with k >= 2");
  }
  const auto adj = g.adjacency();
  auto adjacent = [&](int a, int b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };
  for (int i = 0; i < n; ++i) {
    if (!adjacent(cycle[i], cycle[(i + 1) % n])) throw InvalidInput("not a Hamilton cycle");
  }
  if (f1 < 0 || f1 >= static_cast<int>(g.edges.size())) throw InvalidInput("no such edge");
  auto [fa, fb] = g.edges[f1];
  if (fa != cycle[0] && fb != cycle[0]) {
    throw InvalidInput("seed edge must be incident with the first cycle vertex");
  }
  // f is tracked by its far endpoint `w` from the current cycle vertex.
  int w = fa == cycle[0] ? fb : fa;
  std::vector<int> f{f1};
  for (int i = 0; i + 1 < n; ++i) {
    const int v = cycle[i];
    const int next = cycle[i + 1];
    if (w == next) {
      // f_i = e_i: keep the same edge, now seen from v_{i+1}.
      w = v;
    } else {
      int found = -1;
      int count = 0;
      for (int z : adj[next]) {
        if (z != v && adjacent(z, w)) {
          found = z;
          ++count;
        }
      }
      if (count != 1) throw InvalidInput("no unique 4-cycle; graph is not a hypercube");
      w = found;
    }
    f.push_back(g.find_edge(next, w));
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<int> hamilton_cycle(const Graph& g, const HypercubeMap& map) {
  if (map.k < 2) throw InvalidInput("Hamilton cycles need k >= 2");
  const int n = 1 << map.k;
  std::vector<int> vertex_of(n, -1);
  for (int v = 0; v < n; ++v) vertex_of[map.label[v]] = v;
  std::vector<int> out;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) {
    out.push_back(vertex_of[i ^ (i >> 1)]);
  }
  for (int i = 0; i < n; ++i) {
    if (g.find_edge(out[i], out[(i + 1) % n]) < 0) {
      throw InvariantError("pulled-back Gray code is not a cycle of the graph");
    }
  }
  return out;
}

}  // namespace l1kit
