#include "l1kit/rspr.hpp"

#include <algorithm>
#include <set>

#include "l1kit/errors.hpp"

namespace l1kit {

std::string OrderedPair::to_string() const {
  return moving.to_string() + " | " + enclosing.to_string();
}

namespace {

void require_same_taxa(const Tree& t1, const Tree& t2) {
  if (t1.taxa() != t2.taxa()) throw InvalidInput("trees have different leaf sets");
}

// Vertices v of t1 whose cut yields a valid two-block forest.
std::vector<Tree::Vertex> valid_cuts(const Tree& t1, const Tree& t2) {
  require_same_taxa(t1, t2);
  if (t1 == t2) throw InvalidInput("trees are isomorphic (rSPR distance 0)");
  const Cluster all = t1.taxa();
  const auto c1 = t1.vertex_clusters();
  const auto c2 = t2.clusters();
  std::vector<Tree::Vertex> out;
  // Cutting the pendant root arc leaves {rho} alone, which only agrees for
  // isomorphic trees, so only the 2|X|-2 proper arcs need checking.
  for (std::size_t v = 1; v < c1.size(); ++v) {
    const Cluster& b = c1[v];
    if (!std::binary_search(c2.begin(), c2.end(), b)) continue;
    if (t1.restrict_to(b) != t2.restrict_to(b)) continue;
    const Cluster a = all.minus(b);
    if (t1.restrict_to(a) != t2.restrict_to(a)) continue;
    out.push_back(static_cast<Tree::Vertex>(v));
  }
  return out;
}

}  // namespace

std::vector<AgreementForest2> rspr_one(const Tree& t1, const Tree& t2) {
  const auto clusters = t1.vertex_clusters();
  const Cluster all = t1.taxa();
  std::vector<AgreementForest2> out;
  for (auto v : valid_cuts(t1, t2)) {
    out.push_back(AgreementForest2{all.minus(clusters[v]), clusters[v]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool rspr_distance_one(const Tree& t1, const Tree& t2) {
  require_same_taxa(t1, t2);
  if (t1 == t2) return false;
  return !valid_cuts(t1, t2).empty();
}

namespace {

std::vector<OrderedPair> moves_of(const Tree& t1, const Tree& t2) {
  const auto cuts = valid_cuts(t1, t2);
  const auto c1 = t1.vertex_clusters();
  const auto c2 = t2.clusters();
  std::vector<OrderedPair> out;
  for (auto v : cuts) {
    // Clusters of t1 above v form a chain, so the first common one is the
    // unique minimal one.
    auto u = t1.parent(v);
    while (u != Tree::kNone && !std::binary_search(c2.begin(), c2.end(), c1[u])) {
      u = t1.parent(u);
    }
    if (u == Tree::kNone) throw InvariantError("no common cluster above a moving subtree");
    out.push_back(OrderedPair{c1[v], c1[u]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<OrderedPair> moving_subtrees(const Tree& t1, const Tree& t2) {
  auto out = moves_of(t1, t2);
  if (out.empty()) throw InvalidInput("rSPR distance is not 1");
  return out;
}

bool is_rnni_one(const Tree& t1, const Tree& t2) {
  require_same_taxa(t1, t2);
  if (t1 == t2) return false;
  return valid_cuts(t1, t2).size() == 3;
}

std::vector<std::vector<int>> RsprGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

int RsprGraph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v),
                             [](const RsprEdge& e, const std::pair<int, int>& key) {
                               return std::make_pair(e.a, e.b) < key;
                             });
  if (it == edges.end() || it->a != u || it->b != v) return -1;
  return static_cast<int>(it - edges.begin());
}

RsprGraph build_rspr_graph(const std::vector<Tree>& trees) {
  RsprGraph g;
  g.vertices = trees;
  std::sort(g.vertices.begin(), g.vertices.end());
  for (std::size_t i = 1; i < g.vertices.size(); ++i) {
    if (g.vertices[i] == g.vertices[i - 1]) {
      throw InvalidInput("duplicate tree " + g.vertices[i].newick());
    }
  }
  if (!g.vertices.empty()) {
    const Cluster taxa = g.vertices[0].taxa();
    for (const auto& t : g.vertices) {
      if (t.taxa() != taxa) throw InvalidInput("trees have different leaf sets");
    }
  }
  const int n = static_cast<int>(g.vertices.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto moves = moves_of(g.vertices[a], g.vertices[b]);
      if (moves.empty()) continue;
      g.edges.push_back(RsprEdge{a, b, std::move(moves)});
    }
  }
  return g;
}

bool is_connected(const RsprGraph& g) {
  if (g.vertices.empty()) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(g.vertices.size(), 0);
  std::vector<int> todo{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        todo.push_back(w);
      }
    }
  }
  return reached == g.vertices.size();
}

}  // namespace l1kit
