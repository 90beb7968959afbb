#include "l1kit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "l1kit/errors.hpp"

namespace l1kit::oracle {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidInput("empty range");
  return next() % n;
}

NetworkClass parse_network_class(const std::string& name) {
  if (name == "level1" || name == "level-1") return NetworkClass::Level1;
  if (name == "tree-child" || name == "tree_child") return NetworkClass::TreeChild;
  if (name == "normal") return NetworkClass::Normal;
  if (name == "any") return NetworkClass::Any;
  throw InvalidInput("unknown network class '" + name + "'");
}

std::string to_string(NetworkClass c) {
  switch (c) {
    case NetworkClass::Level1: return "level1";
    case NetworkClass::TreeChild: return "tree-child";
    case NetworkClass::Normal: return "normal";
    case NetworkClass::Any: return "any";
  }
  return "any";
}

std::vector<Taxon> numbered_taxa(int n) {
  std::vector<Taxon> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

namespace {

// Copy of `t` in which the subtree at `w` gets `extra` as a new sibling.
Tree insert_above(const Tree& t, Tree::Vertex w, const Tree& extra) {
  TreeBuilder b;
  std::function<int(Tree::Vertex)> go = [&](Tree::Vertex v) -> int {
    int here;
    if (t.is_leaf(v)) {
      here = b.leaf(t.label(v));
    } else {
      int l = go(t.children(v)[0]);
      int r = go(t.children(v)[1]);
      here = b.join(l, r);
    }
    if (v == w) here = b.join(here, b.copy(extra, extra.root()));
    return here;
  };
  return b.build(go(t.root()));
}

std::vector<Tree> sorted_unique(std::vector<Tree> trees) {
  std::sort(trees.begin(), trees.end());
  trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
  return trees;
}

bool in_class(const Network& n, NetworkClass target) {
  if (target == NetworkClass::Any) return true;
  const auto c = n.classify();
  switch (target) {
    case NetworkClass::Level1: return c.is_level1;
    case NetworkClass::TreeChild: return c.is_tree_child;
    case NetworkClass::Normal: return c.is_normal;
    case NetworkClass::Any: return true;
  }
  return true;
}

// Subdivide `tail` (or put a new root above the old one when tail.first is
// kNone) and `head`, then join the two new vertices. Empty when the result
// is not a valid network.
std::optional<Network> add_reticulation(const Network& n, Arc tail, Arc head) {
  if (tail == head) return std::nullopt;
  Network m = n;
  Network::Vertex u;
  if (tail.first == Network::kNone) {
    u = m.add_vertex();
    m.add_arc(u, m.root());
  } else {
    u = m.subdivide(tail.first, tail.second);
  }
  Network::Vertex v = m.subdivide(head.first, head.second);
  m.add_arc(u, v);
  try {
    m.check();
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  return m;
}

std::vector<Arc> tail_choices(const Network& n) {
  auto arcs = n.arcs();
  arcs.emplace_back(Network::kNone, n.root());
  return arcs;
}

}  // namespace

Tree random_tree(const std::vector<Taxon>& taxa, Rng& rng) {
  if (taxa.empty()) throw InvalidInput("random tree needs at least one taxon");
  // Each proto is a leaf or a join; insertion picks a proto and replaces it
  // by join(proto, new leaf).
  struct Proto {
    int left = -1, right = -1;
    Taxon label;
  };
  std::vector<Proto> protos{{-1, -1, taxa[0]}};
  std::vector<int> parent{-1};
  int root = 0;
  for (std::size_t i = 1; i < taxa.size(); ++i) {
    const int w = static_cast<int>(rng.below(protos.size()));
    const int leaf = static_cast<int>(protos.size());
    protos.push_back({-1, -1, taxa[i]});
    parent.push_back(-1);
    const int join = static_cast<int>(protos.size());
    const bool leaf_first = rng.below(2) == 0;
    protos.push_back({leaf_first ? leaf : w, leaf_first ? w : leaf, {}});
    parent.push_back(parent[w]);
    if (parent[w] < 0) {
      root = join;
    } else {
      Proto& p = protos[parent[w]];
      (p.left == w ? p.left : p.right) = join;
    }
    parent[w] = join;
    parent[leaf] = join;
  }
  TreeBuilder b;
  std::function<int(int)> go = [&](int p) -> int {
    if (protos[p].left < 0) return b.leaf(protos[p].label);
    int l = go(protos[p].left);
    int r = go(protos[p].right);
    return b.join(l, r);
  };
  return b.build(go(root));
}

Network random_network(const GeneratorConfig& cfg) {
  if (cfg.leaves < 1) throw InvalidInput("need at least one leaf");
  if (cfg.reticulations < 0) throw InvalidInput("negative reticulation budget");
  if (cfg.target == NetworkClass::Level1 && cfg.reticulations > cfg.leaves - 1) {
    throw InvalidInput("level-1 networks have at most |X| - 1 reticulations");
  }
  Rng rng(cfg.seed);
  // Each step tries every (tail, head) pair in random order. A dead end
  // restarts from a fresh tree.
  constexpr int kRestarts = 200;
  for (int restart = 0; restart < kRestarts; ++restart) {
    Network net = Network::from_tree(random_tree(numbered_taxa(cfg.leaves), rng));
    bool stuck = false;
    for (int r = 0; r < cfg.reticulations && !stuck; ++r) {
      std::vector<std::pair<Arc, Arc>> pairs;
      for (const Arc& tail : tail_choices(net)) {
        for (const Arc& head : net.arcs()) pairs.emplace_back(tail, head);
      }
      for (std::size_t i = pairs.size(); i > 1; --i) {
        std::swap(pairs[i - 1], pairs[rng.below(i)]);
      }
      stuck = true;
      for (const auto& [tail, head] : pairs) {
        auto cand = add_reticulation(net, tail, head);
        if (!cand || !in_class(*cand, cfg.target)) continue;
        if (cfg.forbid_trivial && cand->classify().is_level1 &&
            cand->has_trivial_reticulation()) {
          continue;
        }
        net = std::move(*cand);
        stuck = false;
        break;
      }
    }
    if (!stuck) return net;
  }
  throw InvalidInput("could not place " + std::to_string(cfg.reticulations) +
                     " reticulations within the target class");
}

std::vector<Tree> enumerate_all_trees(const Cluster& taxa) {
  if (taxa.empty()) return {};
  if (taxa.size() > 8) throw InvalidInput("tree enumeration is limited to 8 taxa");
  const auto& xs = taxa.members();
  std::vector<Tree> trees{Tree::single_leaf(xs[0])};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Tree leaf = Tree::single_leaf(xs[i]);
    std::vector<Tree> next;
    for (const auto& t : trees) {
      for (std::size_t w = 0; w < t.vertex_count(); ++w) {
        next.push_back(insert_above(t, static_cast<Tree::Vertex>(w), leaf));
      }
    }
    trees = std::move(next);
  }
  return sorted_unique(std::move(trees));
}

std::vector<Tree> brute_display_set(const Network& n, int cap) {
  const auto rets = n.reticulations();
  if (static_cast<int>(rets.size()) > cap) throw CapExceeded("brute display set cap exceeded");
  const std::size_t count = n.vertex_count();
  std::vector<Tree> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rets.size()); ++mask) {
    std::vector<std::set<int>> par(count), ch(count);
    std::vector<char> alive(count, 1);
    for (auto [u, v] : n.arcs()) {
      par[v].insert(u);
      ch[u].insert(v);
    }
    for (std::size_t i = 0; i < rets.size(); ++i) {
      const int r = rets[i];
      const int drop = n.parents(r)[mask >> i & 1];
      par[r].erase(drop);
      ch[drop].erase(r);
    }
    auto is_taxon = [&](int v) { return n.is_leaf(v); };
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < count; ++v) {
        if (!alive[v]) continue;
        const int vi = static_cast<int>(v);
        if (ch[v].empty() && !is_taxon(vi)) {
          // (ii) an unlabelled vertex with no children
          for (int p : par[v]) ch[p].erase(vi);
          par[v].clear();
          alive[v] = 0;
          changed = true;
        } else if (par[v].empty() && ch[v].size() == 1) {
          // (iii) a root with a single child
          par[*ch[v].begin()].erase(vi);
          ch[v].clear();
          alive[v] = 0;
          changed = true;
        } else if (par[v].size() == 1 && ch[v].size() == 1) {
          // (i) in-degree one and out-degree one
          const int p = *par[v].begin();
          const int c = *ch[v].begin();
          ch[p].erase(vi);
          par[c].erase(vi);
          ch[p].insert(c);
          par[c].insert(p);
          par[v].clear();
          ch[v].clear();
          alive[v] = 0;
          changed = true;
        }
      }
    }
    int root = -1;
    for (std::size_t v = 0; v < count; ++v) {
      if (alive[v] && par[v].empty()) {
        if (root >= 0) throw InvariantError("clean-up left two roots");
        root = static_cast<int>(v);
      }
    }
    TreeBuilder b;
    std::function<int(int)> go = [&](int v) -> int {
      if (ch[v].empty()) return b.leaf(n.label(v));
      if (ch[v].size() != 2) throw InvariantError("clean-up left a non-binary vertex");
      int l = go(*ch[v].begin());
      int r = go(*ch[v].rbegin());
      return b.join(l, r);
    };
    out.push_back(b.build(go(root)));
  }
  return sorted_unique(std::move(out));
}

std::vector<Tree> rspr_neighbours(const Tree& t) {
  const Cluster all = t.taxa();
  const auto clusters = t.vertex_clusters();
  std::vector<Tree> out;
  for (std::size_t v = 1; v < t.vertex_count(); ++v) {
    const Tree pruned = t.pendant_subtree(static_cast<Tree::Vertex>(v));
    const Tree rest = t.restrict_to(all.minus(clusters[v]));
    for (std::size_t w = 0; w < rest.vertex_count(); ++w) {
      out.push_back(insert_above(rest, static_cast<Tree::Vertex>(w), pruned));
    }
  }
  out = sorted_unique(std::move(out));
  out.erase(std::remove(out.begin(), out.end(), t), out.end());
  return out;
}

std::vector<Tree> rnni_neighbours(const Tree& t) {
  std::vector<Tree> out;
  for (std::size_t vi = 1; vi < t.vertex_count(); ++vi) {
    const auto v = static_cast<Tree::Vertex>(vi);
    if (t.is_leaf(v)) continue;
    const auto u = t.parent(v);
    const auto s = t.children(u)[0] == v ? t.children(u)[1] : t.children(u)[0];
    for (int keep = 0; keep < 2; ++keep) {
      // Swap the sibling s with child `1 - keep` of v.
      const auto stay = t.children(v)[keep];
      const auto swap = t.children(v)[1 - keep];
      TreeBuilder b;
      std::function<int(Tree::Vertex)> go = [&](Tree::Vertex x) -> int {
        if (x == u) {
          int inner = b.join(b.copy(t, stay), b.copy(t, s));
          return b.join(inner, b.copy(t, swap));
        }
        if (t.is_leaf(x)) return b.leaf(t.label(x));
        int l = go(t.children(x)[0]);
        int r = go(t.children(x)[1]);
        return b.join(l, r);
      };
      out.push_back(b.build(go(t.root())));
    }
  }
  out = sorted_unique(std::move(out));
  out.erase(std::remove(out.begin(), out.end(), t), out.end());
  return out;
}

int brute_rspr_distance(const Tree& a, const Tree& b, int max_depth) {
  if (a.taxa() != b.taxa()) throw InvalidInput("trees have different leaf sets");
  if (a.leaf_count() > 8) throw InvalidInput("BFS distance is limited to 8 taxa");
  if (a == b) return 0;
  std::map<std::string, int> dist{{a.key(), 0}};
  std::queue<Tree> todo;
  todo.push(a);
  while (!todo.empty()) {
    Tree t = todo.front();
    todo.pop();
    const int d = dist[t.key()];
    if (max_depth >= 0 && d >= max_depth) continue;
    for (auto& nb : rspr_neighbours(t)) {
      if (dist.count(nb.key())) continue;
      if (nb == b) return d + 1;
      dist[nb.key()] = d + 1;
      todo.push(std::move(nb));
    }
  }
  return -1;
}

bool brute_network_isomorphic(const Network& a, const Network& b) {
  const std::size_t n = a.vertex_count();
  if (n > 12 || b.vertex_count() > 12) throw InvalidInput("brute isomorphism needs <= 12 vertices");
  if (n != b.vertex_count() || a.arc_count() != b.arc_count() || a.taxa() != b.taxa()) {
    return false;
  }
  std::vector<std::vector<char>> arc_b(n, std::vector<char>(n, 0));
  for (auto [u, v] : b.arcs()) arc_b[u][v] = 1;
  std::vector<std::vector<char>> arc_a(n, std::vector<char>(n, 0));
  for (auto [u, v] : a.arcs()) arc_a[u][v] = 1;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      const int xi = static_cast<int>(x), yi = static_cast<int>(y);
      if (a.parents(xi).size() != b.parents(yi).size() ||
          a.children(xi).size() != b.children(yi).size() || a.label(xi) != b.label(yi)) {
        continue;
      }
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        ok = arc_a[z][x] == arc_b[image[z]][y] && arc_a[x][z] == arc_b[y][image[z]];
      }
      if (!ok) continue;
      image[x] = yi;
      used[y] = 1;
      if (place(x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return place(0);
}

std::vector<Network> exhaustive_level1(const std::vector<Tree>& trees, int max_k) {
  const std::vector<Tree> target = sorted_unique(trees);
  std::map<std::string, Network> results;
  std::map<std::string, Network> frontier;
  for (const auto& t : target) {
    Network n = Network::from_tree(t);
    frontier.emplace(n.canonical_form(), n);
    if (target.size() == 1) results.emplace(n.canonical_form(), n);
  }
  for (int step = 1; step <= max_k; ++step) {
    std::map<std::string, Network> next;
    for (const auto& [key, net] : frontier) {
      for (const Arc& tail : tail_choices(net)) {
        for (const Arc& head : net.arcs()) {
          auto cand = add_reticulation(net, tail, head);
          if (!cand || !cand->is_level1()) continue;
          std::string ckey = cand->canonical_form();
          if (next.count(ckey)) continue;
          const auto shown = brute_display_set(*cand);
          const bool inside = std::all_of(shown.begin(), shown.end(), [&](const Tree& t) {
            return std::binary_search(target.begin(), target.end(), t);
          });
          if (!inside) continue;
          if (shown == target && !cand->has_trivial_reticulation()) results.emplace(ckey, *cand);
          next.emplace(std::move(ckey), std::move(*cand));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Network> out;
  for (auto& [key, n] : results) out.push_back(std::move(n));
  std::sort(out.begin(), out.end(),
            [](const Network& x, const Network& y) { return x.enewick() < y.enewick(); });
  return out;
}

}  // namespace l1kit::oracle
