#include "l1kit/level1.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "l1kit/errors.hpp"

namespace l1kit {

std::string to_string(NestedRelation r) {
  switch (r) {
    case NestedRelation::Disjoint: return "I";
    case NestedRelation::ContainedInMoving: return "II";
    case NestedRelation::NestedAvoiding: return "III";
    case NestedRelation::None: return "none";
  }
  return "none";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::NotPowerOfTwo: return "NOT_POWER_OF_TWO";
    case Reason::NotHypercube: return "NOT_HYPERCUBE";
    case Reason::NoNestedLabelling: return "NO_NESTED_LABELLING";
  }
  return "";
}

NestedRelation nested_relation(const OrderedPair& p, const OrderedPair& q) {
  if (p == q) throw InvalidInput("nested relation of a pair with itself");
  if (!p.enclosing.intersects(q.enclosing)) return NestedRelation::Disjoint;
  if (p.enclosing.is_subset_of(q.moving) || q.enclosing.is_subset_of(p.moving)) {
    return NestedRelation::ContainedInMoving;
  }
  auto avoids = [](const OrderedPair& inner, const OrderedPair& outer) {
    return inner.enclosing.is_proper_subset_of(outer.enclosing) &&
           !outer.moving.intersects(inner.enclosing);
  };
  if (avoids(p, q) || avoids(q, p)) return NestedRelation::NestedAvoiding;
  return NestedRelation::None;
}

namespace {

bool compatible(const OrderedPair& p, const OrderedPair& q) {
  return p != q && nested_relation(p, q) != NestedRelation::None;
}

}  // namespace

std::vector<OrderedPair> verifying_pairs(const RsprGraph& g, const std::vector<int>& subset) {
  if (subset.empty()) return {};
  std::vector<OrderedPair> common = g.edges[subset[0]].moves;
  for (std::size_t i = 1; i < subset.size() && !common.empty(); ++i) {
    const auto& moves = g.edges[subset[i]].moves;
    std::vector<OrderedPair> next;
    std::set_intersection(common.begin(), common.end(), moves.begin(), moves.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

std::optional<Labelling> choose_labelling(const RsprGraph& g, const HypercubeMap& map,
                                          TieBreak tie) {
  Labelling out;
  for (const auto& subset : map.bit_subsets) {
    auto cands = verifying_pairs(g, subset);
    std::stable_sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
      if (a.moving.size() != b.moving.size()) {
        return tie == TieBreak::LargestMoving ? a.moving.size() > b.moving.size()
                                              : a.moving.size() < b.moving.size();
      }
      return a < b;
    });
    out.candidates.push_back(std::move(cands));
  }
  for (const auto& cands : out.candidates) {
    auto it = std::find_if(cands.begin(), cands.end(), [&](const OrderedPair& c) {
      return std::all_of(out.chosen.begin(), out.chosen.end(),
                         [&](const OrderedPair& p) { return compatible(c, p); });
    });
    if (it == cands.end()) return std::nullopt;
    out.chosen.push_back(*it);
  }
  return out;
}

Analysis analyze(const std::vector<Tree>& trees, TieBreak tie) {
  if (trees.empty()) throw InvalidInput("empty tree collection");
  if (trees.size() > (std::size_t{1} << 20)) {
    throw CapExceeded("refusing more than 2^20 trees");
  }
  Analysis a;
  a.trees = trees;
  std::sort(a.trees.begin(), a.trees.end());
  const Cluster taxa = a.trees[0].taxa();
  for (std::size_t i = 0; i < a.trees.size(); ++i) {
    if (a.trees[i].taxa() != taxa) throw InvalidInput("trees have different leaf sets");
    if (i && a.trees[i] == a.trees[i - 1]) {
      throw InvalidInput("duplicate tree " + a.trees[i].newick());
    }
  }
  const std::size_t n = a.trees.size();
  if (!std::has_single_bit(n)) {
    a.reason = Reason::NotPowerOfTwo;
    return a;
  }
  Analysis out = analyze_graph(build_rspr_graph(a.trees), tie);
  out.trees = std::move(a.trees);
  return out;
}

Analysis analyze_graph(RsprGraph graph, TieBreak tie) {
  Analysis a;
  a.trees = graph.vertices;
  const std::size_t n = graph.vertices.size();
  if (n == 0 || !std::has_single_bit(n)) {
    a.reason = Reason::NotPowerOfTwo;
    return a;
  }
  a.k = std::countr_zero(n);
  a.graph = std::move(graph);
  a.simple = Graph::of(a.graph);
  a.map = hypercube_iso(a.simple);
  if (!a.map) {
    a.reason = Reason::NotHypercube;
    return a;
  }
  a.labelling = choose_labelling(a.graph, *a.map, tie);
  if (!a.labelling) a.reason = Reason::NoNestedLabelling;
  return a;
}

namespace {

struct Step {
  OrderedPair pair;  // value at the moment it is reduced
  int bit = 0;       // index of the bit subset it verifies
  Taxon leaf;        // replacement leaf y_i
};

// Replace leaf `leaf` of `n` by a copy of `t`, reusing the leaf's vertex
// as the copy's root. Returns the network vertex of every tree vertex.
std::vector<Network::Vertex> graft_tree(Network& n, const Taxon& leaf, const Tree& t) {
  auto at = n.find_leaf(leaf);
  if (!at) throw InvariantError("replacement leaf " + leaf + " missing from the network");
  std::vector<Network::Vertex> image(t.vertex_count(), Network::kNone);
  std::function<void(Tree::Vertex, Network::Vertex)> fill = [&](Tree::Vertex v,
                                                                 Network::Vertex w) {
    image[v] = w;
    if (t.is_leaf(v)) return;
    for (auto c : t.children(v)) {
      Network::Vertex cw = t.is_leaf(c) ? n.add_leaf(t.label(c)) : n.add_vertex();
      n.add_arc(w, cw);
      fill(c, cw);
    }
  };
  if (t.is_leaf(t.root())) {
    n.set_label(*at, t.label(t.root()));
    image[t.root()] = *at;
  } else {
    n.set_label(*at, {});
    fill(t.root(), *at);
  }
  return image;
}

}  // namespace

Network build_network(const Analysis& analysis, const std::vector<OrderedPair>& pairs) {
  if (!analysis.accepted()) throw InvalidInput("analysis did not accept the collection");
  const int k = analysis.k;
  if (k == 0) return Network::from_tree(analysis.trees[0]);
  if (static_cast<int>(pairs.size()) != k) throw InvalidInput("need one pair per bit subset");
  const HypercubeMap& map = *analysis.map;
  const std::size_t count = analysis.trees.size();

  // Order by (|Y|, Y); nested pairs then form a disjoint-or-contained chain.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return size_then_lex_less(pairs[a].enclosing, pairs[b].enclosing);
  });
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Cluster& yi = pairs[order[i]].enclosing;
      const Cluster& yj = pairs[order[j]].enclosing;
      if (yi.intersects(yj) && !yi.is_proper_subset_of(yj)) {
        throw InvariantError("enclosing clusters do not form a chain");
      }
    }
  }

  const Cluster taxa = analysis.trees[0].taxa();
  std::set<Taxon> used(taxa.begin(), taxa.end());
  std::vector<OrderedPair> current;
  for (int i : order) current.push_back(pairs[i]);

  // stage[i][v]: tree of hypercube vertex v after i reductions.
  std::vector<std::vector<Tree>> stage{analysis.trees};
  std::vector<Step> steps;
  for (int i = 0; i < k; ++i) {
    std::string name = "_y" + std::to_string(i + 1);
    while (used.count(name)) name = "_" + name;
    used.insert(name);
    const Cluster y = current[i].enclosing;
    steps.push_back(Step{current[i], order[i], name});

    std::vector<Tree> next;
    next.reserve(count);
    for (const auto& t : stage.back()) {
      if (!t.has_cluster(y)) throw InvariantError(y.to_string() + " is not a common cluster");
      next.push_back(t.subtree_reduce(y, name));
    }
    stage.push_back(std::move(next));

    const Cluster leaf({name});
    for (int j = 0; j < k; ++j) {
      OrderedPair& p = current[j];
      if (y.is_subset_of(p.moving)) {
        p = OrderedPair{p.moving.minus(y).united(leaf), p.enclosing.minus(y).united(leaf)};
      } else if (y.is_proper_subset_of(p.enclosing) && !p.moving.intersects(y)) {
        p = OrderedPair{p.moving, p.enclosing.minus(y).united(leaf)};
      }
    }
  }

  const Tree& last = stage.back()[0];
  for (const auto& t : stage.back()) {
    if (t != last) throw InvariantError("reductions did not converge to a single tree");
  }

  Network net = Network::from_tree(last);
  for (int i = k - 1; i >= 0; --i) {
    const Step& step = steps[i];
    const auto& trees = stage[i];
    const Cluster& x = step.pair.moving;
    const Cluster& y = step.pair.enclosing;

    std::size_t t_index = 0;
    for (std::size_t v = 1; v < count; ++v) {
      if (trees[v] < trees[t_index]) t_index = v;
    }
    const Tree& t = trees[t_index];
    const Tree& s = trees[map.neighbour(static_cast<int>(t_index), step.bit)];
    const Tree t_y = t.restrict_to(y);
    if (t_y == s.restrict_to(y)) {
      throw InvariantError("neighbour across the bit subset agrees on " + y.to_string());
    }

    auto parent_cluster = [&](const Tree& tree) {
      auto xv = tree.find_cluster(x);
      if (!xv || tree.parent(*xv) == Tree::kNone) {
        throw InvariantError(x.to_string() + " is not a proper cluster");
      }
      return tree.vertex_clusters()[tree.parent(*xv)];
    };
    const Cluster cu = parent_cluster(t);
    const Cluster cu2 = parent_cluster(s);

    Cluster target;
    if (!cu.minus(x).intersects(cu2.minus(x)) || cu2.is_subset_of(cu)) {
      target = cu2.minus(x);
    } else if (cu.is_subset_of(cu2)) {
      target = cu2;
    } else {
      throw InvariantError("neither attachment case applies");
    }

    const auto image = graft_tree(net, step.leaf, t_y);
    const auto clusters = t_y.vertex_clusters();
    auto locate = [&](const Cluster& c) {
      for (std::size_t v = 0; v < clusters.size(); ++v) {
        if (clusters[v] == c) return image[v];
      }
      throw InvariantError(c.to_string() + " is not a cluster of the grafted subtree");
    };
    const Network::Vertex target_v = locate(target);
    const Network::Vertex x_v = locate(x);

    Network::Vertex from;
    if (net.parents(target_v).empty()) {
      from = net.add_vertex();
      net.add_arc(from, target_v);
    } else {
      from = net.subdivide(net.parents(target_v)[0], target_v);
    }
    const Network::Vertex to = net.subdivide(net.parents(x_v)[0], x_v);
    net.add_arc(from, to);
  }

  net.check();
  const auto cls = net.classify();
  if (!cls.is_level1) throw InvariantError("reconstructed network is not level-1");
  if (net.has_trivial_reticulation()) {
    throw InvariantError("reconstructed network has a trivial reticulation");
  }
  return net;
}

Level1Result construct_level1(const std::vector<Tree>& trees, TieBreak tie) {
  Level1Result out;
  out.analysis = analyze(trees, tie);
  if (!out.analysis.accepted()) return out;
  out.network = build_network(out.analysis,
                              out.analysis.k == 0 ? std::vector<OrderedPair>{}
                                                  : out.analysis.labelling->chosen);
  return out;
}

Level1Enumeration enumerate_level1(const std::vector<Tree>& trees) {
  Level1Enumeration out;
  out.analysis = analyze(trees);
  if (!out.analysis.accepted()) return out;
  const Analysis& a = out.analysis;
  if (a.k == 0) {
    out.sequence_count = 1;
    out.networks.push_back(Network::from_tree(a.trees[0]));
    out.sequences.emplace_back();
    return out;
  }
  const auto& cands = a.labelling->candidates;
  std::map<std::string, std::pair<Network, std::vector<OrderedPair>>> found;
  std::vector<OrderedPair> seq;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == cands.size()) {
      ++out.sequence_count;
      Network n = build_network(a, seq);
      found.try_emplace(n.canonical_form(), std::move(n), seq);
      return;
    }
    for (const auto& c : cands[i]) {
      const bool ok = std::all_of(seq.begin(), seq.end(),
                                  [&](const OrderedPair& p) { return compatible(c, p); });
      if (!ok) continue;
      seq.push_back(c);
      extend(i + 1);
      seq.pop_back();
    }
  };
  extend(0);
  std::vector<std::pair<std::string, std::size_t>> by_text;
  std::vector<std::pair<Network, std::vector<OrderedPair>>> items;
  for (auto& [key, item] : found) {
    by_text.emplace_back(item.first.enewick(), items.size());
    items.push_back(std::move(item));
  }
  std::sort(by_text.begin(), by_text.end());
  for (auto& [text, idx] : by_text) {
    out.networks.push_back(std::move(items[idx].first));
    out.sequences.push_back(std::move(items[idx].second));
  }
  return out;
}

std::vector<OrderedPair> reticulation_pairs(const Network& n) {
  const auto clusters = n.vertex_clusters();
  std::vector<OrderedPair> out;
  for (const auto& cyc : n.level1_cycles()) {
    out.push_back(OrderedPair{clusters[cyc.reticulation], clusters[cyc.source]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace l1kit
