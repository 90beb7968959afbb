#include "l1kit/display_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <tuple>

#include "l1kit/errors.hpp"

namespace l1kit {

int hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw InvalidInput("bit strings differ in length");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

BinaryAssignment BinaryAssignment::canonical(const Network& n) {
  const auto clusters = n.vertex_clusters();
  // Longest-path depth from the root gives a topological ranking.
  std::vector<int> depth(n.vertex_count(), 0);
  for (auto v : n.topological_order()) {
    for (auto c : n.children(v)) depth[c] = std::max(depth[c], depth[v] + 1);
  }
  BinaryAssignment phi;
  phi.reticulations = n.reticulations();
  std::sort(phi.reticulations.begin(), phi.reticulations.end(), [&](int a, int b) {
    return std::tie(depth[a], clusters[a].front(), clusters[a], a) <
           std::tie(depth[b], clusters[b].front(), clusters[b], b);
  });
  for (auto r : phi.reticulations) {
    auto p = n.parents(r)[0];
    auto q = n.parents(r)[1];
    if (std::tie(clusters[q], q) < std::tie(clusters[p], p)) std::swap(p, q);
    phi.zero_tail.push_back(p);
    phi.one_tail.push_back(q);
  }
  return phi;
}

Tree encode_tree(const Network& n, const BinaryAssignment& phi, const BitString& s) {
  if (s.size() != phi.size()) {
    throw InvalidInput("bit string has length " + std::to_string(s.size()) + ", expected " +
                       std::to_string(phi.size()));
  }
  // kept_tail[r] is the parent whose arc into reticulation r survives.
  std::vector<Network::Vertex> kept_tail(n.vertex_count(), Network::kNone);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw InvalidInput("bit strings use only 0 and 1");
    kept_tail[phi.reticulations[i]] = s[i] == '1' ? phi.one_tail[i] : phi.zero_tail[i];
  }
  // Walking the spanning tree with TreeBuilder suppresses unary vertices
  // and drops leafless branches in one pass.
  TreeBuilder b;
  std::function<int(Network::Vertex)> go = [&](Network::Vertex v) -> int {
    if (n.is_leaf(v)) return b.leaf(n.label(v));
    std::vector<int> parts;
    for (auto c : n.children(v)) {
      if (n.is_reticulation(c) && kept_tail[c] != v) continue;
      int id = go(c);
      if (id >= 0) parts.push_back(id);
    }
    if (parts.empty()) return -1;
    if (parts.size() == 1) return parts[0];
    return b.join(parts[0], parts[1]);
  };
  return b.build(go(n.root()));
}

bool DisplaySet::contains(const Tree& t) const {
  return std::binary_search(trees.begin(), trees.end(), t);
}

int default_cap() {
  if (const char* env = std::getenv("L1KIT_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 62) return static_cast<int>(v);
  }
  return 20;
}

DisplaySet display_set(const Network& n, int cap) {
  const auto phi = BinaryAssignment::canonical(n);
  const int k = static_cast<int>(phi.size());
  if (k > cap) {
    throw CapExceeded("refusing to enumerate 2^" + std::to_string(k) +
                      " bit strings (exponential blow-up; cap is " + std::to_string(cap) +
                      ")");
  }
  DisplaySet out;
  out.k = k;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<BitString, std::string>> raw;
  std::vector<Tree> found;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t x = 0; x < total; ++x) {
    BitString s(k, '0');
    for (int i = 0; i < k; ++i) {
      if (x >> (k - 1 - i) & 1) s[i] = '1';
    }
    Tree t = encode_tree(n, phi, s);
    if (index.emplace(t.key(), 0).second) found.push_back(t);
    raw.emplace_back(std::move(s), t.key());
  }
  std::sort(found.begin(), found.end());
  for (std::size_t i = 0; i < found.size(); ++i) index[found[i].key()] = i;
  out.trees = std::move(found);
  for (auto& [s, key] : raw) out.encodings.emplace_back(std::move(s), index[key]);
  return out;
}

bool is_displayed(const Network& n, const Tree& t, int cap) {
  if (n.taxa() != t.taxa()) throw InvalidInput("tree and network have different leaf sets");
  return display_set(n, cap).contains(t);
}

}  // namespace l1kit
