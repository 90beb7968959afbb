#include "l1kit/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "l1kit/errors.hpp"

namespace l1kit {

// ---------------------------------------------------------------------------
// eNewick parsing

namespace {

class EnewickParser {
 public:
  explicit EnewickParser(std::string_view text) : text_(text) {}

  Network parse() {
    skip_ws();
    Network::Vertex root = node();
    (void)root;
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    for (const auto& [tag, info] : hybrids_) {
      if (info.defined != 1 || info.bare != 1) {
        throw ParseError("hybrid tag #H" + tag +
                             " must appear exactly twice, once with a subtree",
                         info.first_pos);
      }
    }
    net_.check();
    return std::move(net_);
  }

 private:
  struct HybridInfo {
    Network::Vertex vertex = Network::kNone;
    int defined = 0;
    int bare = 0;
    std::size_t first_pos = 0;
  };

  Network::Vertex node() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      std::vector<Network::Vertex> kids{node()};
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        kids.push_back(node());
        skip_ws();
      }
      expect(')');
      skip_ws();
      if (kids.size() > 2) {
        throw ParseError("non-binary vertex with " + std::to_string(kids.size()) +
                             " children",
                         open);
      }
      const bool tagged = pos_ < text_.size() && text_[pos_] == '#';
      if (kids.size() == 1 && !tagged) {
        throw ParseError("non-binary vertex with 1 child", open);
      }
      Network::Vertex below;
      if (kids.size() == 2) {
        below = net_.add_vertex();
        net_.add_arc(below, kids[0]);
        net_.add_arc(below, kids[1]);
      } else {
        below = kids[0];
      }
      if (!tagged) return below;
      return define_hybrid(below);
    }
    if (c == '#') return bare_hybrid();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail(std::string("unexpected character '") + c + "'");
    Taxon label(text_.substr(start, pos_ - start));
    if (!labels_.insert(label).second) {
      throw ParseError("duplicate leaf label '" + label + "'", start);
    }
    Network::Vertex leaf = net_.add_leaf(std::move(label));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '#') return define_hybrid(leaf);
    return leaf;
  }

  Network::Vertex define_hybrid(Network::Vertex child) {
    const std::size_t at = pos_;
    HybridInfo& info = hybrid(tag(), at);
    ++info.defined;
    if (info.defined > 1) throw ParseError("hybrid tag defined twice", at);
    net_.add_arc(info.vertex, child);
    return info.vertex;
  }

  Network::Vertex bare_hybrid() {
    const std::size_t at = pos_;
    HybridInfo& info = hybrid(tag(), at);
    ++info.bare;
    return info.vertex;
  }

  HybridInfo& hybrid(const std::string& name, std::size_t at) {
    auto [it, inserted] = hybrids_.try_emplace(name);
    if (inserted) {
      it->second.vertex = net_.add_vertex();
      it->second.first_pos = at;
    }
    return it->second;
  }

  std::string tag() {
    expect('#');
    expect('H');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) fail("expected digits after '#H'");
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_label_char(char c) { return is_valid_taxon(std::string_view(&c, 1)); }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  Network net_;
  std::set<Taxon> labels_;
  std::map<std::string, HybridInfo> hybrids_;
};

}  // namespace

Network Network::parse_enewick(std::string_view text) { return EnewickParser(text).parse(); }

Network Network::from_tree(const Tree& tree) {
  Network net;
  if (tree.empty()) return net;
  std::function<Vertex(Tree::Vertex)> go = [&](Tree::Vertex v) -> Vertex {
    if (tree.is_leaf(v)) return net.add_leaf(tree.label(v));
    Vertex u = net.add_vertex();
    Vertex l = go(tree.children(v)[0]);
    Vertex r = go(tree.children(v)[1]);
    net.add_arc(u, l);
    net.add_arc(u, r);
    return u;
  };
  go(tree.root());
  return net;
}

// ---------------------------------------------------------------------------
// Structure

std::size_t Network::arc_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.children.size();
  return n;
}

Network::Vertex Network::root() const {
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].parents.empty() &&
        (!nodes_[v].children.empty() || nodes_.size() == 1)) {
      return static_cast<Vertex>(v);
    }
  }
  return kNone;
}

std::vector<Network::Vertex> Network::reticulations() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].parents.size() == 2) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Arc> Network::arcs() const {
  std::vector<Arc> out;
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    for (Vertex v : nodes_[u].children) out.emplace_back(static_cast<Vertex>(u), v);
  }
  return out;
}

std::optional<Network::Vertex> Network::find_leaf(std::string_view label) const {
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].children.empty() && nodes_[v].label == label) {
      return static_cast<Vertex>(v);
    }
  }
  return std::nullopt;
}

Cluster Network::taxa() const {
  std::vector<Taxon> out;
  for (const auto& n : nodes_) {
    if (n.children.empty() && !n.label.empty()) out.push_back(n.label);
  }
  return Cluster(std::move(out));
}

std::vector<Network::Vertex> Network::topological_order() const {
  std::vector<int> indeg(nodes_.size());
  std::vector<Vertex> order;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    indeg[v] = static_cast<int>(nodes_[v].parents.size());
    if (indeg[v] == 0) order.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex c : nodes_[order[i]].children) {
      if (--indeg[c] == 0) order.push_back(c);
    }
  }
  if (order.size() != nodes_.size()) throw InvalidInput("network contains a directed cycle");
  return order;
}

std::vector<Cluster> Network::vertex_clusters() const {
  std::vector<Cluster> out(nodes_.size());
  auto order = topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Node& n = nodes_[*it];
    if (n.children.empty()) {
      out[*it] = Cluster({n.label});
    } else {
      Cluster c;
      for (Vertex ch : n.children) c = c.united(out[ch]);
      out[*it] = std::move(c);
    }
  }
  return out;
}

Tree Network::to_tree() const {
  if (!is_tree()) throw InvalidInput("network has reticulations");
  TreeBuilder b;
  std::function<int(Vertex)> go = [&](Vertex v) -> int {
    if (is_leaf(v)) return b.leaf(label(v));
    int l = go(nodes_[v].children[0]);
    int r = go(nodes_[v].children[1]);
    return b.join(l, r);
  };
  return b.build(go(root()));
}

// ---------------------------------------------------------------------------
// Construction

Network::Vertex Network::add_vertex() {
  nodes_.emplace_back();
  return static_cast<Vertex>(nodes_.size()) - 1;
}

Network::Vertex Network::add_leaf(Taxon label) {
  Vertex v = add_vertex();
  nodes_[v].label = std::move(label);
  return v;
}

void Network::add_arc(Vertex u, Vertex v) {
  nodes_[u].children.push_back(v);
  nodes_[v].parents.push_back(u);
}

void Network::remove_arc(Vertex u, Vertex v) {
  auto& ch = nodes_[u].children;
  auto& pa = nodes_[v].parents;
  auto c = std::find(ch.begin(), ch.end(), v);
  auto p = std::find(pa.begin(), pa.end(), u);
  if (c == ch.end() || p == pa.end()) throw InvalidInput("no such arc");
  ch.erase(c);
  pa.erase(p);
}

Network::Vertex Network::subdivide(Vertex u, Vertex v) {
  auto c = std::find(nodes_[u].children.begin(), nodes_[u].children.end(), v);
  auto p = std::find(nodes_[v].parents.begin(), nodes_[v].parents.end(), u);
  if (c == nodes_[u].children.end() || p == nodes_[v].parents.end()) {
    throw InvalidInput("no such arc");
  }
  Vertex w = add_vertex();
  // Re-find after add_vertex since nodes_ may have reallocated.
  *std::find(nodes_[u].children.begin(), nodes_[u].children.end(), v) = w;
  *std::find(nodes_[v].parents.begin(), nodes_[v].parents.end(), u) = w;
  nodes_[w].parents.push_back(u);
  nodes_[w].children.push_back(v);
  return w;
}

void Network::suppress(Vertex v) {
  if (nodes_[v].parents.size() != 1 || nodes_[v].children.size() != 1) {
    throw InvariantError("suppress needs in-degree 1 and out-degree 1");
  }
  Vertex p = nodes_[v].parents[0];
  Vertex c = nodes_[v].children[0];
  *std::find(nodes_[p].children.begin(), nodes_[p].children.end(), v) = c;
  *std::find(nodes_[c].parents.begin(), nodes_[c].parents.end(), v) = p;
  nodes_[v].parents.clear();
  nodes_[v].children.clear();
}

void Network::compact() {
  std::vector<Vertex> remap(nodes_.size(), kNone);
  std::vector<Node> kept;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const Node& n = nodes_[v];
    const bool isolated = n.parents.empty() && n.children.empty();
    if (isolated && !(nodes_.size() == 1 || !n.label.empty())) continue;
    remap[v] = static_cast<Vertex>(kept.size());
    kept.push_back(n);
  }
  for (Node& n : kept) {
    for (Vertex& p : n.parents) p = remap[p];
    for (Vertex& c : n.children) c = remap[c];
  }
  nodes_ = std::move(kept);
}

void Network::check() const {
  if (nodes_.empty()) throw InvalidInput("empty network");
  int roots = 0;
  std::set<std::string_view> labels;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const Node& n = nodes_[v];
    const std::size_t in = n.parents.size();
    const std::size_t out = n.children.size();
    for (Vertex c : n.children) {
      if (c == static_cast<Vertex>(v)) throw InvalidInput("network has a loop");
    }
    if (out == 2 && n.children[0] == n.children[1]) {
      throw InvalidInput("network has parallel arcs");
    }
    if (in == 0) {
      ++roots;
      if (!(out == 2 || (out == 0 && nodes_.size() == 1))) {
        throw InvalidInput("root must have out-degree 2");
      }
    } else if (!((in == 1 && (out == 0 || out == 2)) || (in == 2 && out == 1))) {
      throw InvalidInput("vertex with in-degree " + std::to_string(in) +
                         " and out-degree " + std::to_string(out));
    }
    if (out == 0) {
      if (!is_valid_taxon(n.label)) {
        throw InvalidInput("leaf with invalid label '" + n.label + "'");
      }
      if (!labels.insert(n.label).second) {
        throw InvalidInput("duplicate leaf label '" + n.label + "'");
      }
    } else if (!n.label.empty()) {
      throw InvalidInput("internal vertex carries label '" + n.label + "'");
    }
  }
  if (roots != 1) throw InvalidInput("network must have exactly one root");
  topological_order();  // throws on cycles
}

// ---------------------------------------------------------------------------
// Classes

namespace {

// Biconnected components of the underlying undirected graph, as arc lists.
std::vector<std::vector<Arc>> blocks_of(const Network& n) {
  const auto count = n.vertex_count();
  std::vector<std::vector<int>> adj(count);
  for (auto [u, v] : n.arcs()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> disc(count, -1), low(count, 0);
  std::vector<Arc> stack;
  std::vector<std::vector<Arc>> blocks;
  int timer = 0;
  auto as_arc = [&](int a, int b) -> Arc {
    const auto& ch = n.children(a);
    if (std::find(ch.begin(), ch.end(), b) != ch.end()) return {a, b};
    return {b, a};
  };
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Arc> block;
          while (true) {
            Arc e = stack.back();
            stack.pop_back();
            block.push_back(as_arc(e.first, e.second));
            if (e == Arc{u, w}) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  if (count > 0) dfs(n.root(), -1);
  return blocks;
}

// Reticulations whose two in-arcs both lie in the block.
std::vector<int> block_reticulations(const Network& n, const std::vector<Arc>& block) {
  std::map<int, int> in_count;
  for (auto [u, v] : block) {
    (void)u;
    if (n.is_reticulation(v)) ++in_count[v];
  }
  std::vector<int> out;
  for (auto [v, c] : in_count) {
    if (c == 2) out.push_back(v);
  }
  return out;
}

}  // namespace

NetworkClassification Network::classify() const {
  NetworkClassification out;
  const auto rets = reticulations();
  out.reticulation_count = static_cast<int>(rets.size());

  out.is_tree_child = true;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const auto& ch = nodes_[v].children;
    if (ch.empty()) continue;
    const bool ok = std::any_of(ch.begin(), ch.end(),
                                [&](Vertex c) { return !is_reticulation(c); });
    if (!ok) {
      out.is_tree_child = false;
      break;
    }
  }

  for (Vertex r : rets) {
    for (Vertex u : nodes_[r].parents) {
      // Search for a u -> r path that avoids the arc (u, r).
      std::vector<char> seen(nodes_.size(), 0);
      std::vector<Vertex> todo;
      for (Vertex c : nodes_[u].children) {
        if (c != r) todo.push_back(c);
      }
      bool found = false;
      while (!todo.empty() && !found) {
        Vertex x = todo.back();
        todo.pop_back();
        if (x == r) {
          found = true;
          break;
        }
        if (seen[x]) continue;
        seen[x] = 1;
        for (Vertex c : nodes_[x].children) todo.push_back(c);
      }
      if (found) out.shortcuts.emplace_back(u, r);
    }
  }
  std::sort(out.shortcuts.begin(), out.shortcuts.end());
  out.is_normal = out.is_tree_child && out.shortcuts.empty();

  for (const auto& block : blocks_of(*this)) {
    out.level = std::max(out.level, static_cast<int>(block_reticulations(*this, block).size()));
  }
  out.is_level1 = out.level <= 1;
  return out;
}

bool Network::is_level1() const { return classify().is_level1; }

std::vector<ReticulationCycle> Network::level1_cycles() const {
  std::vector<ReticulationCycle> out;
  for (const auto& block : blocks_of(*this)) {
    auto rets = block_reticulations(*this, block);
    if (rets.size() > 1) throw InvalidInput("network is not level-1");
    if (rets.empty()) continue;
    ReticulationCycle cyc;
    cyc.reticulation = rets[0];
    std::set<int> verts, has_in;
    for (auto [u, v] : block) {
      verts.insert(u);
      verts.insert(v);
      has_in.insert(v);
    }
    cyc.vertices.assign(verts.begin(), verts.end());
    for (int v : verts) {
      if (!has_in.count(v)) {
        if (cyc.source != kNone) throw InvariantError("cycle with two sources");
        cyc.source = v;
      }
    }
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.reticulation < b.reticulation;
  });
  return out;
}

Network::Vertex Network::source_vertex(Vertex reticulation) const {
  if (!is_reticulation(reticulation)) throw InvalidInput("vertex is not a reticulation");
  for (const auto& cyc : level1_cycles()) {
    if (cyc.reticulation == reticulation) return cyc.source;
  }
  throw InvariantError("reticulation without a cycle");
}

bool Network::has_trivial_reticulation() const {
  for (const auto& cyc : level1_cycles()) {
    if (cyc.trivial()) return true;
  }
  return false;
}

Network Network::essential() const {
  Network out = *this;
  while (true) {
    auto cycles = out.level1_cycles();
    auto it = std::find_if(cycles.begin(), cycles.end(),
                           [](const auto& c) { return c.trivial(); });
    if (it == cycles.end()) break;
    const Vertex r = it->reticulation;
    const Vertex s = it->source;
    const auto& ps = out.parents(r);
    const Vertex a = ps[0] == s ? ps[1] : ps[0];
    out.remove_arc(a, r);
    out.suppress(a);
    out.suppress(r);
    out.compact();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identity and output

std::vector<std::string> Network::vertex_codes() const {
  std::vector<std::string> code(nodes_.size());
  auto order = topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Node& n = nodes_[*it];
    if (n.children.empty()) {
      code[*it] = n.label;
    } else if (n.parents.size() == 2) {
      code[*it] = "R(" + code[n.children[0]] + ")";
    } else {
      std::vector<std::string> kids;
      for (Vertex c : n.children) kids.push_back(code[c]);
      std::sort(kids.begin(), kids.end());
      std::string s = "T(";
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) s += ',';
        s += kids[i];
      }
      code[*it] = s + ")";
    }
  }
  return code;
}

std::string Network::canonical_form() const {
  if (nodes_.empty()) return {};
  auto code = vertex_codes();
  std::vector<std::string> arcs_out;
  for (auto [u, v] : arcs()) arcs_out.push_back(code[u] + ">" + code[v]);
  std::sort(arcs_out.begin(), arcs_out.end());
  std::string out = code[root()];
  for (const auto& a : arcs_out) out += "|" + a;
  return out;
}

std::string Network::enewick() const {
  if (nodes_.empty()) return ";";
  auto code = vertex_codes();
  auto clusters = vertex_clusters();
  std::map<Vertex, int> hybrid_id;
  std::string out;
  std::function<void(Vertex)> emit = [&](Vertex v) {
    const Node& n = nodes_[v];
    if (n.children.empty()) {
      out += n.label;
      return;
    }
    if (n.parents.size() == 2) {
      auto found = hybrid_id.find(v);
      if (found != hybrid_id.end()) {
        out += "#H" + std::to_string(found->second);
        return;
      }
      const int id = static_cast<int>(hybrid_id.size()) + 1;
      hybrid_id[v] = id;
      out += '(';
      emit(n.children[0]);
      out += ")#H" + std::to_string(id);
      return;
    }
    Vertex a = n.children[0], b = n.children[1];
    auto key = [&](Vertex x) { return std::tie(clusters[x].front(), code[x]); };
    if (key(b) < key(a)) std::swap(a, b);
    out += '(';
    emit(a);
    out += ',';
    emit(b);
    out += ')';
  };
  emit(root());
  return out + ";";
}

std::string Network::dot() const {
  std::string out = "digraph network {\n";
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    out += "  v" + std::to_string(v);
    if (is_leaf(static_cast<Vertex>(v))) {
      out += " [shape=plaintext, label=\"" + nodes_[v].label + "\"];\n";
    } else if (is_reticulation(static_cast<Vertex>(v))) {
      out += " [shape=box, label=\"\"];\n";
    } else {
      out += " [shape=point];\n";
    }
  }
  for (auto [u, v] : arcs()) {
    out += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

bool network_isomorphic(const Network& a, const Network& b) {
  return a.canonical_form() == b.canonical_form();
}

}  // namespace l1kit
