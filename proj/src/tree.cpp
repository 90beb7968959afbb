#include "l1kit/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "l1kit/errors.hpp"

namespace l1kit {

RootedTriple::RootedTriple(Taxon x, Taxon y, Taxon out)
    : a(std::move(x)), b(std::move(y)), outgroup(std::move(out)) {
  if (b < a) std::swap(a, b);
}

std::string RootedTriple::to_string() const {
  return a + "," + b + "|" + outgroup;
}

// ---------------------------------------------------------------------------
// TreeBuilder

int TreeBuilder::leaf(Taxon label) {
  protos_.push_back(Proto{-1, -1, std::move(label)});
  return static_cast<int>(protos_.size()) - 1;
}

int TreeBuilder::join(int left, int right) {
  protos_.push_back(Proto{left, right, {}});
  return static_cast<int>(protos_.size()) - 1;
}

int TreeBuilder::copy(const Tree& source, Tree::Vertex v) {
  if (source.is_leaf(v)) return leaf(source.label(v));
  const auto& ch = source.children(v);
  int l = copy(source, ch[0]);
  int r = copy(source, ch[1]);
  return join(l, r);
}

Tree TreeBuilder::build(int root) const {
  Tree out;
  if (root < 0) return out;

  // Least leaf label below each proto, computed on demand.
  std::vector<const Taxon*> least(protos_.size(), nullptr);
  std::unordered_set<std::string_view> seen;
  std::function<const Taxon*(int)> visit = [&](int p) -> const Taxon* {
    const Proto& proto = protos_[p];
    if (proto.left < 0) {
      if (!is_valid_taxon(proto.label)) {
        throw InvalidInput("invalid taxon label '" + proto.label + "'");
      }
      if (!seen.insert(proto.label).second) {
        throw InvalidInput("duplicate leaf label '" + proto.label + "'");
      }
      least[p] = &proto.label;
    } else {
      const Taxon* l = visit(proto.left);
      const Taxon* r = visit(proto.right);
      least[p] = (*l < *r) ? l : r;
    }
    return least[p];
  };
  visit(root);

  std::function<Tree::Vertex(int, Tree::Vertex)> emit =
      [&](int p, Tree::Vertex parent) -> Tree::Vertex {
    const Proto& proto = protos_[p];
    const auto v = static_cast<Tree::Vertex>(out.nodes_.size());
    out.nodes_.push_back(Tree::Node{parent, {Tree::kNone, Tree::kNone}, {}});
    if (proto.left < 0) {
      out.nodes_[v].label = proto.label;
      out.key_ += proto.label;
      return v;
    }
    int first = proto.left;
    int second = proto.right;
    if (*least[second] < *least[first]) std::swap(first, second);
    out.key_ += '(';
    Tree::Vertex c0 = emit(first, v);
    out.key_ += ',';
    Tree::Vertex c1 = emit(second, v);
    out.key_ += ')';
    out.nodes_[v].children = {c0, c1};
    return v;
  };
  emit(root, Tree::kNone);
  return out;
}

// ---------------------------------------------------------------------------
// Newick parsing

namespace {

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  Tree parse() {
    TreeBuilder builder;
    skip_ws();
    int root = node(builder);
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return builder.build(root);
  }

 private:
  int node(TreeBuilder& builder) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      const std::size_t open = pos_;
      ++pos_;
      std::vector<int> kids;
      kids.push_back(node(builder));
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        kids.push_back(node(builder));
        skip_ws();
      }
      expect(')');
      if (kids.size() != 2) {
        throw ParseError("non-binary vertex with " + std::to_string(kids.size()) +
                             " children",
                         open);
      }
      return builder.join(kids[0], kids[1]);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail(std::string("unexpected character '") + text_[pos_] + "'");
    Taxon label(text_.substr(start, pos_ - start));
    if (!labels_.insert(label).second) {
      throw ParseError("duplicate leaf label '" + label + "'", start);
    }
    return builder.leaf(std::move(label));
  }

  static bool is_label_char(char c) {
    return is_valid_taxon(std::string_view(&c, 1));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<Taxon, std::less<>> labels_;
};

}  // namespace

Tree Tree::parse_newick(std::string_view text) { return NewickParser(text).parse(); }

Tree Tree::single_leaf(Taxon label) {
  TreeBuilder b;
  return b.build(b.leaf(std::move(label)));
}

// ---------------------------------------------------------------------------
// Queries

Cluster Tree::taxa() const {
  std::vector<Taxon> out;
  for (const auto& n : nodes_) {
    if (n.children[0] == kNone) out.push_back(n.label);
  }
  return Cluster(std::move(out));
}

std::optional<Tree::Vertex> Tree::find_leaf(std::string_view label) const {
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].children[0] == kNone && nodes_[v].label == label) {
      return static_cast<Vertex>(v);
    }
  }
  return std::nullopt;
}

std::vector<Cluster> Tree::vertex_clusters() const {
  std::vector<Cluster> out(nodes_.size());
  // Preorder numbering: children always have larger ids than parents.
  for (auto v = static_cast<Vertex>(nodes_.size()) - 1; v >= 0; --v) {
    const Node& n = nodes_[v];
    if (n.children[0] == kNone) {
      out[v] = Cluster({n.label});
    } else {
      out[v] = out[n.children[0]].united(out[n.children[1]]);
    }
  }
  return out;
}

std::vector<Cluster> Tree::clusters() const {
  auto all = vertex_clusters();
  std::sort(all.begin(), all.end());
  return all;
}

bool Tree::has_cluster(const Cluster& c) const { return find_cluster(c).has_value(); }

std::optional<Tree::Vertex> Tree::find_cluster(const Cluster& c) const {
  if (c.empty()) return std::nullopt;
  auto all = vertex_clusters();
  for (std::size_t v = 0; v < all.size(); ++v) {
    if (all[v] == c) return static_cast<Vertex>(v);
  }
  return std::nullopt;
}

Tree Tree::restrict_to(const Cluster& keep) const {
  if (keep.empty()) throw InvalidInput("restriction to the empty set");
  if (!keep.is_subset_of(taxa())) {
    throw InvalidInput("restriction set " + keep.to_string() +
                       " contains unknown taxa");
  }
  TreeBuilder b;
  std::function<int(Vertex)> go = [&](Vertex v) -> int {
    const Node& n = nodes_[v];
    if (n.children[0] == kNone) return keep.contains(n.label) ? b.leaf(n.label) : -1;
    int l = go(n.children[0]);
    int r = go(n.children[1]);
    if (l < 0) return r;
    if (r < 0) return l;
    return b.join(l, r);
  };
  return b.build(go(root()));
}

Tree Tree::subtree_reduce(const Cluster& subtree_taxa, const Taxon& label) const {
  auto target = find_cluster(subtree_taxa);
  if (!target) {
    throw InvalidInput(subtree_taxa.to_string() + " is not a cluster of the tree");
  }
  if (!is_valid_taxon(label)) throw InvalidInput("invalid taxon label '" + label + "'");
  if (taxa().contains(label)) {
    throw InvalidInput("replacement leaf '" + label + "' collides with an existing taxon");
  }
  TreeBuilder b;
  std::function<int(Vertex)> go = [&](Vertex v) -> int {
    if (v == *target) return b.leaf(label);
    const Node& n = nodes_[v];
    if (n.children[0] == kNone) return b.leaf(n.label);
    int l = go(n.children[0]);
    int r = go(n.children[1]);
    return b.join(l, r);
  };
  return b.build(go(root()));
}

Tree Tree::graft(std::string_view leaf, const Tree& subtree) const {
  auto target = find_leaf(leaf);
  if (!target) throw InvalidInput("no leaf labelled '" + std::string(leaf) + "'");
  Cluster rest = taxa().minus(Cluster({Taxon(leaf)}));
  if (rest.intersects(subtree.taxa())) {
    throw InvalidInput("grafted subtree shares taxa with the host tree");
  }
  TreeBuilder b;
  std::function<int(Vertex)> go = [&](Vertex v) -> int {
    if (v == *target) return b.copy(subtree, subtree.root());
    const Node& n = nodes_[v];
    if (n.children[0] == kNone) return b.leaf(n.label);
    int l = go(n.children[0]);
    int r = go(n.children[1]);
    return b.join(l, r);
  };
  return b.build(go(root()));
}

Tree Tree::pendant_subtree(Vertex v) const {
  TreeBuilder b;
  return b.build(b.copy(*this, v));
}

std::vector<RootedTriple> Tree::rooted_triples() const {
  if (leaf_count() < 3) throw InvalidInput("rooted triples need at least 3 leaves");
  std::vector<int> depth(nodes_.size(), 0);
  for (std::size_t v = 1; v < nodes_.size(); ++v) {
    depth[v] = depth[nodes_[v].parent] + 1;
  }
  auto lca = [&](Vertex a, Vertex b) {
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      a = nodes_[a].parent;
    }
    return a;
  };
  std::vector<Vertex> leaves;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].children[0] == kNone) leaves.push_back(static_cast<Vertex>(v));
  }
  std::sort(leaves.begin(), leaves.end(),
            [&](Vertex a, Vertex b) { return nodes_[a].label < nodes_[b].label; });

  std::vector<RootedTriple> out;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      for (std::size_t k = j + 1; k < leaves.size(); ++k) {
        const Vertex a = leaves[i], b = leaves[j], c = leaves[k];
        const int ab = depth[lca(a, b)], ac = depth[lca(a, c)];
        const Taxon &la = nodes_[a].label, &lb = nodes_[b].label, &lc = nodes_[c].label;
        if (ab > ac) {
          out.emplace_back(la, lb, lc);
        } else if (ac > ab) {
          out.emplace_back(la, lc, lb);
        } else {
          // Equal depths mean lca(b, c) lies strictly below both.
          out.emplace_back(lb, lc, la);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool tree_isomorphic(const Tree& a, const Tree& b) {
  if (a.taxa() != b.taxa()) throw InvalidInput("trees have different leaf sets");
  return a.key() == b.key();
}

}  // namespace l1kit
