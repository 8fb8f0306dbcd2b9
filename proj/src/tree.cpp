#include "tridend/tree.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace tridend {

struct PlanarTree::Node {
  std::vector<PlanarTree> children;
  int leaves = 1;
  std::string text = "|";
  std::size_t hash = std::hash<std::string>{}("|");
};

PlanarTree::PlanarTree() {
  static const auto leaf_node = std::make_shared<const Node>();
  node_ = leaf_node;
}

PlanarTree PlanarTree::graft(std::vector<PlanarTree> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("graft: a reduced tree node needs at least two children");
  }
  auto node = std::make_shared<Node>();
  node->leaves = 0;
  std::size_t length = children.size() + 1;
  for (const auto& c : children) {
    node->leaves += c.leaves();
    length += c.str().size();
  }
  node->text.clear();
  node->text.reserve(length);
  node->text.push_back('(');
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) node->text.push_back(',');
    node->text += children[i].str();
  }
  node->text.push_back(')');
  node->hash = std::hash<std::string>{}(node->text);
  node->children = std::move(children);
  return PlanarTree(std::move(node));
}

std::span<const PlanarTree> PlanarTree::children() const { return node_->children; }
int PlanarTree::leaves() const { return node_->leaves; }
const std::string& PlanarTree::str() const { return node_->text; }
std::size_t PlanarTree::hash() const { return node_->hash; }

bool operator==(const PlanarTree& a, const PlanarTree& b) {
  return a.node_ == b.node_ || (a.node_->hash == b.node_->hash && a.node_->text == b.node_->text);
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.leaves() <=> b.leaves(); c != 0) return c;
  return a.str().compare(b.str()) <=> 0;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PlanarTree parse_all() {
    PlanarTree t = parse_tree();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  PlanarTree parse_tree() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '|') {
      ++pos_;
      return PlanarTree::leaf();
    }
    if (c != '(') fail("expected '|' or '('");
    ++pos_;
    std::vector<PlanarTree> children;
    children.push_back(parse_tree());
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated node");
      if (text_[pos_] == ',') {
        ++pos_;
        children.push_back(parse_tree());
      } else if (text_[pos_] == ')') {
        ++pos_;
        break;
      } else {
        fail("expected ',' or ')'");
      }
    }
    if (children.size() < 2) fail("node with fewer than two children");
    return PlanarTree::graft(std::move(children));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree literal '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Every ordered list of trees whose leaf counts sum to `leaves`, each tree
// having at most `max_part` leaves. With max_part < leaves the list has at
// least two entries.
void compose_forests(int leaves, int max_part, Forest& prefix,
                     const std::vector<std::vector<PlanarTree>>& by_leaves,
                     std::vector<PlanarTree>& out) {
  if (leaves == 0) {
    out.push_back(PlanarTree::graft(prefix));
    return;
  }
  for (int first = 1; first <= std::min(leaves, max_part); ++first) {
    for (const auto& t : by_leaves[first]) {
      prefix.push_back(t);
      compose_forests(leaves - first, max_part, prefix, by_leaves, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

PlanarTree PlanarTree::parse(std::string_view text) { return TreeParser(text).parse_all(); }

PlanarTree generator() {
  static const PlanarTree y = PlanarTree::graft({PlanarTree::leaf(), PlanarTree::leaf()});
  return y;
}

PlanarTree corolla(int n) {
  if (n < 1) throw std::invalid_argument("corolla: degree must be at least 1");
  return PlanarTree::graft(std::vector<PlanarTree>(static_cast<std::size_t>(n) + 1));
}

int leaf_count(const Forest& forest) {
  int n = 0;
  for (const auto& t : forest) n += t.leaves();
  return n;
}

std::vector<PlanarTree> enumerate_trees(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_trees: negative degree");
  static std::mutex mutex;
  // by_leaves[m] holds the sorted trees with m leaves.
  static std::vector<std::vector<PlanarTree>> by_leaves{{}, {PlanarTree::leaf()}};
  std::lock_guard lock(mutex);
  const int target = n + 1;
  while (static_cast<int>(by_leaves.size()) <= target) {
    const int m = static_cast<int>(by_leaves.size());
    std::vector<PlanarTree> trees;
    Forest prefix;
    compose_forests(m, m - 1, prefix, by_leaves, trees);
    std::sort(trees.begin(), trees.end());
    by_leaves.push_back(std::move(trees));
  }
  return by_leaves[target];
}

std::vector<PlanarTree> enumerate_trees(int lo, int hi) {
  std::vector<PlanarTree> out;
  for (int n = std::max(lo, 0); n <= hi; ++n) {
    auto part = enumerate_trees(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Forest> right_comb_decomposition(const PlanarTree& t) {
  if (t.is_leaf()) throw std::invalid_argument("right_comb_decomposition: the leaf has no comb form");
  std::vector<Forest> forests;
  PlanarTree node = t;
  while (!node.is_leaf()) {
    auto kids = node.children();
    forests.emplace_back(kids.begin(), kids.end() - 1);
    node = kids.back();
  }
  return forests;
}

std::vector<Forest> left_comb_decomposition(const PlanarTree& t) {
  if (t.is_leaf()) throw std::invalid_argument("left_comb_decomposition: the leaf has no comb form");
  std::vector<Forest> forests;
  PlanarTree node = t;
  while (!node.is_leaf()) {
    auto kids = node.children();
    forests.emplace_back(kids.begin() + 1, kids.end());
    node = kids.front();
  }
  return forests;
}

PlanarTree assemble_right_comb(std::span<const Forest> forests) {
  PlanarTree top = PlanarTree::leaf();
  for (auto it = forests.rbegin(); it != forests.rend(); ++it) {
    if (it->empty()) throw std::invalid_argument("assemble_right_comb: empty forest");
    Forest kids = *it;
    kids.push_back(top);
    top = PlanarTree::graft(std::move(kids));
  }
  return top;
}

PlanarTree assemble_left_comb(std::span<const Forest> forests) {
  PlanarTree top = PlanarTree::leaf();
  for (auto it = forests.rbegin(); it != forests.rend(); ++it) {
    if (it->empty()) throw std::invalid_argument("assemble_left_comb: empty forest");
    Forest kids;
    kids.reserve(it->size() + 1);
    kids.push_back(top);
    kids.insert(kids.end(), it->begin(), it->end());
    top = PlanarTree::graft(std::move(kids));
  }
  return top;
}

bool is_binary(const PlanarTree& t) {
  if (t.is_leaf()) return true;
  auto kids = t.children();
  return kids.size() == 2 && is_binary(kids[0]) && is_binary(kids[1]);
}

}  // namespace tridend
