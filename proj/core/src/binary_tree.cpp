#include "wzt/binary_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace wzt {

BinaryTree::BinaryTree() {
  static const std::shared_ptr<const Node> leaf_node =
      std::make_shared<const Node>(Node{nullptr, nullptr, 1});
  root_ = leaf_node;
}

BinaryTree BinaryTree::leaf() { return BinaryTree(); }

BinaryTree BinaryTree::caret(const BinaryTree& left, const BinaryTree& right) {
  auto node = std::make_shared<const Node>(
      Node{left.root_, right.root_, left.num_leaves() + right.num_leaves()});
  return BinaryTree(std::move(node));
}

int BinaryTree::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return BinaryTree(root_->left);
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return BinaryTree(root_->right);
}

bool BinaryTree::operator==(const BinaryTree& other) const {
  if (root_ == other.root_) return true;
  if (num_leaves() != other.num_leaves()) return false;
  if (is_leaf() || other.is_leaf()) return is_leaf() == other.is_leaf();
  return left() == other.left() && right() == other.right();
}

std::string BinaryTree::to_text() const {
  if (is_leaf()) return "L";
  return "(" + left().to_text() + "," + right().to_text() + ")";
}

namespace {

BinaryTree parse_tree(std::string_view text, size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos >= text.size()) throw std::invalid_argument("unexpected end of tree text");
  if (text[pos] == 'L') {
    ++pos;
    return BinaryTree::leaf();
  }
  if (text[pos] != '(')
    throw std::invalid_argument("tree text: expected 'L' or '(' at position " +
                                std::to_string(pos));
  ++pos;
  BinaryTree lhs = parse_tree(text, pos);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos >= text.size() || text[pos] != ',')
    throw std::invalid_argument("tree text: expected ','");
  ++pos;
  BinaryTree rhs = parse_tree(text, pos);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos >= text.size() || text[pos] != ')')
    throw std::invalid_argument("tree text: expected ')'");
  ++pos;
  return BinaryTree::caret(lhs, rhs);
}

}  // namespace

BinaryTree BinaryTree::parse(std::string_view text) {
  size_t pos = 0;
  BinaryTree t = parse_tree(text, pos);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos != text.size())
    throw std::invalid_argument("trailing characters after tree text");
  return t;
}

BinaryTree adjoin_caret(const BinaryTree& t, int k) {
  if (k < 1 || k > t.num_leaves())
    throw std::invalid_argument("adjoin_caret: leaf index out of range");
  if (t.is_leaf()) return BinaryTree::caret(BinaryTree::leaf(), BinaryTree::leaf());
  int left_leaves = t.left().num_leaves();
  if (k <= left_leaves)
    return BinaryTree::caret(adjoin_caret(t.left(), k), t.right());
  return BinaryTree::caret(t.left(), adjoin_caret(t.right(), k - left_leaves));
}

bool is_prefix(const BinaryTree& part, const BinaryTree& whole) {
  if (part.is_leaf()) return true;
  if (whole.is_leaf()) return false;
  return is_prefix(part.left(), whole.left()) && is_prefix(part.right(), whole.right());
}

namespace {

BinaryTree merge(const BinaryTree& a, const BinaryTree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  return BinaryTree::caret(merge(a.left(), b.left()), merge(a.right(), b.right()));
}

// Script that grows the full subtree `target` at current leaf position pos.
void grow_script(const BinaryTree& target, int pos, std::vector<int>& out) {
  if (target.is_leaf()) return;
  out.push_back(pos);
  grow_script(target.left(), pos, out);
  grow_script(target.right(), pos + target.left().num_leaves(), out);
}

// Script that turns prefix `from` into `to`; pos is the leaf offset of this
// subtree inside the whole tree at application time.
void prefix_script(const BinaryTree& from, const BinaryTree& to, int pos,
                   std::vector<int>& out) {
  if (from.is_leaf()) {
    grow_script(to, pos, out);
    return;
  }
  prefix_script(from.left(), to.left(), pos, out);
  prefix_script(from.right(), to.right(), pos + to.left().num_leaves(), out);
}

}  // namespace

std::vector<int> expansion_script(const BinaryTree& from, const BinaryTree& to) {
  if (!is_prefix(from, to))
    throw std::invalid_argument("expansion_script: target is not an expansion");
  std::vector<int> script;
  prefix_script(from, to, 1, script);
  return script;
}

CommonExpansion least_common_expansion(const BinaryTree& a, const BinaryTree& b) {
  BinaryTree u = merge(a, b);
  return CommonExpansion{u, expansion_script(a, u), expansion_script(b, u)};
}

}  // namespace wzt
