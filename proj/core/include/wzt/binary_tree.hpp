#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wzt {

/// Rooted planar binary tree with shared immutable nodes. Leaves are indexed
/// 1..num_leaves in left-to-right planar order. Text form: leaf = "L",
/// caret = "(T,T)".
class BinaryTree {
 public:
  BinaryTree();  // single leaf

  static BinaryTree leaf();
  static BinaryTree caret(const BinaryTree& left, const BinaryTree& right);

  bool is_leaf() const { return root_->left == nullptr; }
  int num_leaves() const { return root_->leaves; }
  int depth() const;

  BinaryTree left() const;   // requires !is_leaf()
  BinaryTree right() const;  // requires !is_leaf()

  bool operator==(const BinaryTree& other) const;
  bool operator!=(const BinaryTree& other) const { return !(*this == other); }

  std::string to_text() const;
  static BinaryTree parse(std::string_view text);

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;
    int leaves;
  };
  explicit BinaryTree(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

/// Replaces leaf k by a caret; leaves after k shift up by one.
BinaryTree adjoin_caret(const BinaryTree& t, int k);

/// True when `part` appears in `whole` as a rooted prefix (every caret of
/// `part` is a caret of `whole`).
bool is_prefix(const BinaryTree& part, const BinaryTree& whole);

struct CommonExpansion {
  BinaryTree tree;             // minimal common expansion U
  std::vector<int> script_a;   // caret adjunction script a -> U, applied in order
  std::vector<int> script_b;   // caret adjunction script b -> U
};

/// Minimal tree containing both arguments as rooted prefixes, with
/// deterministic caret scripts (leftmost subtree first, parent before
/// children). Replaying script_a on a and script_b on b both yield U.
CommonExpansion least_common_expansion(const BinaryTree& a, const BinaryTree& b);

/// The caret script turning `from` into the expansion `to`.
/// Throws if `from` is not a prefix of `to`.
std::vector<int> expansion_script(const BinaryTree& from, const BinaryTree& to);

}  // namespace wzt
