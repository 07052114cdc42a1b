#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "wzt/binary_tree.hpp"
#include "wzt/harness.hpp"
#include "wzt/random.hpp"

using namespace wzt;

namespace {

BinaryTree T(const char* text) { return BinaryTree::parse(text); }

// All tree shapes with the given leaf count (Catalan enumeration).
std::vector<BinaryTree> all_trees(int leaves) {
  if (leaves == 1) return {BinaryTree::leaf()};
  std::vector<BinaryTree> out;
  for (int left = 1; left < leaves; ++left)
    for (const BinaryTree& l : all_trees(left))
      for (const BinaryTree& r : all_trees(leaves - left))
        out.push_back(BinaryTree::caret(l, r));
  return out;
}

BinaryTree replay(BinaryTree t, const std::vector<int>& script) {
  for (int k : script) t = adjoin_caret(t, k);
  return t;
}

// Prunes the caret whose children are the leaves (k, k+1); returns false if
// no such caret exists at leaf k.
bool prune_at(const BinaryTree& t, int k, BinaryTree& out) {
  if (t.is_leaf()) return false;
  int left_leaves = t.left().num_leaves();
  if (t.left().is_leaf() && t.right().is_leaf() && k == 1) {
    out = BinaryTree::leaf();
    return true;
  }
  if (k <= left_leaves) {
    BinaryTree pruned = t.left();
    if (!prune_at(t.left(), k, pruned)) return false;
    out = BinaryTree::caret(pruned, t.right());
    return true;
  }
  BinaryTree pruned = t.right();
  if (!prune_at(t.right(), k - left_leaves, pruned)) return false;
  out = BinaryTree::caret(t.left(), pruned);
  return true;
}

std::vector<int> leaf_depths(const BinaryTree& t, int depth = 0) {
  if (t.is_leaf()) return {depth};
  std::vector<int> out = leaf_depths(t.left(), depth + 1);
  std::vector<int> rhs = leaf_depths(t.right(), depth + 1);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

}  // namespace

TEST_CASE("caret adjunction on pinned cases") {
  CHECK(adjoin_caret(BinaryTree::leaf(), 1) == T("(L,L)"));
  CHECK(adjoin_caret(T("(L,L)"), 1) == T("((L,L),L)"));
  CHECK(adjoin_caret(T("((L,L),L)"), 3) == T("((L,L),(L,L))"));
  CHECK_THROWS_AS(adjoin_caret(T("(L,L)"), 3), std::invalid_argument);
}

TEST_CASE("caret adjunction shifts later leaves up by one") {
  RandomGen gen(5);
  for (int t = 0; t < 100; ++t) {
    BinaryTree tree = random_tree(gen.uniform_int(1, 8), gen);
    int k = gen.uniform_int(1, tree.num_leaves());
    std::vector<int> before = leaf_depths(tree);
    std::vector<int> after = leaf_depths(adjoin_caret(tree, k));
    REQUIRE(after.size() == before.size() + 1);
    for (int j = 1; j < k; ++j) CHECK(after[j - 1] == before[j - 1]);
    CHECK(after[k - 1] == before[k - 1] + 1);
    CHECK(after[k] == before[k - 1] + 1);
    for (size_t j = static_cast<size_t>(k); j < before.size(); ++j)
      CHECK(after[j + 1] == before[j]);
  }
}

TEST_CASE("least common expansion on pinned cases") {
  BinaryTree t = T("((L,L),L)");
  CommonExpansion same = least_common_expansion(t, t);
  CHECK(same.tree == t);
  CHECK(same.script_a.empty());
  CHECK(same.script_b.empty());

  CommonExpansion mixed = least_common_expansion(T("((L,L),L)"), T("(L,(L,L))"));
  CHECK(mixed.tree == T("((L,L),(L,L))"));
  CHECK(mixed.script_a == std::vector<int>{3});
  CHECK(mixed.script_b == std::vector<int>{1});

  CommonExpansion prefix = least_common_expansion(BinaryTree::leaf(), T("(L,L)"));
  CHECK(prefix.tree == T("(L,L)"));
  CHECK(prefix.script_a == std::vector<int>{1});
  CHECK(prefix.script_b.empty());
}

TEST_CASE("replaying the scripts reproduces the common expansion") {
  RandomGen gen(17);
  for (int t = 0; t < 200; ++t) {
    BinaryTree a = random_tree(gen.uniform_int(1, 8), gen);
    BinaryTree b = random_tree(gen.uniform_int(1, 8), gen);
    CommonExpansion ce = least_common_expansion(a, b);
    CHECK(is_prefix(a, ce.tree));
    CHECK(is_prefix(b, ce.tree));
    CHECK(replay(a, ce.script_a) == ce.tree);
    CHECK(replay(b, ce.script_b) == ce.tree);
  }
}

TEST_CASE("the common expansion is minimal, exhaustively for small trees") {
  std::vector<BinaryTree> trees;
  for (int n = 1; n <= 6; ++n)
    for (const BinaryTree& t : all_trees(n)) trees.push_back(t);
  for (const BinaryTree& a : trees) {
    for (const BinaryTree& b : trees) {
      CommonExpansion ce = least_common_expansion(a, b);
      // Removing any prunable caret of U must break containment of a or b.
      for (int k = 1; k < ce.tree.num_leaves(); ++k) {
        BinaryTree pruned = ce.tree;
        if (!prune_at(ce.tree, k, pruned)) continue;
        CHECK_FALSE((is_prefix(a, pruned) && is_prefix(b, pruned)));
      }
    }
  }
}

TEST_CASE("tree text round trip") {
  for (const char* text : {"L", "(L,L)", "((L,L),L)", "(L,(L,(L,L)))"}) {
    CHECK(BinaryTree::parse(text).to_text() == text);
  }
  CHECK(BinaryTree::parse(" ( L , ( L , L ) ) ") == T("(L,(L,L))"));
  CHECK_THROWS_AS(BinaryTree::parse("(L,L"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryTree::parse("X"), std::invalid_argument);
}
