#pragma once

#include <string>

#include "wzt/binary_tree.hpp"
#include "wzt/cloning_system.hpp"
#include "wzt/order.hpp"

namespace wzt {

/// Element representative of the Thompson-like group over a cloning-system
/// instance: two planar binary trees with n leaves around a degree-n middle
/// element. Representatives related by expansions denote the same group
/// element; `equals` decides that relation.
class TreeDiagram {
 public:
  TreeDiagram(const CloningSystem& sys, BinaryTree left, Element middle, BinaryTree right);

  /// The degree-1 identity representative (leaf, 1, leaf).
  static TreeDiagram identity(const CloningSystem& sys);

  /// (T, 1, T) over an arbitrary tree.
  static TreeDiagram identity_at(const CloningSystem& sys, const BinaryTree& tree);

  const CloningSystem& system() const { return *sys_; }
  const BinaryTree& left() const { return left_; }
  const BinaryTree& right() const { return right_; }
  const Element& middle() const { return middle_; }
  int degree() const { return left_.num_leaves(); }

 private:
  const CloningSystem* sys_;
  BinaryTree left_;
  Element middle_;
  BinaryTree right_;
};

/// Expansion at leaf k: the left tree gains a caret at k, the right tree at
/// rho(g)(k), and the middle is cloned at k. The result represents the same
/// group element.
TreeDiagram simple_expand(const TreeDiagram& d, int k);

/// Iterated expansion until the right tree equals U (which must contain the
/// current right tree as a rooted prefix); each step picks the strand whose
/// right-tree caret lands on the next missing position.
TreeDiagram expand_right_to(const TreeDiagram& d, const BinaryTree& u);

/// Iterated expansion until the left tree equals U.
TreeDiagram expand_left_to(const TreeDiagram& d, const BinaryTree& u);

/// Group product: both factors are expanded until the inner trees agree on
/// the minimal common expansion, then the middles are multiplied.
TreeDiagram multiply(const TreeDiagram& a, const TreeDiagram& b);

TreeDiagram invert(const TreeDiagram& d);

/// A representative denotes the identity iff its middle is the instance
/// identity and its trees coincide (cloning maps are injective and fix the
/// identity, so this property is representative-independent).
bool is_identity(const TreeDiagram& d);

bool equals(const TreeDiagram& a, const TreeDiagram& b);

/// Comparison of two identity-middle representatives as dyadic PL
/// homeomorphisms: the diagram maps the right tree's dyadic partition
/// linearly onto the left tree's. The map exceeds the identity iff the
/// right-hand slope at the first moved point exceeds 1. Bi-invariant.
Ordering f_compare(const TreeDiagram& a, const TreeDiagram& b);

/// Sign of the tree-pair PL map alone (identity middle assumed).
Sign f_sign_of_trees(const BinaryTree& left, const BinaryTree& right);

/// Position of the diagram in the positive cone. Requires an ordered
/// instance. For left-ordered or non-pure instances a nonidentity middle
/// decides by the instance order and an identity middle falls back to the
/// PL-map comparison of the tree pair (a left-invariant cone). Pure
/// instances with bi-invariant orders compare the tree-pair part first and
/// the middle second, the lexicographic order of the kernel ⋊ F splitting,
/// which is additionally right-invariant.
Sign sign(const TreeDiagram& d);

/// Left-invariant order from the positive cone; bi-invariant when the
/// instance is pure with a bi-invariant order.
Ordering compare(const TreeDiagram& a, const TreeDiagram& b);

/// Replaces the middle by its symmetric-group projection, landing in the
/// instance of Thompson's V. A homomorphism.
TreeDiagram project(const TreeDiagram& d);

/// True iff the projection is the identity, i.e. the diagram lies in the
/// kernel of the projection onto V.
bool kernel_member(const TreeDiagram& d);

/// Re-embeds a projected diagram (identity permutation middle) into the
/// given instance with the identity middle. Inverse to `project` on the
/// image of a pure instance.
TreeDiagram lift(const CloningSystem& sys, const TreeDiagram& v_diagram);

std::string to_text(const TreeDiagram& d);

}  // namespace wzt
