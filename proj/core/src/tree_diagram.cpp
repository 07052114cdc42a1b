#include "wzt/tree_diagram.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wzt/instances.hpp"

namespace wzt {

TreeDiagram::TreeDiagram(const CloningSystem& sys, BinaryTree left, Element middle,
                         BinaryTree right)
    : sys_(&sys), left_(std::move(left)), middle_(std::move(middle)), right_(std::move(right)) {
  if (left_.num_leaves() != right_.num_leaves())
    throw std::invalid_argument("tree diagram: trees must have equal leaf counts");
}

TreeDiagram TreeDiagram::identity(const CloningSystem& sys) {
  return identity_at(sys, BinaryTree::leaf());
}

TreeDiagram TreeDiagram::identity_at(const CloningSystem& sys, const BinaryTree& tree) {
  return TreeDiagram(sys, tree, sys.identity(tree.num_leaves()), tree);
}

namespace {

void require_same_instance(const TreeDiagram& a, const TreeDiagram& b) {
  if (&a.system() != &b.system())
    throw std::invalid_argument("tree diagrams belong to different instances");
}

}  // namespace

TreeDiagram simple_expand(const TreeDiagram& d, int k) {
  const int n = d.degree();
  if (k < 1 || k > n) throw std::invalid_argument("simple_expand: leaf index out of range");
  const CloningSystem& sys = d.system();
  int right_leaf = sys.rho(n, d.middle())(k);
  return TreeDiagram(sys, adjoin_caret(d.left(), k), sys.clone(n, k, d.middle()),
                     adjoin_caret(d.right(), right_leaf));
}

TreeDiagram expand_right_to(const TreeDiagram& d, const BinaryTree& u) {
  if (!is_prefix(d.right(), u))
    throw std::invalid_argument("expand_right_to: target is not an expansion of the right tree");
  std::vector<int> script = expansion_script(d.right(), u);
  TreeDiagram cur = d;
  for (int j : script) {
    const Permutation inverse_rho = invert(cur.system().rho(cur.degree(), cur.middle()));
    cur = simple_expand(cur, inverse_rho(j));
  }
  return cur;
}

TreeDiagram expand_left_to(const TreeDiagram& d, const BinaryTree& u) {
  if (!is_prefix(d.left(), u))
    throw std::invalid_argument("expand_left_to: target is not an expansion of the left tree");
  std::vector<int> script = expansion_script(d.left(), u);
  TreeDiagram cur = d;
  for (int j : script) cur = simple_expand(cur, j);
  return cur;
}

TreeDiagram multiply(const TreeDiagram& a, const TreeDiagram& b) {
  require_same_instance(a, b);
  const CloningSystem& sys = a.system();
  CommonExpansion ce = least_common_expansion(a.right(), b.left());
  TreeDiagram ax = expand_right_to(a, ce.tree);
  TreeDiagram bx = expand_left_to(b, ce.tree);
  return TreeDiagram(sys, ax.left(),
                     sys.multiply(ax.degree(), ax.middle(), bx.middle()), bx.right());
}

TreeDiagram invert(const TreeDiagram& d) {
  return TreeDiagram(d.system(), d.right(), d.system().invert(d.degree(), d.middle()),
                     d.left());
}

bool is_identity(const TreeDiagram& d) {
  return d.system().is_identity(d.degree(), d.middle()) && d.left() == d.right();
}

bool equals(const TreeDiagram& a, const TreeDiagram& b) {
  require_same_instance(a, b);
  return is_identity(multiply(invert(a), b));
}

// ---------------------------------------------------------------------------
// PL-map comparison of tree pairs

namespace {

/// Dyadic partition of [0,1] induced by a tree's leaves: prefix sums of the
/// leaf widths 2^{-depth}, all over the common denominator 2^{max depth}.
struct DyadicPartition {
  std::vector<std::uint64_t> prefix;  // n-1 interior breakpoints
  int denominator_log;
};

void collect_depths(const BinaryTree& t, int depth, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(depth);
    return;
  }
  collect_depths(t.left(), depth + 1, out);
  collect_depths(t.right(), depth + 1, out);
}

DyadicPartition partition_of(const BinaryTree& t) {
  std::vector<int> depths;
  collect_depths(t, 0, depths);
  int max_depth = 0;
  for (int d : depths) max_depth = std::max(max_depth, d);
  if (max_depth > 62)
    throw std::runtime_error("tree too deep for exact dyadic arithmetic");
  DyadicPartition part;
  part.denominator_log = max_depth;
  std::uint64_t acc = 0;
  for (size_t i = 0; i + 1 < depths.size(); ++i) {
    acc += std::uint64_t{1} << (max_depth - depths[i]);
    part.prefix.push_back(acc);
  }
  return part;
}

}  // namespace

Sign f_sign_of_trees(const BinaryTree& left, const BinaryTree& right) {
  if (left.num_leaves() != right.num_leaves())
    throw std::invalid_argument("tree pair must have equal leaf counts");
  if (left == right) return Sign::zero;
  DyadicPartition range = partition_of(left);    // image breakpoints
  DyadicPartition domain = partition_of(right);  // domain breakpoints
  int common = std::max(range.denominator_log, domain.denominator_log);
  for (size_t j = 0; j < domain.prefix.size(); ++j) {
    std::uint64_t r = range.prefix[j] << (common - range.denominator_log);
    std::uint64_t d = domain.prefix[j] << (common - domain.denominator_log);
    if (r != d) {
      // First breakpoint where the map leaves the diagonal; the piece
      // starting at the previous breakpoint has slope > 1 iff r > d.
      return r > d ? Sign::positive : Sign::negative;
    }
  }
  return Sign::zero;  // unreachable: equal breakpoints mean equal trees
}

Ordering f_compare(const TreeDiagram& a, const TreeDiagram& b) {
  require_same_instance(a, b);
  const CloningSystem& sys = a.system();
  if (!sys.is_identity(a.degree(), a.middle()) || !sys.is_identity(b.degree(), b.middle()))
    throw std::invalid_argument("f_compare requires identity middles");
  TreeDiagram h = multiply(invert(a), b);
  return ordering_from_difference_sign(f_sign_of_trees(h.left(), h.right()));
}

Sign sign(const TreeDiagram& d) {
  const CloningSystem& sys = d.system();
  if (sys.order_kind() == OrderKind::none)
    throw std::logic_error("sign: instance carries no order");
  if (sys.pure() && sys.order_kind() == OrderKind::bi) {
    // Pure bi-ordered instances split as kernel ⋊ F; the bi-invariant order
    // lets the quotient dominate. A middle-dominant cone is only
    // left-invariant: conjugation twists the kernel part whenever the
    // tree-pair part is nontrivial.
    Sign f = f_sign_of_trees(d.left(), d.right());
    if (f != Sign::zero) return f;
    return sys.sign_of(d.degree(), d.middle());
  }
  if (!sys.is_identity(d.degree(), d.middle()))
    return sys.sign_of(d.degree(), d.middle());
  return f_sign_of_trees(d.left(), d.right());
}

Ordering compare(const TreeDiagram& a, const TreeDiagram& b) {
  require_same_instance(a, b);
  return ordering_from_difference_sign(sign(multiply(invert(a), b)));
}

TreeDiagram project(const TreeDiagram& d) {
  const CloningSystem& sys = d.system();
  return TreeDiagram(v_system(), d.left(),
                     Element(sys.rho(d.degree(), d.middle())), d.right());
}

bool kernel_member(const TreeDiagram& d) { return is_identity(project(d)); }

TreeDiagram lift(const CloningSystem& sys, const TreeDiagram& v_diagram) {
  if (&v_diagram.system() != &v_system())
    throw std::invalid_argument("lift expects a diagram over the V instance");
  if (!v_diagram.middle().as<Permutation>().is_identity())
    throw std::invalid_argument("lift expects an identity-permutation middle");
  return TreeDiagram(sys, v_diagram.left(), sys.identity(v_diagram.degree()),
                     v_diagram.right());
}

std::string to_text(const TreeDiagram& d) {
  auto tree_text = [](const BinaryTree& t) {
    // The two-leaf caret prints with its usual shorthand.
    if (!t.is_leaf() && t.left().is_leaf() && t.right().is_leaf()) return std::string("Λ");
    return t.to_text();
  };
  return "{" + tree_text(d.left()) + "; " + d.system().to_text(d.degree(), d.middle()) +
         "; " + tree_text(d.right()) + "}";
}

}  // namespace wzt
