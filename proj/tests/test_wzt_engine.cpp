#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "wzt/braid.hpp"
#include "wzt/harness.hpp"
#include "wzt/instances.hpp"
#include "wzt/tree_diagram.hpp"

using namespace wzt;

namespace {

BinaryTree T(const char* text) { return BinaryTree::parse(text); }

TreeDiagram braid_diagram(const char* left, const char* middle, const char* right) {
  BinaryTree l = T(left);
  return TreeDiagram(bv_system(), l, bv_system().parse(l.num_leaves(), middle), T(right));
}

TreeDiagram f_diagram(const char* left, const char* right) {
  BinaryTree l = T(left);
  return TreeDiagram(f_system(), l, f_system().identity(l.num_leaves()), T(right));
}

// The classical first generator of Thompson's F as a tree pair.
TreeDiagram x0() { return f_diagram("((L,L),L)", "(L,(L,L))"); }

}  // namespace

TEST_CASE("simple expansion on pinned cases") {
  // Trivial middle: both trees gain the caret at the same leaf.
  TreeDiagram f = f_diagram("(L,L)", "(L,L)");
  TreeDiagram fx = simple_expand(f, 1);
  CHECK(fx.left() == T("((L,L),L)"));
  CHECK(fx.right() == T("((L,L),L)"));

  // Braid middle: the right caret lands on the strand's endpoint.
  TreeDiagram b = braid_diagram("(L,L)", "b2: s1", "(L,L)");
  TreeDiagram bx = simple_expand(b, 1);
  CHECK(bx.left() == T("((L,L),L)"));
  CHECK(bx.right() == T("(L,(L,L))"));
  CHECK(equal_braids(bx.middle().as<BraidWord>(), BraidWord::parse("b3: s2 s1")));

  // Permutation middle with the strand-doubling clone.
  TreeDiagram v(v_system(), T("(L,L)"), Element(Permutation::parse("[2,1]")), T("(L,L)"));
  TreeDiagram vx = simple_expand(v, 1);
  CHECK(vx.left() == T("((L,L),L)"));
  CHECK(vx.right() == T("(L,(L,L))"));
  CHECK(vx.middle().as<Permutation>() == Permutation::parse("[2,3,1]"));

  CHECK_THROWS_AS(simple_expand(b, 3), std::invalid_argument);
}

TEST_CASE("expanding the right tree to a target") {
  TreeDiagram d = f_diagram("((L,L),L)", "(L,(L,L))");
  CHECK(expand_right_to(d, d.right()).right() == d.right());

  TreeDiagram grown = expand_right_to(d, T("((L,L),(L,L))"));
  CHECK(grown.right() == T("((L,L),(L,L))"));
  CHECK(grown.left() == T("(((L,L),L),L)"));

  TreeDiagram b = braid_diagram("(L,L)", "b2: s1", "(L,L)");
  TreeDiagram bg = expand_right_to(b, T("(L,(L,L))"));
  CHECK(bg.left() == T("((L,L),L)"));
  CHECK(equal_braids(bg.middle().as<BraidWord>(), BraidWord::parse("b3: s2 s1")));

  CHECK_THROWS_AS(expand_right_to(d, T("(L,L)")), std::invalid_argument);
}

TEST_CASE("multiplication on pinned cases") {
  CHECK(is_identity(multiply(x0(), invert(x0()))));

  TreeDiagram s = braid_diagram("(L,L)", "b2: s1", "(L,L)");
  TreeDiagram ss = multiply(s, s);
  CHECK(ss.left() == T("(L,L)"));
  CHECK(ss.right() == T("(L,L)"));
  CHECK(equal_braids(ss.middle().as<BraidWord>(), BraidWord::parse("b2: s1 s1")));

  TreeDiagram sq = multiply(x0(), x0());
  CHECK(sq.left() == T("(((L,L),L),L)"));
  CHECK(sq.right() == T("(L,(L,(L,L)))"));

  TreeDiagram other(v_system(), T("(L,L)"), v_system().identity(2), T("(L,L)"));
  CHECK_THROWS_AS(multiply(s, other), std::invalid_argument);
}

TEST_CASE("inversion") {
  TreeDiagram id = TreeDiagram::identity_at(f_system(), T("(L,(L,L))"));
  CHECK(is_identity(invert(id)));
  TreeDiagram s = braid_diagram("(L,L)", "b2: s1", "(L,L)");
  CHECK(invert(s).middle().as<BraidWord>() == BraidWord::parse("b2: s1^-1"));
  CHECK(equals(invert(invert(x0())), x0()));
}

TEST_CASE("identity detection") {
  CHECK(is_identity(TreeDiagram::identity_at(bv_system(), T("((L,L),L)"))));
  CHECK_FALSE(is_identity(braid_diagram("(L,L)", "b2: s1 s1", "(L,L)")));
  CHECK_FALSE(is_identity(x0()));
  // A trivial word that is not the empty word still counts as identity.
  CHECK(is_identity(braid_diagram("(L,L)", "b2: s1 s1^-1", "(L,L)")));
}

TEST_CASE("equality is expansion invariance") {
  TreeDiagram s = braid_diagram("(L,L)", "b2: s1", "(L,L)");
  CHECK(equals(s, simple_expand(s, 1)));
  CHECK(equals(s, simple_expand(s, 2)));
  CHECK_FALSE(equals(x0(), multiply(x0(), x0())));
  CHECK(equals(x0(), multiply(x0(), TreeDiagram::identity(f_system()))));
}

TEST_CASE("tree-pair comparison orders Thompson's F") {
  TreeDiagram id2 = TreeDiagram::identity_at(f_system(), T("(L,L)"));
  CHECK(f_compare(id2, id2) == Ordering::equal);
  // The first basic generator pushes points down, so it sits below the
  // identity: identity vs x0 compares greater.
  CHECK(f_compare(TreeDiagram::identity(f_system()), x0()) == Ordering::greater);
  CHECK(f_compare(x0(), multiply(x0(), x0())) ==
        f_compare(TreeDiagram::identity(f_system()), x0()));
  CHECK_THROWS_AS(f_compare(braid_diagram("(L,L)", "b2: s1", "(L,L)"),
                            braid_diagram("(L,L)", "b2: s1", "(L,L)")),
                  std::invalid_argument);
}

namespace {

// Exact dyadic fraction for the PL-map oracle below.
struct Dyadic {
  long long num;
  int exp;  // value = num / 2^exp
};

Dyadic normalize(Dyadic d) {
  while (d.exp > 0 && d.num % 2 == 0) {
    d.num /= 2;
    --d.exp;
  }
  return d;
}

int cmp_dyadic(Dyadic a, Dyadic b) {
  int e = std::max(a.exp, b.exp);
  long long x = a.num << (e - a.exp);
  long long y = b.num << (e - b.exp);
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::vector<Dyadic> breakpoints(const BinaryTree& t) {
  std::vector<int> depths;
  std::function<void(const BinaryTree&, int)> walk = [&](const BinaryTree& u, int d) {
    if (u.is_leaf()) {
      depths.push_back(d);
      return;
    }
    walk(u.left(), d + 1);
    walk(u.right(), d + 1);
  };
  walk(t, 0);
  int maxd = *std::max_element(depths.begin(), depths.end());
  std::vector<Dyadic> out{{0, 0}};
  long long acc = 0;
  for (int d : depths) {
    acc += 1LL << (maxd - d);
    out.push_back(normalize({acc, maxd}));
  }
  return out;  // 0 = b_0 < b_1 < ... < b_n = 1
}

// Evaluates the PL map of the tree pair (range <- domain) at x.
Dyadic eval_pl(const std::vector<Dyadic>& range, const std::vector<Dyadic>& domain,
               Dyadic x) {
  for (size_t j = 1; j < domain.size(); ++j) {
    if (cmp_dyadic(x, domain[j]) <= 0) {
      // Linear on [domain[j-1], domain[j]] onto [range[j-1], range[j]].
      int e = std::max({x.exp, domain[j - 1].exp, domain[j].exp, range[j - 1].exp,
                        range[j].exp});
      auto lift = [e](Dyadic d) { return d.num << (e - d.exp); };
      long long dx = lift(x) - lift(domain[j - 1]);
      long long dlen = lift(domain[j]) - lift(domain[j - 1]);
      long long rlen = lift(range[j]) - lift(range[j - 1]);
      // value = range[j-1] + dx * rlen / dlen; dlen and rlen are powers of 2.
      long long scaled = dx * rlen / dlen;
      return normalize({lift(range[j - 1]) + scaled, e});
    }
  }
  return x;
}

// Sign of the tree-pair map by direct evaluation: walk the domain partition,
// find the first point moved by the map, look which way it moves.
Sign pl_sign_oracle(const BinaryTree& left, const BinaryTree& right) {
  std::vector<Dyadic> range = breakpoints(left);
  std::vector<Dyadic> domain = breakpoints(right);
  for (size_t j = 1; j + 1 < domain.size(); ++j) {
    int c = cmp_dyadic(eval_pl(range, domain, domain[j]), domain[j]);
    if (c != 0) return c > 0 ? Sign::positive : Sign::negative;
  }
  // Breakpoints map to breakpoints, so fixing all of them forces identity.
  return Sign::zero;
}

}  // namespace

TEST_CASE("tree-pair signs match direct PL-map evaluation") {
  RandomGen gen(211);
  for (int t = 0; t < 400; ++t) {
    int n = gen.uniform_int(1, 6);
    BinaryTree left = random_tree(n, gen);
    BinaryTree right = random_tree(n, gen);
    CAPTURE(left.to_text());
    CAPTURE(right.to_text());
    CHECK(f_sign_of_trees(left, right) == pl_sign_oracle(left, right));
  }
}

TEST_CASE("the classical generator relations of Thompson's F hold") {
  // x_n acts as x_0 scaled into the right-hand dyadic corner; the defining
  // relations say conjugating x_n by x_0 shifts the index.
  auto spine_graft = [](int steps, const BinaryTree& base) {
    BinaryTree t = base;
    for (int i = 0; i < steps; ++i) t = BinaryTree::caret(BinaryTree::leaf(), t);
    return t;
  };
  auto xn = [&](int n) {
    return TreeDiagram(f_system(), spine_graft(n, T("((L,L),L)")),
                       f_system().identity(n + 3), spine_graft(n, T("(L,(L,L))")));
  };
  for (int n = 1; n <= 4; ++n) {
    TreeDiagram conj = multiply(multiply(invert(xn(0)), xn(n)), xn(0));
    CHECK(equals(conj, xn(n + 1)));
    CHECK_FALSE(equals(xn(n), xn(n + 1)));
  }
}

TEST_CASE("sign of diagrams") {
  CHECK(sign(TreeDiagram::identity(bv_system())) == Sign::zero);
  CHECK(sign(braid_diagram("(L,L)", "b2: s1", "(L,L)")) == Sign::positive);
  CHECK(sign(invert(x0())) == Sign::positive);
  CHECK(sign(x0()) == Sign::negative);
  TreeDiagram v(v_system(), T("(L,L)"), Element(Permutation::parse("[2,1]")), T("(L,L)"));
  CHECK_THROWS_AS(sign(v), std::logic_error);
}

TEST_CASE("comparison of diagrams") {
  TreeDiagram s = braid_diagram("(L,L)", "b2: s1", "(L,L)");
  TreeDiagram si = braid_diagram("(L,L)", "b2: s1^-1", "(L,L)");
  CHECK(compare(TreeDiagram::identity(bv_system()), s) == Ordering::less);
  CHECK(compare(si, s) == Ordering::less);
  CHECK(compare(s, s) == Ordering::equal);
}

TEST_CASE("projection to the permutation instance") {
  TreeDiagram s = braid_diagram("(L,L)", "b2: s1", "(L,L)");
  TreeDiagram p = project(s);
  CHECK(&p.system() == &v_system());
  CHECK(p.middle().as<Permutation>() == Permutation::parse("[2,1]"));
  CHECK_FALSE(kernel_member(s));
  CHECK(kernel_member(braid_diagram("(L,L)", "b2: s1 s1", "(L,L)")));
  CHECK_FALSE(kernel_member(x0()));
  CHECK(kernel_member(TreeDiagram(bv_system(), T("(L,L)"),
                                  Element(BraidWord::parse("b2: s1 s1")), T("(L,L)"))));

  // The projection of a pure-instance diagram lands on identity middles.
  TreeDiagram bf_elem(bf_system(), T("(L,L)"), Element(BraidWord::parse("b2: s1 s1")),
                      T("(L,L)"));
  CHECK(project(bf_elem).middle().as<Permutation>().is_identity());
}

TEST_CASE("projection is a homomorphism") {
  RandomGen gen(89);
  for (int t = 0; t < 60; ++t) {
    TreeDiagram a = random_diagram(bv_system(), 4, 8, gen);
    TreeDiagram b = random_diagram(bv_system(), 4, 8, gen);
    CHECK(equals(project(multiply(a, b)), multiply(project(a), project(b))));
  }
}

TEST_CASE("group laws across all instances") {
  RandomGen gen(97);
  for (const char* name : {"f", "v", "bv", "bf", "dirpow"}) {
    const CloningSystem& sys = find_instance(name);
    for (int t = 0; t < 30; ++t) {
      TreeDiagram a = random_diagram(sys, 4, 8, gen);
      TreeDiagram b = random_diagram(sys, 4, 8, gen);
      TreeDiagram c = random_diagram(sys, 4, 8, gen);
      CAPTURE(name);
      CHECK(equals(multiply(multiply(a, b), c), multiply(a, multiply(b, c))));
      CHECK(equals(multiply(a, TreeDiagram::identity(sys)), a));
      CHECK(is_identity(multiply(invert(a), a)));
    }
  }
}

TEST_CASE("semidirect factorization for pure instances") {
  RandomGen gen(101);
  for (const char* name : {"f", "bf", "dirpow"}) {
    const CloningSystem& sys = find_instance(name);
    for (int t = 0; t < 25; ++t) {
      TreeDiagram d = random_diagram(sys, 4, 8, gen);
      TreeDiagram f = lift(sys, project(d));
      TreeDiagram k = multiply(d, invert(f));
      CAPTURE(name);
      CHECK(kernel_member(k));
      CHECK(equals(multiply(k, f), d));
    }
  }
}

TEST_CASE("tree subgroups are conjugate inside the big group") {
  RandomGen gen(103);
  for (const char* name : {"f", "bf", "dirpow"}) {
    const CloningSystem& sys = find_instance(name);
    for (int t = 0; t < 25; ++t) {
      int n = gen.uniform_int(1, 5);
      BinaryTree tree1 = random_tree(n, gen);
      BinaryTree tree2 = random_tree(n, gen);
      Element g = sys.random_element(n, 8, gen);
      TreeDiagram a(sys, tree1, sys.identity(n), tree2);
      TreeDiagram m(sys, tree2, g, tree2);
      TreeDiagram b(sys, tree2, sys.identity(n), tree1);
      CHECK(equals(multiply(multiply(a, m), b), TreeDiagram(sys, tree1, g, tree1)));
    }
  }
}

TEST_CASE("diagram text") {
  CHECK(to_text(braid_diagram("(L,L)", "b2: s1", "(L,L)")) == "{Λ; b2: s1; Λ}");
  CHECK(to_text(x0()) == "{((L,L),L); 1; (L,(L,L))}");
}
