#include "wzt/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "wzt/axiom_checks.hpp"
#include "wzt/braid.hpp"
#include "wzt/instances.hpp"
#include "wzt/magnus.hpp"
#include "wzt/pure_braid.hpp"

namespace wzt {

namespace {

// ---------------------------------------------------------------------------
// Random generators

BinaryTree tree_from_arrays(const std::vector<std::array<int, 2>>& nodes, int v) {
  if (nodes[static_cast<size_t>(v)][0] < 0) return BinaryTree::leaf();
  return BinaryTree::caret(tree_from_arrays(nodes, nodes[static_cast<size_t>(v)][0]),
                           tree_from_arrays(nodes, nodes[static_cast<size_t>(v)][1]));
}

}  // namespace

BinaryTree random_tree(int leaves, RandomGen& gen) {
  if (leaves < 1) throw std::invalid_argument("random_tree: need at least one leaf");
  std::vector<std::array<int, 2>> nodes{{-1, -1}};
  for (int k = 1; k < leaves; ++k) {
    int v = gen.uniform_int(0, static_cast<int>(nodes.size()) - 1);
    nodes.push_back(nodes[static_cast<size_t>(v)]);  // old subtree moves down
    int moved = static_cast<int>(nodes.size()) - 1;
    nodes.push_back({-1, -1});  // fresh leaf
    int fresh = static_cast<int>(nodes.size()) - 1;
    nodes[static_cast<size_t>(v)] =
        gen.coin() ? std::array<int, 2>{moved, fresh} : std::array<int, 2>{fresh, moved};
  }
  return tree_from_arrays(nodes, 0);
}

TreeDiagram random_diagram(const CloningSystem& sys, int max_degree, int size_bound,
                           RandomGen& gen) {
  int n = gen.uniform_int(1, std::max(1, max_degree));
  return TreeDiagram(sys, random_tree(n, gen), sys.random_element(n, size_bound, gen),
                     random_tree(n, gen));
}

namespace {

BraidWord random_braid(int strands, int size_bound, RandomGen& gen) {
  if (strands < 2) return BraidWord::identity(strands);
  int length = gen.geometric_length(12, std::max(0, size_bound));
  std::vector<BraidLetter> letters;
  for (int t = 0; t < length; ++t)
    letters.push_back(BraidLetter{gen.uniform_int(1, strands - 1), gen.coin() ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

BraidWord random_pure_braid(int strands, int size_bound, RandomGen& gen) {
  if (strands < 2) return BraidWord::identity(strands);
  int count = 1 + gen.geometric_length(2, std::max(1, size_bound / 4));
  BraidWord w = BraidWord::identity(strands);
  for (int t = 0; t < count; ++t) {
    int j = gen.uniform_int(2, strands);
    int i = gen.uniform_int(1, j - 1);
    BraidWord band = band_generator(strands, i, j);
    if (gen.coin()) band = invert(band);
    w = concat(w, band);
  }
  return w;
}

// A word satisfying the positivity condition by construction: some index i
// occurs, only positively, and nothing below i occurs at all.
BraidWord random_condition_d_word(int strands, int size_bound, RandomGen& gen) {
  int i = gen.uniform_int(1, strands - 1);
  int length = 1 + gen.geometric_length(8, std::max(1, size_bound - 1));
  std::vector<BraidLetter> letters;
  bool used_main = false;
  for (int t = 0; t < length; ++t) {
    int j = gen.uniform_int(i, strands - 1);
    if (j == i) {
      letters.push_back(BraidLetter{i, 1});
      used_main = true;
    } else {
      letters.push_back(BraidLetter{j, gen.coin() ? 1 : -1});
    }
  }
  if (!used_main) {
    size_t at = letters.empty() ? 0 : static_cast<size_t>(gen.uniform_int(
                                          0, static_cast<int>(letters.size())));
    letters.insert(letters.begin() + static_cast<ptrdiff_t>(at), BraidLetter{i, 1});
  }
  return BraidWord(strands, std::move(letters));
}

FreeWord random_free_word(int rank, int size_bound, RandomGen& gen) {
  int length = gen.geometric_length(8, std::max(0, size_bound));
  std::vector<FreeLetter> letters;
  for (int t = 0; t < length; ++t)
    letters.push_back(FreeLetter{gen.uniform_int(1, rank), gen.coin() ? 1 : -1});
  return FreeWord(rank, std::move(letters));
}

// ---------------------------------------------------------------------------
// Trial plumbing

struct TrialContext {
  const CloningSystem& sys;
  const TrialConfig& cfg;
  RandomGen& gen;
};

enum class TrialOutcome { pass, fail, skip };

using TrialFn = std::function<TrialOutcome(TrialContext&, std::string&)>;

PropertyResult run_property(const std::string& name, const TrialConfig& cfg,
                            const CloningSystem& sys, RandomGen& gen, const TrialFn& fn) {
  PropertyResult res;
  res.name = name;
  TrialContext ctx{sys, cfg, gen};
  for (int t = 0; t < cfg.trials; ++t) {
    std::string witness;
    switch (fn(ctx, witness)) {
      case TrialOutcome::pass: ++res.passed; break;
      case TrialOutcome::skip: ++res.skipped; break;
      case TrialOutcome::fail:
        ++res.failed;
        if (res.first_counterexample.empty()) res.first_counterexample = witness;
        break;
    }
  }
  return res;
}

TrialOutcome as_outcome(bool ok, const std::string& witness, std::string& out) {
  if (!ok) out = witness;
  return ok ? TrialOutcome::pass : TrialOutcome::fail;
}

TrialOutcome from_check(const CheckResult& r, std::string& out) {
  if (!r.ok) out = r.detail;
  return r.ok ? TrialOutcome::pass : TrialOutcome::fail;
}

int random_degree(TrialContext& ctx, int lo = 1) {
  return ctx.gen.uniform_int(lo, std::max(lo, ctx.cfg.max_degree));
}

Element random_elem(TrialContext& ctx, int n) {
  return ctx.sys.random_element(n, ctx.cfg.size_bound, ctx.gen);
}

// Samples an instance-positive element, inverting negative draws; fails the
// precondition (skip) when only identity elements come up.
bool sample_positive(TrialContext& ctx, int n, Element& out) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Element g = random_elem(ctx, n);
    Sign s = ctx.sys.sign_of(n, g);
    if (s == Sign::positive) {
      out = g;
      return true;
    }
    if (s == Sign::negative) {
      out = ctx.sys.invert(n, g);
      return true;
    }
  }
  return false;
}

bool sample_positive_diagram(TrialContext& ctx, TreeDiagram& out) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    TreeDiagram d = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
    Sign s = sign(d);
    if (s == Sign::positive) {
      out = d;
      return true;
    }
    if (s == Sign::negative) {
      out = invert(d);
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Axiom suite

TrialOutcome trial_axiom1(TrialContext& ctx, std::string& out) {
  int n = random_degree(ctx);
  int k = ctx.gen.uniform_int(1, n);
  return from_check(check_axiom1(ctx.sys, n, k, random_elem(ctx, n), random_elem(ctx, n)),
                    out);
}

TrialOutcome trial_axiom2(TrialContext& ctx, std::string& out) {
  int n = std::max(2, random_degree(ctx, 2));
  int k = ctx.gen.uniform_int(1, n - 1);
  int l = ctx.gen.uniform_int(k + 1, n);
  return from_check(check_axiom2(ctx.sys, n, k, l, random_elem(ctx, n)), out);
}

TrialOutcome trial_axiom3(TrialContext& ctx, std::string& out) {
  int n = random_degree(ctx);
  int k = ctx.gen.uniform_int(1, n);
  return from_check(check_axiom3(ctx.sys, n, k, random_elem(ctx, n)), out);
}

TrialOutcome trial_clone_identity(TrialContext& ctx, std::string& out) {
  int n = random_degree(ctx);
  int k = ctx.gen.uniform_int(1, n);
  Element cloned = ctx.sys.clone(n, k, ctx.sys.identity(n));
  bool ok = ctx.sys.is_identity(n + 1, cloned);
  return as_outcome(ok,
                    "clone of identity at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " gave " + ctx.sys.to_text(n + 1, cloned),
                    out);
}

TrialOutcome trial_clone_injective(TrialContext& ctx, std::string& out) {
  int n = random_degree(ctx);
  int k = ctx.gen.uniform_int(1, n);
  Element g = random_elem(ctx, n);
  Element h = random_elem(ctx, n);
  if (ctx.sys.equal(n, g, h)) return TrialOutcome::skip;
  bool ok = !ctx.sys.equal(n + 1, ctx.sys.clone(n, k, g), ctx.sys.clone(n, k, h));
  return as_outcome(ok,
                    "distinct elements clone to equal values: n=" + std::to_string(n) +
                        " k=" + std::to_string(k) + " g=" + ctx.sys.to_text(n, g) +
                        " h=" + ctx.sys.to_text(n, h),
                    out);
}

TrialOutcome trial_clone_inverse(TrialContext& ctx, std::string& out) {
  int n = random_degree(ctx);
  int k = ctx.gen.uniform_int(1, n);
  return from_check(check_clone_inverse_identity(ctx.sys, n, k, random_elem(ctx, n)), out);
}

// Exhaustive sweep of all three axioms over the full symmetric groups at
// small degree; only feasible for finite instance domains.
PropertyResult exhaustive_symmetric_axioms(const CloningSystem& sys, int max_degree) {
  PropertyResult res;
  res.name = "axioms-exhaustive(n<=" + std::to_string(max_degree) + ")";
  auto all_perms = [](int n) {
    std::vector<Permutation> out;
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i + 1;
    do {
      out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
  };
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<Element> elems;
    if (sys.name() == "v") {
      for (const Permutation& p : all_perms(n)) elems.push_back(Element(p));
    } else {
      elems.push_back(sys.identity(n));
    }
    for (const Element& g : elems) {
      for (int k = 1; k <= n; ++k) {
        CheckResult a3 = check_axiom3(sys, n, k, g);
        if (a3.ok)
          ++res.passed;
        else {
          ++res.failed;
          if (res.first_counterexample.empty()) res.first_counterexample = a3.detail;
        }
        for (int l = k + 1; l <= n; ++l) {
          CheckResult a2 = check_axiom2(sys, n, k, l, g);
          if (a2.ok)
            ++res.passed;
          else {
            ++res.failed;
            if (res.first_counterexample.empty()) res.first_counterexample = a2.detail;
          }
        }
        for (const Element& h : elems) {
          CheckResult a1 = check_axiom1(sys, n, k, g, h);
          if (a1.ok)
            ++res.passed;
          else {
            ++res.failed;
            if (res.first_counterexample.empty()) res.first_counterexample = a1.detail;
          }
        }
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Order suite

TrialOutcome trial_order_compat(TrialContext& ctx, std::string& out) {
  int n = random_degree(ctx);
  Element g;
  if (!sample_positive(ctx, n, g)) return TrialOutcome::skip;
  int k = ctx.gen.uniform_int(1, n);
  return from_check(check_order_compatibility(ctx.sys, n, k, g), out);
}

TrialOutcome trial_clone_sign_preserved(TrialContext& ctx, std::string& out) {
  // Sign of a clone equals the sign of the element, for every sign.
  int n = random_degree(ctx);
  int k = ctx.gen.uniform_int(1, n);
  Element g = random_elem(ctx, n);
  Sign before = ctx.sys.sign_of(n, g);
  Sign after = ctx.sys.sign_of(n + 1, ctx.sys.clone(n, k, g));
  return as_outcome(before == after,
                    "clone changed sign: n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " g=" + ctx.sys.to_text(n, g),
                    out);
}

TrialOutcome trial_cone_closure(TrialContext& ctx, std::string& out) {
  TreeDiagram a = TreeDiagram::identity(ctx.sys);
  TreeDiagram b = TreeDiagram::identity(ctx.sys);
  if (!sample_positive_diagram(ctx, a) || !sample_positive_diagram(ctx, b))
    return TrialOutcome::skip;
  bool ok = sign(multiply(a, b)) == Sign::positive;
  return as_outcome(ok, "positive product not positive: a=" + to_text(a) + " b=" + to_text(b),
                    out);
}

TrialOutcome trial_cone_trichotomy(TrialContext& ctx, std::string& out) {
  TreeDiagram d = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  Sign s = sign(d);
  Sign si = sign(invert(d));
  bool ok = (s == Sign::zero && si == Sign::zero && is_identity(d)) ||
            (s == Sign::positive && si == Sign::negative) ||
            (s == Sign::negative && si == Sign::positive);
  return as_outcome(ok, "trichotomy failed for " + to_text(d), out);
}

TrialOutcome trial_compare_left_invariant(TrialContext& ctx, std::string& out) {
  TreeDiagram a = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram b = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram c = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  bool ok = compare(multiply(c, a), multiply(c, b)) == compare(a, b);
  return as_outcome(ok,
                    "left invariance failed: a=" + to_text(a) + " b=" + to_text(b) +
                        " c=" + to_text(c),
                    out);
}

TrialOutcome trial_compare_right_invariant(TrialContext& ctx, std::string& out) {
  TreeDiagram a = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram b = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram c = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  bool ok = compare(multiply(a, c), multiply(b, c)) == compare(a, b);
  return as_outcome(ok,
                    "right invariance failed: a=" + to_text(a) + " b=" + to_text(b) +
                        " c=" + to_text(c),
                    out);
}

// ---------------------------------------------------------------------------
// Engine suite

TrialOutcome trial_group_laws(TrialContext& ctx, std::string& out) {
  TreeDiagram a = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram b = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram c = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  bool assoc = equals(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  bool unit = equals(multiply(a, TreeDiagram::identity(ctx.sys)), a);
  bool inv = is_identity(multiply(a, invert(a)));
  return as_outcome(assoc && unit && inv,
                    std::string(!assoc  ? "associativity"
                                : !unit ? "identity law"
                                        : "inverse law") +
                        " failed: a=" + to_text(a) + " b=" + to_text(b) + " c=" + to_text(c),
                    out);
}

TrialOutcome trial_expansion_equivalence(TrialContext& ctx, std::string& out) {
  TreeDiagram d = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  for (int k = 1; k <= d.degree(); ++k) {
    if (!equals(d, simple_expand(d, k)))
      return as_outcome(false, "expansion at k=" + std::to_string(k) +
                                   " not equivalent: " + to_text(d),
                        out);
  }
  return TrialOutcome::pass;
}

TrialOutcome trial_project_homomorphism(TrialContext& ctx, std::string& out) {
  TreeDiagram a = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram b = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  bool ok = equals(project(multiply(a, b)), multiply(project(a), project(b)));
  return as_outcome(ok, "projection not multiplicative: a=" + to_text(a) + " b=" + to_text(b),
                    out);
}

TrialOutcome trial_semidirect(TrialContext& ctx, std::string& out) {
  TreeDiagram d = random_diagram(ctx.sys, ctx.cfg.max_degree, ctx.cfg.size_bound, ctx.gen);
  TreeDiagram p = project(d);
  TreeDiagram f = lift(ctx.sys, p);
  TreeDiagram k = multiply(d, invert(f));
  bool ok = kernel_member(k) && equals(multiply(k, f), d);
  return as_outcome(ok, "semidirect factorization failed for " + to_text(d), out);
}

TrialOutcome trial_tree_conjugacy(TrialContext& ctx, std::string& out) {
  int n = random_degree(ctx);
  BinaryTree t = random_tree(n, ctx.gen);
  BinaryTree t2 = random_tree(n, ctx.gen);
  Element g = random_elem(ctx, n);
  TreeDiagram left(ctx.sys, t, ctx.sys.identity(n), t2);
  TreeDiagram mid(ctx.sys, t2, g, t2);
  TreeDiagram right(ctx.sys, t2, ctx.sys.identity(n), t);
  TreeDiagram direct(ctx.sys, t, g, t);
  bool ok = equals(multiply(multiply(left, mid), right), direct);
  return as_outcome(ok, "conjugation between tree subgroups failed: g=" +
                            ctx.sys.to_text(n, g) + " T=" + t.to_text() + " T'=" + t2.to_text(),
                    out);
}

// ---------------------------------------------------------------------------
// Braid suite (runs on braid words directly)

int braid_degree(TrialContext& ctx) {
  return ctx.gen.uniform_int(2, std::max(2, ctx.cfg.max_degree));
}

TrialOutcome trial_reduction_preserves_element(TrialContext& ctx, std::string& out) {
  int n = braid_degree(ctx);
  BraidWord w = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord reduced = handle_reduce(w);
  bool ok = !has_handle(reduced) && equal_braids(w, free_reduce(w)) &&
            equal_braids(w, reduced);
  return as_outcome(ok, "handle reduction broke the element: " + w.to_text() + " -> " +
                            reduced.to_text(),
                    out);
}

TrialOutcome trial_braid_trichotomy(TrialContext& ctx, std::string& out) {
  int n = braid_degree(ctx);
  BraidWord w = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  Sign s = sigma_positivity(w);
  Sign si = sigma_positivity(invert(w));
  bool ok = (s == Sign::zero && si == Sign::zero) ||
            (s == Sign::positive && si == Sign::negative) ||
            (s == Sign::negative && si == Sign::positive);
  return as_outcome(ok, "sign trichotomy failed: " + w.to_text(), out);
}

TrialOutcome trial_braid_transitivity(TrialContext& ctx, std::string& out) {
  int n = braid_degree(ctx);
  BraidWord a = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord b = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord c = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  auto le = [](Ordering o) { return o != Ordering::greater; };
  bool ok = true;
  if (le(dehornoy_compare(a, b)) && le(dehornoy_compare(b, c)))
    ok = le(dehornoy_compare(a, c));
  return as_outcome(ok, "transitivity failed: a=" + a.to_text() + " b=" + b.to_text() +
                            " c=" + c.to_text(),
                    out);
}

TrialOutcome trial_braid_left_invariance(TrialContext& ctx, std::string& out) {
  int n = braid_degree(ctx);
  BraidWord a = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord b = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord c = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  bool ok = dehornoy_compare(concat(c, a), concat(c, b)) == dehornoy_compare(a, b);
  return as_outcome(ok, "left invariance failed: a=" + a.to_text() + " b=" + b.to_text() +
                            " c=" + c.to_text(),
                    out);
}

TrialOutcome trial_condition_d_clone(TrialContext& ctx, std::string& out) {
  int n = braid_degree(ctx);
  BraidWord w = random_condition_d_word(n, ctx.cfg.size_bound, ctx.gen);
  for (int k = 1; k <= n; ++k) {
    if (sigma_positivity(clone_braid(n, k, w)) != Sign::positive)
      return as_outcome(false,
                        "positivity lost under cloning at k=" + std::to_string(k) + ": " +
                            w.to_text(),
                        out);
  }
  return TrialOutcome::pass;
}

TrialOutcome trial_clone_permutation(TrialContext& ctx, std::string& out) {
  int n = braid_degree(ctx);
  int k = ctx.gen.uniform_int(1, n);
  BraidWord w = random_braid(n, ctx.cfg.size_bound, ctx.gen);
  Permutation actual = braid_permutation(clone_braid(n, k, w));
  Permutation plain = sigma_expand(braid_permutation(w), k);
  Permutation twisted = compose(plain, transposition(n + 1, k));
  bool ok = actual == plain || actual == twisted;
  return as_outcome(ok, "projection of clone is not a strand-doubling: " + w.to_text() +
                            " k=" + std::to_string(k),
                    out);
}

// ---------------------------------------------------------------------------
// Magnus suite

int magnus_rank(TrialContext& ctx) {
  return ctx.gen.uniform_int(1, std::min(4, std::max(1, ctx.cfg.max_degree)));
}

TrialOutcome trial_magnus_bi_invariance(TrialContext& ctx, std::string& out) {
  int rank = magnus_rank(ctx);
  FreeWord a = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  FreeWord b = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  FreeWord c = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  Ordering base = magnus_compare(a, b);
  bool ok = magnus_compare(concat(c, a), concat(c, b)) == base &&
            magnus_compare(concat(a, c), concat(b, c)) == base;
  return as_outcome(ok, "bi-invariance failed: a=" + a.to_text() + " b=" + b.to_text() +
                            " c=" + c.to_text(),
                    out);
}

TrialOutcome trial_magnus_total_antisymmetric(TrialContext& ctx, std::string& out) {
  int rank = magnus_rank(ctx);
  FreeWord a = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  FreeWord b = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  Ordering ab = magnus_compare(a, b);
  Ordering ba = magnus_compare(b, a);
  bool ok = ba == opposite(ab) && ((ab == Ordering::equal) == equivalent(a, b));
  return as_outcome(ok, "totality/antisymmetry failed: a=" + a.to_text() + " b=" + b.to_text(),
                    out);
}

TrialOutcome trial_magnus_transitivity(TrialContext& ctx, std::string& out) {
  int rank = magnus_rank(ctx);
  FreeWord a = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  FreeWord b = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  FreeWord c = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  auto le = [](Ordering o) { return o != Ordering::greater; };
  bool ok = true;
  if (le(magnus_compare(a, b)) && le(magnus_compare(b, c))) ok = le(magnus_compare(a, c));
  return as_outcome(ok, "transitivity failed: a=" + a.to_text() + " b=" + b.to_text() +
                            " c=" + c.to_text(),
                    out);
}

TrialOutcome trial_magnus_multiplicative(TrialContext& ctx, std::string& out) {
  int rank = magnus_rank(ctx);
  FreeWord u = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  FreeWord v = random_free_word(rank, ctx.cfg.size_bound, ctx.gen);
  int degree = ctx.gen.uniform_int(1, 6);
  MagnusSeries lhs = magnus_expand(concat(u, v), degree);
  MagnusSeries rhs = truncate(multiply(magnus_expand(u, degree), magnus_expand(v, degree)),
                              degree);
  return as_outcome(lhs == rhs,
                    "expansion not multiplicative: u=" + u.to_text() + " v=" + v.to_text() +
                        " d=" + std::to_string(degree),
                    out);
}

// ---------------------------------------------------------------------------
// Combing suite

int comb_degree(TrialContext& ctx) {
  return ctx.gen.uniform_int(2, std::max(2, std::min(5, ctx.cfg.max_degree)));
}

TrialOutcome trial_comb_recomposition(TrialContext& ctx, std::string& out) {
  int n = comb_degree(ctx);
  BraidWord w = random_pure_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord rebuilt = recompose(comb(w));
  return as_outcome(equal_braids(w, rebuilt),
                    "recomposition differs from input: " + w.to_text(), out);
}

TrialOutcome trial_purebraid_bi_invariance(TrialContext& ctx, std::string& out) {
  int n = comb_degree(ctx);
  BraidWord a = random_pure_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord b = random_pure_braid(n, ctx.cfg.size_bound, ctx.gen);
  BraidWord c = random_pure_braid(n, ctx.cfg.size_bound, ctx.gen);
  Ordering base = purebraid_compare(a, b);
  bool ok = purebraid_compare(concat(c, a), concat(c, b)) == base &&
            purebraid_compare(concat(a, c), concat(b, c)) == base;
  return as_outcome(ok, "bi-invariance failed: a=" + a.to_text() + " b=" + b.to_text() +
                            " c=" + c.to_text(),
                    out);
}

TrialOutcome trial_purebraid_clone_positive(TrialContext& ctx, std::string& out) {
  int n = comb_degree(ctx);
  BraidWord w = random_pure_braid(n, ctx.cfg.size_bound, ctx.gen);
  Sign s = purebraid_sign(w);
  if (s == Sign::zero) return TrialOutcome::skip;
  if (s == Sign::negative) w = invert(w);
  for (int k = 1; k <= n; ++k) {
    if (purebraid_sign(clone_braid(n, k, w)) != Sign::positive)
      return as_outcome(false,
                        "positivity lost under cloning at k=" + std::to_string(k) + ": " +
                            w.to_text(),
                        out);
  }
  return TrialOutcome::pass;
}

TrialOutcome trial_purebraid_equal_iff_trivial(TrialContext& ctx, std::string& out) {
  int n = comb_degree(ctx);
  BraidWord w = random_pure_braid(n, ctx.cfg.size_bound, ctx.gen);
  bool order_trivial =
      purebraid_compare(w, BraidWord::identity(n)) == Ordering::equal;
  bool element_trivial = equal_braids(w, BraidWord::identity(n));
  return as_outcome(order_trivial == element_trivial,
                    "order equality disagrees with the word problem: " + w.to_text(), out);
}

// ---------------------------------------------------------------------------
// Suite assembly

struct NamedTrial {
  std::string name;
  TrialFn fn;
};

std::vector<NamedTrial> suite_trials(const std::string& suite, const CloningSystem& sys) {
  std::vector<NamedTrial> out;
  const OrderKind order = sys.order_kind();
  if (suite == "axioms") {
    out.push_back({"axiom1-product", trial_axiom1});
    out.push_back({"axiom2-commutation", trial_axiom2});
    out.push_back({"axiom3-projection", trial_axiom3});
    out.push_back({"clone-fixes-identity", trial_clone_identity});
    out.push_back({"clone-injective", trial_clone_injective});
    out.push_back({"clone-inverse-identity", trial_clone_inverse});
  } else if (suite == "order") {
    if (order == OrderKind::none)
      throw std::invalid_argument("suite 'order' needs an ordered instance");
    out.push_back({"order-compatibility", trial_order_compat});
    out.push_back({"clone-preserves-sign", trial_clone_sign_preserved});
    out.push_back({"cone-product-closure", trial_cone_closure});
    out.push_back({"cone-trichotomy", trial_cone_trichotomy});
    out.push_back({"compare-left-invariant", trial_compare_left_invariant});
    if (order == OrderKind::bi)
      out.push_back({"compare-right-invariant", trial_compare_right_invariant});
  } else if (suite == "engine") {
    out.push_back({"group-laws", trial_group_laws});
    out.push_back({"expansion-equivalence", trial_expansion_equivalence});
    out.push_back({"projection-homomorphism", trial_project_homomorphism});
    if (sys.pure()) {
      out.push_back({"semidirect-factorization", trial_semidirect});
      out.push_back({"tree-subgroup-conjugacy", trial_tree_conjugacy});
    }
  } else if (suite == "braid") {
    out.push_back({"handle-reduction-sound", trial_reduction_preserves_element});
    out.push_back({"sign-trichotomy", trial_braid_trichotomy});
    out.push_back({"dehornoy-transitive", trial_braid_transitivity});
    out.push_back({"dehornoy-left-invariant", trial_braid_left_invariance});
    out.push_back({"positivity-stable-under-cloning", trial_condition_d_clone});
    out.push_back({"clone-projection-strand-doubles", trial_clone_permutation});
  } else if (suite == "magnus") {
    out.push_back({"magnus-bi-invariant", trial_magnus_bi_invariance});
    out.push_back({"magnus-total-antisymmetric", trial_magnus_total_antisymmetric});
    out.push_back({"magnus-transitive", trial_magnus_transitivity});
    out.push_back({"magnus-expand-multiplicative", trial_magnus_multiplicative});
  } else if (suite == "comb") {
    out.push_back({"comb-recomposition", trial_comb_recomposition});
    out.push_back({"purebraid-bi-invariant", trial_purebraid_bi_invariance});
    out.push_back({"purebraid-positivity-under-cloning", trial_purebraid_clone_positive});
    out.push_back({"purebraid-equal-iff-trivial", trial_purebraid_equal_iff_trivial});
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return out;
}

std::vector<std::string> applicable_suites(const CloningSystem& sys) {
  std::vector<std::string> suites{"axioms"};
  if (sys.order_kind() != OrderKind::none) suites.push_back("order");
  suites.push_back("engine");
  if (sys.name() == "bv") suites.push_back("braid");
  if (sys.name() == "bf") {
    suites.push_back("magnus");
    suites.push_back("comb");
  }
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"all", "axioms", "order", "engine", "braid", "magnus", "comb"};
}

Report run_suite(const TrialConfig& cfg) {
  const CloningSystem& sys = find_instance(cfg.instance);
  auto start = std::chrono::steady_clock::now();
  Report report;
  report.config = cfg;
  std::vector<std::string> suites;
  if (cfg.suite == "all")
    suites = applicable_suites(sys);
  else
    suites = {cfg.suite};
  RandomGen gen(cfg.seed);
  for (const std::string& s : suites) {
    for (const NamedTrial& t : suite_trials(s, sys))
      report.properties.push_back(run_property(t.name, cfg, sys, gen, t.fn));
    // The finite instances additionally get a full sweep at small degree.
    if (s == "axioms" && (sys.name() == "v" || sys.name() == "f")) {
      report.properties.push_back(
          exhaustive_symmetric_axioms(sys, std::min(4, cfg.max_degree)));
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool Report::all_passed() const {
  for (const PropertyResult& p : properties)
    if (!p.ok()) return false;
  return true;
}

std::string Report::render_text() const {
  std::string out = "suite report: instance=" + config.instance + " suite=" + config.suite +
                    " trials=" + std::to_string(config.trials) +
                    " max-degree=" + std::to_string(config.max_degree) +
                    " len=" + std::to_string(config.size_bound) +
                    " seed=" + std::to_string(config.seed) + "\n";
  for (const PropertyResult& p : properties) {
    out += "PROP " + p.name + ": pass=" + std::to_string(p.passed) +
           " fail=" + std::to_string(p.failed);
    if (p.skipped > 0) out += " skip=" + std::to_string(p.skipped);
    out += '\n';
    if (!p.first_counterexample.empty())
      out += "  first counterexample: " + p.first_counterexample + "\n";
  }
  out += all_passed() ? "RESULT: PASS\n" : "RESULT: FAIL\n";
  return out;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string Report::render_json() const {
  std::string out = "{\n";
  out += "  \"instance\": \"" + json_escape(config.instance) + "\",\n";
  out += "  \"suite\": \"" + json_escape(config.suite) + "\",\n";
  out += "  \"trials\": " + std::to_string(config.trials) + ",\n";
  out += "  \"max_degree\": " + std::to_string(config.max_degree) + ",\n";
  out += "  \"len\": " + std::to_string(config.size_bound) + ",\n";
  out += "  \"seed\": " + std::to_string(config.seed) + ",\n";
  out += "  \"properties\": [\n";
  for (size_t i = 0; i < properties.size(); ++i) {
    const PropertyResult& p = properties[i];
    out += "    {\"name\": \"" + json_escape(p.name) + "\", \"pass\": " +
           std::to_string(p.passed) + ", \"fail\": " + std::to_string(p.failed) +
           ", \"skip\": " + std::to_string(p.skipped);
    if (!p.first_counterexample.empty())
      out += ", \"counterexample\": \"" + json_escape(p.first_counterexample) + "\"";
    out += "}";
    if (i + 1 < properties.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n";
  out += std::string("  \"result\": \"") + (all_passed() ? "pass" : "fail") + "\"\n";
  out += "}\n";
  return out;
}

}  // namespace wzt
