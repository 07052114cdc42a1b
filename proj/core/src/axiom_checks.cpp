#include "wzt/axiom_checks.hpp"

namespace wzt {

namespace {

std::string describe(const CloningSystem& sys, int n, const Element& g) {
  return sys.to_text(n, g);
}

/// Product of two permutations in diagram order (f acts first, then g).
Permutation diagram_product(const Permutation& f, const Permutation& g) {
  return compose(g, f);
}

}  // namespace

CheckResult check_axiom1(const CloningSystem& sys, int n, int k, const Element& g,
                         const Element& h) {
  Element gh = sys.multiply(n, g, h);
  Element lhs = sys.clone(n, k, gh);
  int shifted = sys.rho(n, g)(k);
  Element rhs = sys.multiply(n + 1, sys.clone(n, k, g), sys.clone(n, shifted, h));
  CheckResult r;
  r.ok = sys.equal(n + 1, lhs, rhs);
  if (!r.ok) {
    r.detail = "axiom1 n=" + std::to_string(n) + " k=" + std::to_string(k) +
               " g=" + describe(sys, n, g) + " h=" + describe(sys, n, h) +
               " lhs=" + describe(sys, n + 1, lhs) + " rhs=" + describe(sys, n + 1, rhs);
  }
  return r;
}

CheckResult check_axiom2(const CloningSystem& sys, int n, int k, int l, const Element& g) {
  if (!(1 <= k && k < l && l <= n))
    throw std::invalid_argument("check_axiom2: need 1 <= k < l <= n");
  Element lhs = sys.clone(n + 1, k, sys.clone(n, l, g));
  Element rhs = sys.clone(n + 1, l + 1, sys.clone(n, k, g));
  CheckResult r;
  r.ok = sys.equal(n + 2, lhs, rhs);
  if (!r.ok) {
    r.detail = "axiom2 n=" + std::to_string(n) + " k=" + std::to_string(k) +
               " l=" + std::to_string(l) + " g=" + describe(sys, n, g) +
               " lhs=" + describe(sys, n + 2, lhs) + " rhs=" + describe(sys, n + 2, rhs);
  }
  return r;
}

CheckResult check_axiom3(const CloningSystem& sys, int n, int k, const Element& g) {
  Permutation actual = sys.rho(n + 1, sys.clone(n, k, g));
  Permutation expanded = sigma_expand(sys.rho(n, g), k);
  CheckResult r;
  if (actual == expanded) {
    r.ok = true;
    r.branch = 0;
    return r;
  }
  Permutation twisted = diagram_product(transposition(n + 1, k), expanded);
  if (actual == twisted) {
    r.ok = true;
    r.branch = 1;
    return r;
  }
  r.ok = false;
  r.detail = "axiom3 n=" + std::to_string(n) + " k=" + std::to_string(k) +
             " g=" + describe(sys, n, g) + " rho(clone)=" + actual.to_text() +
             " expected=" + expanded.to_text() + " or " + twisted.to_text();
  return r;
}

CheckResult check_order_compatibility(const CloningSystem& sys, int n, int k,
                                      const Element& g) {
  if (sys.order_kind() == OrderKind::none)
    throw std::logic_error("check_order_compatibility: instance is unordered");
  if (sys.sign_of(n, g) != Sign::positive)
    throw std::invalid_argument("check_order_compatibility: g must be positive");
  Element cloned = sys.clone(n, k, g);
  CheckResult r;
  r.ok = sys.sign_of(n + 1, cloned) == Sign::positive;
  if (!r.ok) {
    r.detail = "order compatibility n=" + std::to_string(n) + " k=" + std::to_string(k) +
               " g=" + describe(sys, n, g) + " clone=" + describe(sys, n + 1, cloned);
  }
  return r;
}

CheckResult check_clone_inverse_identity(const CloningSystem& sys, int n, int k,
                                         const Element& g) {
  Element lhs = sys.invert(n + 1, sys.clone(n, k, g));
  Element rhs = sys.clone(n, sys.rho(n, g)(k), sys.invert(n, g));
  CheckResult r;
  r.ok = sys.equal(n + 1, lhs, rhs);
  if (!r.ok) {
    r.detail = "clone-inverse n=" + std::to_string(n) + " k=" + std::to_string(k) +
               " g=" + describe(sys, n, g) + " lhs=" + describe(sys, n + 1, lhs) +
               " rhs=" + describe(sys, n + 1, rhs);
  }
  return r;
}

}  // namespace wzt
