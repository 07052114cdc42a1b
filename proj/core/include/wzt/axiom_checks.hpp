#pragma once

#include <string>

#include "wzt/cloning_system.hpp"

namespace wzt {

/// Outcome of one axiom check: on failure `detail` carries the inputs and
/// both sides in text form for CLI display. For the projection axiom,
/// `branch` records which of the two permitted right-hand sides matched
/// (0 = plain expansion, 1 = twisted by the transposition, -1 = failed).
struct CheckResult {
  bool ok = false;
  int branch = -1;
  std::string detail;
};

/// clone(n,k,gh) == clone(n,k,g) * clone(n, rho(g)k, h).
CheckResult check_axiom1(const CloningSystem& sys, int n, int k, const Element& g,
                         const Element& h);

/// Cloning twice commutes after the index shift:
/// clone(n+1,k, clone(n,l,g)) == clone(n+1,l+1, clone(n,k,g)) for k < l.
CheckResult check_axiom2(const CloningSystem& sys, int n, int k, int l, const Element& g);

/// rho(clone(n,k,g)) is the strand-doubling expansion of rho(g) at k, up to a
/// possible twist by the transposition (k, k+1).
CheckResult check_axiom3(const CloningSystem& sys, int n, int k, const Element& g);

/// Requires identity < g; checks identity < clone(n,k,g).
CheckResult check_order_compatibility(const CloningSystem& sys, int n, int k,
                                      const Element& g);

/// Derived from the product axiom: the inverse of a cloned element is the
/// clone of the inverse at the shifted strand,
/// clone(n,k,g)^{-1} == clone(n, rho(g)k, g^{-1}).
CheckResult check_clone_inverse_identity(const CloningSystem& sys, int n, int k,
                                         const Element& g);

}  // namespace wzt
