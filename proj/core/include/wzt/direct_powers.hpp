#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wzt/cloning_system.hpp"
#include "wzt/order.hpp"

namespace wzt {

/// Tuple of base-group elements; the degree-n piece of a direct-power
/// cloning system. The shipped base is the integers under addition.
struct PowerElement {
  std::vector<std::int64_t> coordinates;
  int degree() const { return static_cast<int>(coordinates.size()); }
  bool operator==(const PowerElement&) const = default;
};

/// Endomorphism choices for the coordinate-duplicating cloning map. `negate`
/// breaks order preservation; the registry rejects it and it exists only as
/// a negative control for the property harness.
enum class PowerEndo { identity, doubling, negate };

std::int64_t apply_endo(PowerEndo e, std::int64_t v);
std::string to_string(PowerEndo e);
PowerEndo parse_endo(std::string_view text);

/// Cloning map on tuples: coordinate k is replaced by the pair
/// (phi1(g_k), phi2(g_k)); later coordinates shift right.
PowerElement power_clone(const PowerElement& t, int k, PowerEndo phi1, PowerEndo phi2);

/// Lexicographic comparison, first differing coordinate decides.
Ordering power_compare(const PowerElement& a, const PowerElement& b);

/// Cloning system on the direct powers of the integers. The trivial
/// projection makes it pure, and the lexicographic orders are bi-invariant.
/// Construction rejects order-breaking endomorphisms unless
/// `allow_order_breaking` is set (test builds only).
class IntPowerSystem final : public CloningSystem {
 public:
  IntPowerSystem(PowerEndo phi1, PowerEndo phi2, bool allow_order_breaking = false);

  std::string name() const override;
  bool pure() const override { return true; }
  OrderKind order_kind() const override { return OrderKind::bi; }

  Element identity(int degree) const override;
  Element multiply(int degree, const Element& g, const Element& h) const override;
  Element invert(int degree, const Element& g) const override;
  bool equal(int degree, const Element& g, const Element& h) const override;
  Permutation rho(int degree, const Element& g) const override;
  Element clone(int degree, int k, const Element& g) const override;
  Ordering compare(int degree, const Element& g, const Element& h) const override;
  std::string to_text(int degree, const Element& g) const override;
  Element parse(int degree, std::string_view text) const override;
  Element random_element(int degree, int size_bound, RandomGen& gen) const override;

 private:
  const PowerElement& get(int degree, const Element& g) const;
  PowerEndo phi1_, phi2_;
};

}  // namespace wzt
