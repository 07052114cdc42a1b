#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wzt/braid.hpp"
#include "wzt/cloning_system.hpp"

namespace wzt {

/// Trivial cloning system: every degree carries the one-element group. The
/// associated Thompson-like group is Thompson's F.
class TrivialSystem final : public CloningSystem {
 public:
  std::string name() const override { return "f"; }
  bool pure() const override { return true; }
  OrderKind order_kind() const override { return OrderKind::bi; }
  Element identity(int degree) const override;
  Element multiply(int degree, const Element&, const Element&) const override;
  Element invert(int degree, const Element&) const override;
  bool equal(int degree, const Element&, const Element&) const override;
  Permutation rho(int degree, const Element&) const override;
  Element clone(int degree, int k, const Element&) const override;
  Ordering compare(int degree, const Element&, const Element&) const override;
  std::string to_text(int degree, const Element&) const override;
  Element parse(int degree, std::string_view text) const override;
  Element random_element(int degree, int size_bound, RandomGen& gen) const override;
};

/// Symmetric groups with the strand-doubling cloning maps; the associated
/// Thompson-like group is Thompson's V. Finite groups carry no left order,
/// so compare throws.
class SymmetricSystem final : public CloningSystem {
 public:
  std::string name() const override { return "v"; }
  bool pure() const override { return false; }
  OrderKind order_kind() const override { return OrderKind::none; }
  Element identity(int degree) const override;
  Element multiply(int degree, const Element& g, const Element& h) const override;
  Element invert(int degree, const Element& g) const override;
  bool equal(int degree, const Element& g, const Element& h) const override;
  Permutation rho(int degree, const Element& g) const override;
  Element clone(int degree, int k, const Element& g) const override;
  Ordering compare(int degree, const Element&, const Element&) const override;
  std::string to_text(int degree, const Element& g) const override;
  Element parse(int degree, std::string_view text) const override;
  Element random_element(int degree, int size_bound, RandomGen& gen) const override;
};

/// Braid groups with the strand-splitting cloning maps; the associated group
/// is the braided Thompson group BV. Ordered by the Dehornoy order, which is
/// left-invariant and compatible with cloning.
class BraidSystem final : public CloningSystem {
 public:
  std::string name() const override { return "bv"; }
  bool pure() const override { return false; }
  OrderKind order_kind() const override { return OrderKind::left; }
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
};

/// Pure braid groups with the restricted cloning maps and the trivial
/// projection; the associated group is the pure braided Thompson group BF.
/// Ordered bi-invariantly through Artin combing and the Magnus order.
class PureBraidSystem final : public CloningSystem {
 public:
  std::string name() const override { return "bf"; }
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
};

/// Singletons for the fixed instances.
const TrivialSystem& f_system();
const SymmetricSystem& v_system();
const BraidSystem& bv_system();
const PureBraidSystem& bf_system();

/// Looks up an instance by registry name: "f", "v", "bv", "bf", "dirpow"
/// or "dirpow:int:phi1=<endo>,phi2=<endo>". Throws std::invalid_argument for
/// unknown names. The returned reference stays valid for the process
/// lifetime.
const CloningSystem& find_instance(std::string_view name);

/// Registry names of the shipped instances.
std::vector<std::string> instance_names();

}  // namespace wzt
