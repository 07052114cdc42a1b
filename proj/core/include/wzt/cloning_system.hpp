#pragma once

#include <any>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wzt/order.hpp"
#include "wzt/permutation.hpp"
#include "wzt/random.hpp"

namespace wzt {

enum class OrderKind { none, left, bi };

constexpr std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::none: return "none";
    case OrderKind::left: return "left";
    case OrderKind::bi: return "bi";
  }
  return "?";
}

/// Opaque element of a cloning-system instance, tagged only by the degree the
/// caller tracks. Instances own the payload type.
class Element {
 public:
  Element() = default;
  template <class T>
  explicit Element(T value) : payload_(std::move(value)) {}

  template <class T>
  const T& as() const {
    const T* p = std::any_cast<T>(&payload_);
    if (!p) throw std::logic_error("element payload has unexpected type");
    return *p;
  }

  bool has_value() const { return payload_.has_value(); }

 private:
  std::any payload_;
};

/// Contract every cloning-system instance implements: graded groups with a
/// projection to the symmetric groups and degree-raising cloning maps. All
/// operations must be pure; group products are taken in diagram order (the
/// left factor acts first).
class CloningSystem {
 public:
  virtual ~CloningSystem() = default;

  virtual std::string name() const = 0;
  virtual bool pure() const = 0;
  virtual OrderKind order_kind() const = 0;

  virtual Element identity(int degree) const = 0;
  virtual Element multiply(int degree, const Element& g, const Element& h) const = 0;
  virtual Element invert(int degree, const Element& g) const = 0;
  virtual bool equal(int degree, const Element& g, const Element& h) const = 0;

  /// Projection to the symmetric group of the same degree.
  virtual Permutation rho(int degree, const Element& g) const = 0;

  /// Cloning map into degree+1 at strand k, 1 <= k <= degree.
  virtual Element clone(int degree, int k, const Element& g) const = 0;

  /// Three-way comparison under the instance order. Throws std::logic_error
  /// when order_kind() == none.
  virtual Ordering compare(int degree, const Element& g, const Element& h) const = 0;

  virtual std::string to_text(int degree, const Element& g) const = 0;
  virtual Element parse(int degree, std::string_view text) const = 0;

  /// Random element with the given size bound, drawn from `gen`.
  virtual Element random_element(int degree, int size_bound, RandomGen& gen) const = 0;

  bool is_identity(int degree, const Element& g) const {
    return equal(degree, g, identity(degree));
  }
  Sign sign_of(int degree, const Element& g) const {
    if (is_identity(degree, g)) return Sign::zero;
    return compare(degree, identity(degree), g) == Ordering::less ? Sign::positive
                                                                  : Sign::negative;
  }
};

}  // namespace wzt
