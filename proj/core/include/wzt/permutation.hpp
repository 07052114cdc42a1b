#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wzt {

/// Permutation of {1..n} in one-line notation: the i-th entry is the image
/// of i. Indices are one-based throughout the library.
class Permutation {
 public:
  Permutation() = default;  // degree 0
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
  bool is_identity() const;

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

  std::string to_text() const;  // "[2,3,1]"
  static Permutation parse(std::string_view text);

 private:
  std::vector<int> images_;
};

/// compose(f, g) applies g first, then f: the result maps m to f(g(m)).
Permutation compose(const Permutation& f, const Permutation& g);

Permutation invert(const Permutation& g);

/// The transposition swapping k and k+1 inside degree n.
Permutation transposition(int degree, int k);

/// Strand-doubling expansion at strand k: the input strand k is split into
/// two adjacent parallel strands landing at positions g(k) and g(k)+1, and
/// everything is renumbered into degree n+1. Piecewise:
///   m <= k and g(m) <= g(k)  ->  g(m)
///   m <  k and g(m) >  g(k)  ->  g(m) + 1
///   m >  k and g(m-1) <  g(k) -> g(m-1)
///   m >  k and g(m-1) >= g(k) -> g(m-1) + 1
Permutation sigma_expand(const Permutation& g, int k);

}  // namespace wzt
