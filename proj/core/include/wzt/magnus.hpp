#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "wzt/free_word.hpp"
#include "wzt/order.hpp"

namespace wzt {

using MagnusInt = boost::multiprecision::cpp_int;

/// Monomial in the noncommuting variables X_1..X_k: the sequence of variable
/// indices. Ordered graded-lexicographically (total degree first).
using Monomial = std::vector<int>;

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Truncated noncommutative power series with integer coefficients, used to
/// order free-group elements through the substitution x_i -> 1 + X_i.
/// Coefficients grow combinatorially with word length, hence arbitrary
/// precision.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int truncation_degree);

  static MagnusSeries one(int rank, int truncation_degree);

  int rank() const { return rank_; }
  int truncation_degree() const { return degree_; }

  const std::map<Monomial, MagnusInt, GrlexLess>& terms() const { return terms_; }

  MagnusInt coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const MagnusInt& c);

  /// First nonzero term of (series - constant term) in graded-lex order,
  /// or nullptr-like empty optional encoded as a pair with empty monomial.
  bool lowest_term(Monomial& monomial_out, MagnusInt& coeff_out) const;

  std::string to_text() const;

  bool operator==(const MagnusSeries& other) const {
    return rank_ == other.rank_ && degree_ == other.degree_ && terms_ == other.terms_;
  }

 private:
  int rank_;
  int degree_;
  std::map<Monomial, MagnusInt, GrlexLess> terms_;
};

MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries truncate(const MagnusSeries& a, int degree);

/// Expansion of the word under x_i -> 1 + X_i, truncated to total degree d.
/// An inverse letter contributes the truncated geometric series
/// 1 - X_i + X_i^2 - ...
MagnusSeries magnus_expand(const FreeWord& w, int degree);

/// Bi-invariant total order on the free group: compares the first nonzero
/// term of the expansion of a^{-1} b. The truncation degree starts low and
/// doubles until a nonzero term appears; for a reduced word of length L the
/// lower-central-series depth bounds guarantee success well below the cap
/// of max(16, 4L), so reaching the cap signals a bug.
Ordering magnus_compare(const FreeWord& a, const FreeWord& b);

/// Sign of a single word relative to the identity under the Magnus order.
Sign magnus_sign(const FreeWord& w);

}  // namespace wzt
