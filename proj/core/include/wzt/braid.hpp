#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wzt/free_word.hpp"
#include "wzt/order.hpp"
#include "wzt/permutation.hpp"

namespace wzt {

struct BraidLetter {
  int index;  // generator index i of s_i, 1..strands-1
  int sign;   // +1 or -1
  bool operator==(const BraidLetter&) const = default;
};

/// Word in the braid group on `strands` strands, letters as written.
/// Concatenation in written order is the group product (the left factor's
/// crossings happen first, stacking diagrams bottom to top).
/// Text form: "b3: s1 s2^-1 s1^3" (exponents expand into repeated letters,
/// the empty word prints as "1").
class BraidWord {
 public:
  BraidWord() : strands_(1) {}
  BraidWord(int strands, std::vector<BraidLetter> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }
  static BraidWord generator(int strands, int index, int sign = 1) {
    return BraidWord(strands, {BraidLetter{index, sign}});
  }

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const BraidWord&) const = default;

  std::string to_text() const;
  static BraidWord parse(std::string_view text);

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& u, const BraidWord& v);  // group product, u first

/// Removes adjacent cancelling pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Strand-tracing projection to the symmetric group: start position maps to
/// end position, letters acting in written order. Satisfies
/// braid_permutation(concat(u,v)) = compose(braid_permutation(v),
/// braid_permutation(u)), i.e. it is a homomorphism for the diagram-order
/// product used by the cloning instances.
Permutation braid_permutation(const BraidWord& w);

/// Default step budget for handle reduction; the WZT_STEP_BUDGET environment
/// variable overrides it.
long default_step_budget();

/// Dehornoy handle reduction: repeatedly rewrites the leftmost-closing
/// handle s_i^e v s_i^{-e} (v free of index i and i-1) until none remains.
/// The output represents the same braid and is empty, sigma-positive or
/// sigma-negative. Throws if the step budget is exhausted, which would
/// indicate a bug since the procedure is known to terminate.
BraidWord handle_reduce(const BraidWord& w, long step_budget = default_step_budget());

/// True when the word contains a handle (used to validate handle_reduce).
bool has_handle(const BraidWord& w);

/// Sign of the braid under the Dehornoy order, via handle reduction:
/// positive iff the lowest occurring generator index appears only with
/// exponent +1 in the reduced word.
Sign sigma_positivity(const BraidWord& w, long step_budget = default_step_budget());

/// Left-invariant total order on the braid group: the sign of a^{-1} b
/// decides (positive difference means a < b).
Ordering dehornoy_compare(const BraidWord& a, const BraidWord& b,
                          long step_budget = default_step_budget());

/// Faithful action on the free group of rank = strands:
/// s_i sends x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i, fixing the rest;
/// inverse letters act by the inverse substitution. Letters are applied in
/// written order and the result is freely reduced. Two braid words are equal
/// iff they act identically on every generator.
FreeWord artin_act(const BraidWord& w, const FreeWord& x);

/// Element equality via the Artin action.
bool equal_braids(const BraidWord& u, const BraidWord& v);

/// The degree-raising cloning map on braid words: threads the strand index k
/// through the word letter by letter. On a positive letter s_i the image is
///   s_{i+1}        if k < i,
///   s_{i+1} s_i    if k = i,
///   s_i s_{i+1}    if k = i+1,
///   s_i            if i+1 < k,
/// and the threaded index advances to the letter's transposition applied to
/// k. A negative letter s_i^{-1} maps to the inverse of the image of s_i at
/// the transposed index.
BraidWord clone_braid(int strands, int k, const BraidWord& w);

}  // namespace wzt
