#pragma once

#include <vector>

#include "wzt/braid.hpp"
#include "wzt/free_word.hpp"
#include "wzt/order.hpp"

namespace wzt {

/// Result of combing a pure braid on n strands: the tuple
/// (k_n, k_{n-1}, ..., k_2), where k_m is a word in the free kernel of the
/// strand-forgetting map on m strands. Generator x_i of k_m stands for the
/// band generator A_{i,m} = (s_{m-1} ... s_{i+1}) s_i^2 (s_{i+1}^{-1} ...
/// s_{m-1}^{-1}).
struct CombedPureBraid {
  int strands = 1;
  std::vector<FreeWord> kernels;  // kernels[0] = k_n, ..., kernels[n-2] = k_2
};

/// True iff every strand returns to its starting position.
bool is_pure(const BraidWord& w);

/// The band generator A_{i,j} as a braid word on `strands` strands.
BraidWord band_generator(int strands, int i, int j);

/// Deletes every crossing of the strand starting (and ending) at the last
/// position, renumbering the remaining generators; the result represents the
/// image under the strand-forgetting homomorphism. Requires a pure input.
BraidWord forget_last_strand(const BraidWord& w);

/// The loop traced by the last strand around the other strands, as a word in
/// x_i = A_{i,n}. Requires a pure input whose strand-forgetting image is the
/// trivial braid. Freely reduced.
FreeWord kernel_word(const BraidWord& w);

/// Artin combing of a pure braid: peel the last strand's kernel word, forget
/// the strand, recurse. Recomposing the tuple yields a braid equal to the
/// input.
CombedPureBraid comb(const BraidWord& w);

/// Rewrites a combed tuple back into a braid word on `strands` strands,
/// mapping x_i of k_m to A_{i,m} and multiplying in tuple order.
BraidWord recompose(const CombedPureBraid& combed);

/// Bi-invariant total order on the pure braid group: comb a^{-1} b and run
/// the entries through the Magnus order, quotient side first (k_2, then k_3,
/// up to k_n); the first nontrivial entry decides.
Ordering purebraid_compare(const BraidWord& a, const BraidWord& b);

/// Sign of a single pure braid under the combing order.
Sign purebraid_sign(const BraidWord& w);

}  // namespace wzt
