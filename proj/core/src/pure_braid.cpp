#include "wzt/pure_braid.hpp"

#include <stdexcept>

#include "wzt/magnus.hpp"

namespace wzt {

bool is_pure(const BraidWord& w) { return braid_permutation(w).is_identity(); }

BraidWord band_generator(int strands, int i, int j) {
  if (!(1 <= i && i < j && j <= strands))
    throw std::invalid_argument("band_generator: need 1 <= i < j <= strands");
  std::vector<BraidLetter> letters;
  for (int t = j - 1; t > i; --t) letters.push_back(BraidLetter{t, 1});
  letters.push_back(BraidLetter{i, 1});
  letters.push_back(BraidLetter{i, 1});
  for (int t = i + 1; t <= j - 1; ++t) letters.push_back(BraidLetter{t, -1});
  return BraidWord(strands, std::move(letters));
}

namespace {

// Scans the word once, tracking the last strand. Produces both the
// strand-forgetting image (the residue word over one strand fewer) and the
// kernel word of the last strand's loop.
//
// Invariant: the processed prefix equals
//     (kernel word so far) * (embedded residue) * (canonical descent of the
//     last strand to its current position),
// where the canonical descent crosses each strand positively. A crossing of
// the tracked strand either extends/retracts the descent (no emission) or
// closes a loop around the neighbouring puncture, in which case the loop
// letter is emitted twisted by the residue accumulated so far: conjugation
// by the embedded residue acts on the kernel's free basis as the Artin
// action of its inverse.
struct LastStrandScan {
  BraidWord residue;  // over strands-1 strands
  FreeWord kernel;    // rank strands-1
  int final_pos;      // where the tracked strand ends up
};

LastStrandScan scan_last_strand(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) return LastStrandScan{BraidWord::identity(1), FreeWord::identity(0), 1};
  int pos = n;
  std::vector<BraidLetter> residue;
  std::vector<FreeLetter> kernel;
  auto emit = [&](int loop_index, int sign) {
    BraidWord g(n - 1, residue);
    FreeWord twisted = artin_act(invert(g), FreeWord::generator(n - 1, loop_index, sign));
    for (const FreeLetter& l : twisted.letters()) push_reduced(kernel, l);
  };
  for (const BraidLetter& l : w.letters()) {
    const int i = l.index;
    if (i + 1 < pos) {
      residue.push_back(l);
    } else if (i > pos) {
      residue.push_back(BraidLetter{i - 1, l.sign});
    } else if (i == pos) {
      if (l.sign > 0) emit(pos, 1);
      pos += 1;
    } else {  // i == pos - 1
      if (l.sign < 0) emit(pos - 1, -1);
      pos -= 1;
    }
  }
  return LastStrandScan{BraidWord(n - 1, std::move(residue)),
                        FreeWord(n - 1, std::move(kernel)), pos};
}

}  // namespace

BraidWord forget_last_strand(const BraidWord& w) {
  if (!is_pure(w))
    throw std::invalid_argument("forget_last_strand: input braid is not pure");
  return scan_last_strand(w).residue;
}

FreeWord kernel_word(const BraidWord& w) {
  if (!is_pure(w))
    throw std::invalid_argument("kernel_word: input braid is not pure");
  LastStrandScan scan = scan_last_strand(w);
  if (!equal_braids(scan.residue, BraidWord::identity(scan.residue.strands())))
    throw std::invalid_argument(
        "kernel_word: strand-forgetting image is not the trivial braid");
  return scan.kernel;
}

CombedPureBraid comb(const BraidWord& w) {
  if (!is_pure(w)) throw std::invalid_argument("comb: input braid is not pure");
  CombedPureBraid out;
  out.strands = w.strands();
  BraidWord cur = w;
  for (int m = w.strands(); m >= 2; --m) {
    BraidWord projected = forget_last_strand(cur);
    // Re-embed the projection on the first m-1 strands and cancel it, leaving
    // a kernel element of the strand-forgetting map.
    BraidWord lifted(m, projected.letters());
    out.kernels.push_back(kernel_word(concat(cur, invert(lifted))));
    cur = projected;
  }
  return out;
}

BraidWord recompose(const CombedPureBraid& combed) {
  const int n = combed.strands;
  std::vector<BraidLetter> letters;
  for (size_t t = 0; t < combed.kernels.size(); ++t) {
    const int m = n - static_cast<int>(t);  // kernel entry k_m
    for (const FreeLetter& l : combed.kernels[t].letters()) {
      BraidWord band = band_generator(n, l.index, m);
      if (l.sign < 0) band = invert(band);
      letters.insert(letters.end(), band.letters().begin(), band.letters().end());
    }
  }
  return BraidWord(n, std::move(letters));
}

Sign purebraid_sign(const BraidWord& w) {
  if (!is_pure(w)) throw std::invalid_argument("purebraid_sign: braid is not pure");
  CombedPureBraid combed = comb(w);
  // The quotient dominates: k_2 decides first, k_n last. Conjugation twists
  // the deeper kernel entries by commutators with the residue action, so a
  // deepest-first scan would not be conjugation-invariant; the quotient-first
  // scan is (the twist only reaches entries below the deciding one).
  for (auto it = combed.kernels.rbegin(); it != combed.kernels.rend(); ++it) {
    Sign s = magnus_sign(*it);
    if (s != Sign::zero) return s;
  }
  return Sign::zero;
}

Ordering purebraid_compare(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("purebraid_compare: strand count mismatch");
  if (!is_pure(a) || !is_pure(b))
    throw std::invalid_argument("purebraid_compare: both braids must be pure");
  return ordering_from_difference_sign(purebraid_sign(concat(invert(a), b)));
}

}  // namespace wzt
